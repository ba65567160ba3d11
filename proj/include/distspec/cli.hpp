#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace distspec::cli {

enum class Subcommand { kCompute, kConstruct, kEnumerate, kVerify, kSweep };

struct InputSource {
  enum class Kind { kNone, kFile, kStdin, kInline };
  Kind kind = Kind::kNone;
  std::string value;  // path or graph6 text
};

/// A validated command line. Numeric flags that were not given are empty.
struct Invocation {
  Subcommand subcommand = Subcommand::kCompute;
  InputSource input;

  std::string theorem;  // verify/sweep: 1 2 3 4 cor1 bound mono
  std::string family;   // construct: gnk knk gkl complete path cycle
  std::string base;     // graph6 of a graft base
  std::string other;    // graph6 of the perturbed graph (bound)

  std::optional<int> n, k, l, u, v;
  std::optional<int> cut_vertices, cut_edges;
  std::optional<int> witness;
  std::vector<int> targets;
  int max_len = 4;

  double tol = 1e-10;   // Perron bracket width for compute
  double width = 1e-9;  // bracket width for certified comparisons
  int jobs = 1;
  bool timing = false;
  bool allow_large = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// argv without the program name. Throws UsageError naming the offending
/// token for unknown subcommands or flags, malformed numbers and missing
/// required flags. A help request throws HelpRequested with the text.
Invocation parse(const std::vector<std::string>& args);

struct HelpRequested {
  std::string text;
};

/// Runs the invocation. Results go to `out`, one-line diagnostics to
/// `err`. Exit codes: 0 PASS or success, 1 FAIL, 2 INCONCLUSIVE or error.
int execute(const Invocation& inv, std::istream& in, std::ostream& out,
            std::ostream& err);

/// parse + execute with usage errors reported on `err` (exit code 2).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace distspec::cli
