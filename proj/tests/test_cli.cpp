#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "distspec/canonical.hpp"
#include "distspec/cli.hpp"
#include "distspec/graph6.hpp"
#include "distspec/serialize.hpp"
#include "distspec/transforms.hpp"

using namespace distspec;
using distspec::cli::Subcommand;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("parse") {
  auto stdin_compute = cli::parse({"compute", "--input", "-"});
  CHECK(stdin_compute.subcommand == Subcommand::kCompute);
  CHECK(stdin_compute.input.kind == cli::InputSource::Kind::kStdin);
  CHECK(stdin_compute.tol == 1e-10);

  auto file_compute = cli::parse({"compute", "--input", "graphs.g6", "--tol", "1e-8"});
  CHECK(file_compute.input.kind == cli::InputSource::Kind::kFile);
  CHECK(file_compute.input.value == "graphs.g6");
  CHECK(file_compute.tol == 1e-8);

  auto thm3 = cli::parse({"verify", "--theorem", "3", "--n", "6", "--k", "2"});
  CHECK(thm3.subcommand == Subcommand::kVerify);
  CHECK(thm3.theorem == "3");
  CHECK(thm3.n == 6);
  CHECK(thm3.k == 2);
  CHECK_FALSE(thm3.l.has_value());
  CHECK(thm3.width == 1e-9);

  auto thm2 = cli::parse({"verify", "--theorem", "2", "--graph", "Cs", "--u", "0", "--v", "1",
                          "--targets", "2,3"});
  CHECK(thm2.targets == std::vector<int>{2, 3});
  CHECK(thm2.input.kind == cli::InputSource::Kind::kInline);

  auto enumerate = cli::parse({"enumerate", "--n", "5", "--cut-edges", "1", "--jobs", "3"});
  CHECK(enumerate.cut_edges == 1);
  CHECK(enumerate.jobs == 3);
}

TEST_CASE("parse errors name the offending token") {
  CHECK_THROWS_WITH_AS(cli::parse({"verify", "--theorem", "9"}), doctest::Contains("9"),
                       cli::UsageError);
  CHECK_THROWS_WITH_AS(cli::parse({"frobnicate"}), doctest::Contains("frobnicate"),
                       cli::UsageError);
  CHECK_THROWS_WITH_AS(cli::parse({"compute", "--graph", "Cs", "--bogus"}),
                       doctest::Contains("--bogus"), cli::UsageError);
  CHECK_THROWS_WITH_AS(cli::parse({"enumerate", "--n", "five"}), doctest::Contains("five"),
                       cli::UsageError);
  CHECK_THROWS_WITH_AS(cli::parse({"verify", "--theorem", "3", "--n", "6"}),
                       doctest::Contains("--k"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse({}), cli::UsageError);
  CHECK_THROWS_AS(cli::parse({"enumerate", "--n", "5", "--cut-edges", "1", "--cut-vertices", "1"}),
                  cli::UsageError);
  CHECK_THROWS_AS(cli::parse({"--help"}), cli::HelpRequested);
}

TEST_CASE("construct") {
  auto knk = run({"construct", "--family", "knk", "--n", "4", "--k", "3"});
  CHECK(knk.code == 0);
  CHECK(knk.out == graph6::encode(k_nk(4, 3)) + "\n");

  auto gkl = run({"construct", "--family", "gkl", "--base", "Bw", "--u", "0", "--v", "1", "--k",
                  "2", "--l", "1"});
  CHECK(gkl.code == 0);
  CHECK(graph6::decode(first_line(gkl.out)) == graft(make_base(BaseKind::kComplete, 3), 0, 1, 2, 1));

  auto bad = run({"construct", "--family", "gnk", "--n", "5", "--k", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}

TEST_CASE("compute") {
  auto k6 = run({"compute", "--graph", graph6::encode(make_base(BaseKind::kComplete, 6))});
  CHECK(k6.code == 0);
  CHECK(k6.out.rfind("{\"lambda\": 5.0", 0) == 0);
  CHECK(perron_from_json(first_line(k6.out)).lambda == doctest::Approx(5.0));

  auto edge_list = run({"compute", "--graph", "4:0-1,1-2,2-3"});
  CHECK(edge_list.code == 0);
  CHECK(perron_from_json(first_line(edge_list.out)).lambda ==
        doctest::Approx(2 + std::sqrt(10.0)));

  auto from_stdin = run({"compute", "--input", "-"}, "Bw\nCs\n");
  CHECK(from_stdin.code == 0);
  CHECK(std::count(from_stdin.out.begin(), from_stdin.out.end(), '\n') == 2);

  auto disconnected = run({"compute", "--graph", "B?"});
  CHECK(disconnected.code == 2);
  CHECK(disconnected.out.empty());

  auto garbage = run({"compute", "--graph", "!!"});
  CHECK(garbage.code == 2);
}

TEST_CASE("enumerate") {
  auto all = run({"enumerate", "--n", "5"});
  CHECK(all.code == 0);
  std::istringstream lines(all.out);
  CHECK(graph6::decode_stream(lines).size() == 21);

  auto bridgeless = run({"enumerate", "--n", "4", "--cut-edges", "0"});
  CHECK(std::count(bridgeless.out.begin(), bridgeless.out.end(), '\n') == 3);

  auto big = run({"enumerate", "--n", "10"});
  CHECK(big.code == 2);
  CHECK(big.err.find("10") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  auto thm4 = run({"verify", "--theorem", "4", "--n", "5", "--k", "1", "--jobs", "1"});
  CHECK(thm4.code == 0);
  auto report = nlohmann::json::parse(thm4.out);
  CHECK(report["outcome"] == "PASS");
  CHECK(report["theorem"] == "4");
  CHECK(report["instance"]["target_in_class"] == true);
  CHECK(canonical_key(graph6::decode(report["witness"]["minimizer"]["graph6"].get<std::string>())) ==
        canonical_key(k_nk(5, 1)));
  CHECK_FALSE(report.contains("wall_time"));

  auto timed = run({"verify", "--theorem", "4", "--n", "5", "--k", "1", "--timing"});
  CHECK(nlohmann::json::parse(timed.out).contains("wall_time"));

  auto fail = run({"verify", "--theorem", "1", "--base", "A_", "--u", "0", "--v", "1", "--k",
                   "1", "--l", "1"});
  CHECK(fail.code == 1);
  CHECK(nlohmann::json::parse(fail.out)["outcome"] == "FAIL");

  auto inconclusive = run({"verify", "--theorem", "2", "--graph", "Cs", "--u", "0", "--v", "1",
                           "--targets", "2,3"});
  CHECK(inconclusive.code == 2);
  CHECK(nlohmann::json::parse(inconclusive.out)["outcome"] == "INCONCLUSIVE");

  auto usage = run({"verify", "--theorem", "9"});
  CHECK(usage.code == 2);
  CHECK(usage.err.rfind("distspec: ", 0) == 0);
}

TEST_CASE("construct, compute and verify pipelines") {
  auto star = run({"construct", "--family", "knk", "--n", "4", "--k", "3"});
  auto computed = run({"compute", "--input", "-"}, star.out);
  CHECK(computed.code == 0);
  CHECK(perron_from_json(first_line(computed.out)).lambda == doctest::Approx(2 + std::sqrt(7.0)));

  auto mono = run({"verify", "--theorem", "mono", "--input", "-"}, star.out);
  CHECK(mono.code == 0);

  const std::string path = "cli_pipeline_test.g6";
  {
    std::ofstream file(path);
    file << star.out;
  }
  auto relocation = run({"verify", "--theorem", "2", "--input", path, "--u", "0", "--v", "1",
                         "--targets", "2"});
  CHECK(relocation.code == 0);
  std::remove(path.c_str());

  auto moved = nlohmann::json::parse(relocation.out)["instance"]["relocated_graph6"].get<std::string>();
  auto bound = run({"verify", "--theorem", "bound", "--graph", first_line(star.out), "--new", moved});
  CHECK(bound.code == 0);

  auto sweep = run({"sweep", "--theorem", "3", "--n", "5", "--jobs", "2"});
  CHECK(sweep.code == 0);
  auto arr = nlohmann::json::parse(sweep.out);
  CHECK(arr.is_array());
  CHECK(arr.size() == 4);
}

TEST_CASE("output is deterministic") {
  auto a = run({"sweep", "--theorem", "4", "--n", "6", "--jobs", "1"});
  auto b = run({"sweep", "--theorem", "4", "--n", "6", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
