#include "distspec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "distspec/canonical.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/graph6.hpp"
#include "distspec/serialize.hpp"
#include "distspec/spectrum.hpp"
#include "distspec/transforms.hpp"
#include "distspec/verify.hpp"

namespace distspec::cli {

namespace {

const std::vector<std::string> kTheorems = {"1", "2", "3", "4", "cor1", "bound", "mono"};
const std::vector<std::string> kFamilies = {"gnk", "knk", "gkl", "complete", "path", "cycle"};

int default_jobs() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

// Optional ints are bound through a plain int and read back via count().
// One flag may be registered on several subcommands; only one is parsed.
struct IntFlag {
  int value = 0;
  std::vector<CLI::Option*> options;

  CLI::Option* bind(CLI::App* app, const std::string& name, const std::string& help) {
    options.push_back(app->add_option(name, value, help));
    return options.back();
  }
  std::optional<int> get() const {
    const bool seen = std::any_of(options.begin(), options.end(),
                                  [](const CLI::Option* o) { return o->count() > 0; });
    return seen ? std::optional<int>(value) : std::nullopt;
  }
};

struct Flags {
  std::string input;
  std::string graph;
  IntFlag n, k, l, u, v, cut_vertices, cut_edges, witness;
};

void add_graph_source(CLI::App* sub, Flags& f) {
  auto* input = sub->add_option("--input", f.input, "graph file (graph6 or n:a-b,... per line), or - for stdin");
  auto* graph = sub->add_option("--graph", f.graph, "inline graph6 or n:a-b,... edge list");
  input->excludes(graph);
}

void require(bool present, const std::string& flag, const std::string& context) {
  if (!present) throw UsageError(context + " requires " + flag);
}

void check_theorem_flags(const Invocation& inv, const std::string& context) {
  const std::string& t = inv.theorem;
  const bool has_graph = inv.input.kind != InputSource::Kind::kNone;
  if (inv.subcommand == Subcommand::kVerify) {
    if (t == "1" || t == "cor1") {
      require(!inv.base.empty(), "--base", context);
      require(inv.u.has_value(), "--u", context);
      require(inv.v.has_value(), "--v", context);
      require(inv.k.has_value(), "--k", context);
      require(inv.l.has_value(), "--l", context);
    } else if (t == "2") {
      require(has_graph, "--graph or --input", context);
      require(inv.u.has_value(), "--u", context);
      require(inv.v.has_value(), "--v", context);
      require(!inv.targets.empty(), "--targets", context);
    } else if (t == "3" || t == "4") {
      require(inv.n.has_value(), "--n", context);
      require(inv.k.has_value(), "--k", context);
    } else if (t == "bound") {
      require(has_graph, "--graph or --input", context);
      require(!inv.other.empty(), "--new", context);
    } else if (t == "mono") {
      require(has_graph, "--graph or --input", context);
    }
  } else {
    require(inv.n.has_value(), "--n", context);
  }
}

// One graph per line: graph6, or an edge list "n:a-b,c-d,..." (a line
// starting with a digit cannot be graph6).
Graph parse_graph_text(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.front()))) {
    return graph6::decode(text);
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw graph6::FormatError("edge list must look like n:a-b,c-d");
  }
  int n = 0;
  std::vector<Edge> edges;
  try {
    n = std::stoi(std::string(text.substr(0, colon)));
    std::string rest(text.substr(colon + 1));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream items(rest);
    std::string item;
    while (items >> item) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw graph6::FormatError("bad edge " + item);
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const int a = std::stoi(item.substr(0, dash), &used_a);
      const int b = std::stoi(item.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != item.size() - dash - 1) {
        throw graph6::FormatError("bad edge " + item);
      }
      edges.emplace_back(a, b);
    }
  } catch (const std::logic_error&) {
    throw graph6::FormatError("malformed edge list " + std::string(text));
  }
  if (n < 0 || n > kMaxOrder) throw graph6::FormatError("order out of range in edge list");
  return Graph(n, edges);
}

std::vector<Graph> parse_graph_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph_text(line));
  }
  return out;
}

std::vector<Graph> read_graphs(const InputSource& src, std::istream& in) {
  switch (src.kind) {
    case InputSource::Kind::kInline:
      return {parse_graph_text(src.value)};
    case InputSource::Kind::kStdin:
      return parse_graph_stream(in);
    case InputSource::Kind::kFile: {
      std::ifstream file(src.value);
      if (!file) throw UsageError("cannot open " + src.value);
      return parse_graph_stream(file);
    }
    case InputSource::Kind::kNone:
      break;
  }
  throw UsageError("no graph given");
}

Graph read_one_graph(const InputSource& src, std::istream& in) {
  auto all = read_graphs(src, in);
  if (all.size() != 1) {
    throw UsageError("expected exactly one graph, got " + std::to_string(all.size()));
  }
  return all.front();
}

EnumOptions enumeration_options(const Invocation& inv, std::ostream& err) {
  EnumOptions eo;
  eo.jobs = inv.jobs;
  if (const char* env = std::getenv("DISTSPEC_MAX_N")) {
    try {
      eo.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DISTSPEC_MAX_N is not a number: ") + env);
    }
  }
  if (inv.allow_large) {
    eo.max_n = std::max(eo.max_n, kEnumHardLimit);
    err << "distspec: warning: order-" << kEnumHardLimit
        << " enumeration visits about 11.7 million classes and takes hours\n";
  }
  return eo;
}

VerifyOptions verify_options(const Invocation& inv, std::ostream& err) {
  VerifyOptions vo;
  vo.width = inv.width;
  vo.jobs = inv.jobs;
  vo.enumeration = enumeration_options(inv, err);
  return vo;
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kPass: return 0;
    case Outcome::kFail: return 1;
    case Outcome::kInconclusive: return 2;
  }
  return 2;
}

GraftSite site_from(const Invocation& inv) {
  return {parse_graph_text(inv.base), *inv.u, *inv.v, *inv.k, *inv.l};
}

VerificationReport run_verify(const Invocation& inv, std::istream& in,
                              const VerifyOptions& vo) {
  const std::string& t = inv.theorem;
  if (t == "1") return verify_graft_monotonicity(site_from(inv), vo);
  if (t == "cor1") {
    const GraftSite site = site_from(inv);
    if (site.k <= site.l) throw VerifyError("cor1 needs k > l");
    const auto [at_u, at_v] = grafted_paths(site);
    return verify_pendant_sum(graft(site.base, site.u, site.v, site.k, site.l), at_u, at_v);
  }
  if (t == "2") {
    RelocationSpec spec;
    spec.g = read_one_graph(inv.input, in);
    spec.u = *inv.u;
    spec.v = *inv.v;
    if (spec.u < 0 || spec.u >= spec.g.order() || spec.v < 0 || spec.v >= spec.g.order()) {
      throw VerifyError("--u/--v out of range");
    }
    spec.c1 = component_without(spec.g, spec.u, spec.v);
    spec.targets = inv.targets;
    spec.witness = inv.witness;
    return verify_relocation(spec, vo);
  }
  if (t == "3") return verify_min_cut_vertices(*inv.n, *inv.k, vo);
  if (t == "4") return verify_min_cut_edges(*inv.n, *inv.k, vo);
  if (t == "bound") {
    return verify_perturbation_bound(read_one_graph(inv.input, in),
                                     parse_graph_text(inv.other), vo);
  }
  return verify_distance_monotonicity(read_one_graph(inv.input, in), vo);
}

std::vector<VerificationReport> run_sweep(const Invocation& inv, const VerifyOptions& vo) {
  const std::string& t = inv.theorem;
  const int n = *inv.n;
  if (t == "1") return sweep_graft(n, inv.max_len, vo);
  if (t == "cor1") return sweep_pendant_sum(n, inv.max_len, vo);
  if (t == "2") return sweep_relocation(n, vo);
  if (t == "3") return sweep_min_cut_vertices(n, vo);
  if (t == "4") return sweep_min_cut_edges(n, vo);
  if (t == "bound") return sweep_perturbation_bound(n, vo);
  return sweep_distance_monotonicity(n, vo);
}

Graph construct(const Invocation& inv) {
  const std::string& f = inv.family;
  const auto need = [&](const std::optional<int>& x, const char* flag) {
    if (!x) throw UsageError("construct --family " + f + " requires " + flag);
    return *x;
  };
  if (f == "gnk") return g_nk(need(inv.n, "--n"), need(inv.k, "--k"));
  if (f == "knk") return k_nk(need(inv.n, "--n"), need(inv.k, "--k"));
  if (f == "complete") return make_base(BaseKind::kComplete, need(inv.n, "--n"));
  if (f == "path") return make_base(BaseKind::kPath, need(inv.n, "--n"));
  if (f == "cycle") return make_base(BaseKind::kCycle, need(inv.n, "--n"));
  if (inv.base.empty()) throw UsageError("construct --family gkl requires --base");
  return graft(parse_graph_text(inv.base), need(inv.u, "--u"), need(inv.v, "--v"),
               need(inv.k, "--k"), need(inv.l, "--l"));
}

}  // namespace

Invocation parse(const std::vector<std::string>& args) {
  Invocation inv;
  Flags f;
  inv.jobs = default_jobs();

  CLI::App app{"Distance spectral radius toolkit", "distspec"};
  app.require_subcommand(1, 1);

  auto* compute = app.add_subcommand("compute", "Perron root of D(G) as JSON");
  add_graph_source(compute, f);
  compute->add_option("--tol", inv.tol, "Perron bracket width")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("construct", "print a family member as graph6");
  build->add_option("--family", inv.family)->required()->check(CLI::IsMember(kFamilies));
  f.n.bind(build, "--n", "order");
  f.k.bind(build, "--k", "cut count or u-path length");
  f.l.bind(build, "--l", "v-path length");
  f.u.bind(build, "--u", "graft vertex u");
  f.v.bind(build, "--v", "graft vertex v");
  build->add_option("--base", inv.base, "graph6 base for gkl");

  auto* enumerate = app.add_subcommand("enumerate", "connected graphs as graph6");
  f.n.bind(enumerate, "--n", "order");
  f.cut_vertices.bind(enumerate, "--cut-vertices", "keep graphs with this many cut vertices")
      ->excludes(f.cut_edges.bind(enumerate, "--cut-edges",
                                  "keep graphs with this many cut edges"));
  enumerate->add_option("--jobs", inv.jobs)->check(CLI::PositiveNumber);
  enumerate->add_flag("--allow-large", inv.allow_large, "permit order 10");

  auto* verify = app.add_subcommand("verify", "verify one theorem instance");
  auto* sweep = app.add_subcommand("sweep", "verify a parameter grid");
  for (auto* sub : {verify, sweep}) {
    sub->add_option("--theorem", inv.theorem)->required()->check(CLI::IsMember(kTheorems));
    sub->add_option("--width", inv.width, "certified comparison bracket width")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", inv.jobs)->check(CLI::PositiveNumber);
    sub->add_flag("--timing", inv.timing, "include wall_time in reports");
    sub->add_flag("--allow-large", inv.allow_large, "permit order 10");
  }
  add_graph_source(verify, f);
  f.n.bind(verify, "--n", "order");
  f.k.bind(verify, "--k", "cut count or u-path length");
  f.l.bind(verify, "--l", "v-path length");
  f.u.bind(verify, "--u", "vertex u");
  f.v.bind(verify, "--v", "vertex v");
  f.witness.bind(verify, "--witness", "relocation witness vertex");
  verify->add_option("--base", inv.base, "graph6 graft base");
  verify->add_option("--new", inv.other, "graph6 of the perturbed graph");
  verify->add_option("--targets", inv.targets, "relocation targets")->delimiter(',');
  f.n.bind(sweep, "--n", "largest order in the grid");
  sweep->add_option("--max-len", inv.max_len, "largest k + l for graft sweeps")
      ->check(CLI::PositiveNumber);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw UsageError("unknown subcommand: " + args.front());
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "compute") inv.subcommand = Subcommand::kCompute;
  else if (name == "construct") inv.subcommand = Subcommand::kConstruct;
  else if (name == "enumerate") inv.subcommand = Subcommand::kEnumerate;
  else if (name == "verify") inv.subcommand = Subcommand::kVerify;
  else inv.subcommand = Subcommand::kSweep;

  const CLI::App* chosen = app.get_subcommands().front();
  if (!chosen->get_options([](const CLI::Option* o) { return o->get_name() == "--input"; })
           .empty()) {
    if (chosen->count("--input") > 0) {
      inv.input = {f.input == "-" ? InputSource::Kind::kStdin : InputSource::Kind::kFile,
                   f.input};
    } else if (chosen->count("--graph") > 0) {
      inv.input = {InputSource::Kind::kInline, f.graph};
    }
  }
  inv.n = f.n.get();
  inv.k = f.k.get();
  inv.l = f.l.get();
  inv.u = f.u.get();
  inv.v = f.v.get();
  inv.cut_vertices = f.cut_vertices.get();
  inv.cut_edges = f.cut_edges.get();
  inv.witness = f.witness.get();

  switch (inv.subcommand) {
    case Subcommand::kCompute:
      if (inv.input.kind == InputSource::Kind::kNone) {
        throw UsageError("compute requires --input or --graph");
      }
      break;
    case Subcommand::kEnumerate:
      require(inv.n.has_value(), "--n", "enumerate");
      break;
    case Subcommand::kVerify:
      check_theorem_flags(inv, "verify --theorem " + inv.theorem);
      break;
    case Subcommand::kSweep:
      check_theorem_flags(inv, "sweep --theorem " + inv.theorem);
      break;
    case Subcommand::kConstruct:
      break;
  }
  return inv;
}

int execute(const Invocation& inv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  try {
    switch (inv.subcommand) {
      case Subcommand::kCompute: {
        for (const Graph& g : read_graphs(inv.input, in)) {
          out << to_json(perron(g, {inv.tol, PerronOptions{}.max_iter})) << "\n";
        }
        return 0;
      }
      case Subcommand::kConstruct:
        out << graph6::encode(construct(inv)) << "\n";
        return 0;
      case Subcommand::kEnumerate: {
        const EnumOptions eo = enumeration_options(inv, err);
        std::vector<EnumeratedGraph> graphs;
        if (inv.cut_vertices || inv.cut_edges) {
          graphs = filtered_graphs(*inv.n, {inv.cut_vertices, inv.cut_edges}, eo);
        } else {
          graphs = connected_graphs(*inv.n, eo);
        }
        for (const auto& item : graphs) out << graph6::encode(item.graph) << "\n";
        return 0;
      }
      case Subcommand::kVerify: {
        const VerificationReport report = run_verify(inv, in, verify_options(inv, err));
        out << to_json(report, inv.timing).dump(2) << "\n";
        return exit_code(report.outcome);
      }
      case Subcommand::kSweep: {
        const auto reports = run_sweep(inv, verify_options(inv, err));
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, inv.timing));
        out << arr.dump(2) << "\n";
        return exit_code(aggregate(reports));
      }
    }
  } catch (const std::exception& e) {
    err << "distspec: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Invocation inv;
  try {
    inv = parse(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "distspec: usage: " << e.what() << "\n";
    return 2;
  }
  return execute(inv, in, out, err);
}

}  // namespace distspec::cli
