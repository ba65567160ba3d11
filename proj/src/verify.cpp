#include "distspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include <Eigen/Eigenvalues>

#include "distspec/canonical.hpp"
#include "distspec/graph6.hpp"

namespace distspec {

using nlohmann::json;

namespace {

// Evaluates fn(i) for i in [0, count) on up to `jobs` threads; results are
// stored by index so the output never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int jobs,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  const std::size_t workers =
      std::min<std::size_t>(std::max(1, jobs), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json bracket_json(const PerronResult& r) {
  return {{"lambda", r.lambda}, {"lower", r.lower}, {"upper", r.upper}};
}

json graph_json(const Graph& g, const PerronResult& r) {
  json j = bracket_json(r);
  j["graph6"] = graph6::encode(g);
  return j;
}

bool same_class(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.order() <= kCanonicalHardLimit &&
         isomorphic(a, b);
}

json vertex_list(const std::vector<Vertex>& v) { return json(v); }

json vertex_list(const std::set<Vertex>& v) {
  return json(std::vector<Vertex>(v.begin(), v.end()));
}

VerificationReport minimizer_report(const std::string& theorem, int n, int k,
                                    const Graph& target,
                                    std::vector<const EnumeratedGraph*> members,
                                    const VerifyOptions& options) {
  Stopwatch clock;
  VerificationReport report;
  report.theorem = theorem;
  report.instance = {{"n", n}, {"k", k}, {"class_size", members.size()},
                     {"target_graph6", graph6::encode(target)}};
  if (members.empty()) {
    throw VerifyError(theorem + ": no connected graph with n=" + std::to_string(n) +
                      " in class k=" + std::to_string(k));
  }
  const std::string target_key = canonical_key(target, kEnumHardLimit);
  const bool target_in_class =
      std::any_of(members.begin(), members.end(),
                  [&](const EnumeratedGraph* m) { return m->key == target_key; });
  report.instance["target_in_class"] = target_in_class;

  double width = options.width;
  std::vector<PerronResult> radii = parallel_map<PerronResult>(
      members.size(), options.jobs, [&](std::size_t i) {
        return perron(members[i]->graph, {width, PerronOptions{}.max_iter});
      });

  const auto argmin = [&] {
    std::size_t best = 0;
    for (std::size_t i = 1; i < radii.size(); ++i) {
      if (radii[i].lambda < radii[best].lambda) best = i;
    }
    return best;
  };
  const auto others_lower = [&](std::size_t best) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (i != best) lo = std::min(lo, radii[i].lower);
    }
    return lo;
  };

  std::size_t best = argmin();
  bool separated = members.size() == 1 || radii[best].upper < others_lower(best);
  while (!separated && width > options.min_width) {
    width = std::max(width / 10, options.min_width);
    const double ceiling = radii[best].upper;
    std::vector<std::size_t> close;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (i == best || radii[i].lower <= ceiling) close.push_back(i);
    }
    auto refined = parallel_map<PerronResult>(close.size(), options.jobs,
                                              [&](std::size_t c) {
      return perron(members[close[c]]->graph, {width, PerronOptions{}.max_iter});
    });
    for (std::size_t c = 0; c < close.size(); ++c) radii[close[c]] = refined[c];
    best = argmin();
    separated = radii[best].upper < others_lower(best);
  }

  report.witness["minimizer"] = graph_json(members[best]->graph, radii[best]);
  if (members.size() > 1) {
    std::size_t runner = best == 0 ? 1 : 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (i != best && radii[i].lambda < radii[runner].lambda) runner = i;
    }
    report.witness["runner_up"] = graph_json(members[runner]->graph, radii[runner]);
  }
  report.instance["final_width"] = width;

  if (!separated) {
    report.outcome = Outcome::kInconclusive;
    report.detail = "minimizer bracket overlaps another class member at width " +
                    std::to_string(width) + "; flagged for exact follow-up";
  } else {
    if (members.size() > 1) report.certified_gap = others_lower(best) - radii[best].upper;
    if (members[best]->key == target_key) {
      report.outcome = Outcome::kPass;
      report.detail = members.size() == 1
                          ? "class has a single member, isomorphic to the target"
                          : "unique certified minimizer is isomorphic to the target";
    } else {
      report.outcome = Outcome::kFail;
      report.detail = "certified minimizer is not isomorphic to the target";
    }
  }
  report.wall_time = clock.seconds();
  return report;
}

std::vector<const EnumeratedGraph*> select(std::span<const EnumeratedGraph> all,
                                           const EnumFilter& filter) {
  std::vector<const EnumeratedGraph*> out;
  for (const auto& item : all) {
    if (matches(item.graph, filter)) out.push_back(&item);
  }
  return out;
}

void require_order(std::span<const EnumeratedGraph> all, int n) {
  for (const auto& item : all) {
    if (item.graph.order() != n) {
      throw VerifyError("enumerated class has graphs of the wrong order");
    }
  }
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "PASS";
    case Outcome::kFail: return "FAIL";
    case Outcome::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

json to_json(const VerificationReport& report, bool include_timing) {
  json j = {{"theorem", report.theorem},
            {"instance", report.instance},
            {"outcome", to_string(report.outcome)},
            {"certified_gap", nullptr},
            {"witness", report.witness},
            {"detail", report.detail}};
  if (report.certified_gap) j["certified_gap"] = *report.certified_gap;
  if (include_timing) j["wall_time"] = report.wall_time;
  return j;
}

CertifiedComparison compare_graphs(const Graph& a, const Graph& b,
                                   const VerifyOptions& options) {
  CertifiedComparison out;
  out.isomorphic = same_class(a, b);
  double width = options.width;
  while (true) {
    out.a = perron(a, {width, PerronOptions{}.max_iter});
    out.b = perron(b, {width, PerronOptions{}.max_iter});
    const SpectralOrdering ord = certified_compare(out.a, out.b);
    out.relation = ord.relation;
    out.gap = ord.gap_lower_bound;
    if (ord.relation != Relation::kIndistinguishable || out.isomorphic ||
        width <= options.min_width) {
      return out;
    }
    width = std::max(width / 10, options.min_width);
  }
}

VerificationReport verify_graft_monotonicity(const GraftSite& site,
                                             const VerifyOptions& options) {
  Stopwatch clock;
  if (site.l < 1 || site.k < site.l) {
    throw VerifyError("graft monotonicity needs k >= l >= 1 (got k=" +
                      std::to_string(site.k) + ", l=" + std::to_string(site.l) + ")");
  }
  const GraftFamily family = graft_family(site);
  VerificationReport report;
  report.theorem = "1";
  report.instance = {{"base_graph6", graph6::encode(site.base)},
                     {"u", site.u}, {"v", site.v}, {"k", site.k}, {"l", site.l},
                     {"current_graph6", graph6::encode(family.current)},
                     {"toward_u_graph6", graph6::encode(*family.toward_u)},
                     {"toward_v_graph6", graph6::encode(*family.toward_v)}};

  const auto describe = [](const CertifiedComparison& c) {
    json j = {{"relation", to_string(c.relation)},
              {"isomorphic", c.isomorphic},
              {"current", bracket_json(c.a)},
              {"shifted", bracket_json(c.b)}};
    if (c.relation == Relation::kLess) j["gap"] = c.gap;
    return j;
  };
  // Equal radii (isomorphic members) and a certified reversal refute the
  // strict inequality; an unresolved overlap does not.
  const auto refuted = [](const CertifiedComparison& c) {
    return c.isomorphic || c.relation == Relation::kGreater;
  };

  const CertifiedComparison to_u = compare_graphs(family.current, *family.toward_u, options);
  report.witness["toward_u"] = describe(to_u);

  if (site.k > site.l) {
    if (to_u.relation == Relation::kLess) {
      report.outcome = Outcome::kPass;
      report.certified_gap = to_u.gap;
      report.detail = "certified strict increase after shifting toward u";
    } else if (refuted(to_u)) {
      report.outcome = Outcome::kFail;
      report.detail = to_u.isomorphic
                          ? "shifted graph is isomorphic; spectral radii are equal"
                          : "shifted graph has certified smaller spectral radius";
    } else {
      report.outcome = Outcome::kInconclusive;
      report.detail = "brackets overlap at minimum width";
    }
  } else {
    const bool same_shift = same_class(*family.toward_u, *family.toward_v);
    CertifiedComparison to_v = same_shift
        ? to_u
        : compare_graphs(family.current, *family.toward_v, options);
    report.witness["toward_v"] = describe(to_v);
    report.witness["shifts_isomorphic"] = same_shift;
    if (to_u.relation == Relation::kLess || to_v.relation == Relation::kLess) {
      const bool via_u = to_u.relation == Relation::kLess;
      report.outcome = Outcome::kPass;
      report.certified_gap = via_u ? to_u.gap : to_v.gap;
      report.witness["disjunct"] = via_u ? "toward_u" : "toward_v";
      report.detail = std::string("certified strict increase after shifting toward ") +
                      (via_u ? "u" : "v");
    } else if (refuted(to_u) && refuted(to_v)) {
      report.outcome = Outcome::kFail;
      report.detail = "neither shift increases the spectral radius";
    } else {
      report.outcome = Outcome::kInconclusive;
      report.detail = "brackets overlap at minimum width";
    }
  }
  report.wall_time = clock.seconds();
  return report;
}

std::pair<PendantPath, PendantPath> grafted_paths(const GraftSite& site) {
  const int m = site.base.order();
  PendantPath at_u{site.u, {}};
  PendantPath at_v{site.v, {}};
  for (int i = 0; i < site.k; ++i) at_u.interior_and_tip.push_back(m + i);
  for (int i = 0; i < site.l; ++i) at_v.interior_and_tip.push_back(m + site.k + i);
  return {at_u, at_v};
}

VerificationReport verify_pendant_sum(const Graph& g, const PendantPath& p_long,
                                      const PendantPath& p_short) {
  Stopwatch clock;
  const auto check_shape = [&](const PendantPath& p, const char* name) {
    if (p.length() < 1) throw VerifyError(std::string(name) + " path is empty");
    std::vector<Vertex> walk = p.vertices();
    for (Vertex x : walk) {
      if (x < 0 || x >= g.order()) {
        throw VerifyError(std::string(name) + " path leaves the graph");
      }
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      if (!g.has_edge(walk[i], walk[i + 1])) {
        throw VerifyError(std::string(name) + " path is not a walk in the graph");
      }
    }
    for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
      if (g.degree(walk[i]) != 2) {
        throw VerifyError(std::string(name) + " path has an interior vertex of degree != 2");
      }
    }
    if (g.degree(walk.back()) != 1) {
      throw VerifyError(std::string(name) + " path does not end at a degree-1 vertex");
    }
  };
  check_shape(p_long, "long");
  check_shape(p_short, "short");
  if (!g.has_edge(p_long.root, p_short.root)) {
    throw VerifyError("pendant path roots are not adjacent");
  }
  if (p_long.length() <= p_short.length()) {
    throw VerifyError("first pendant path must be strictly longer");
  }

  const DistanceMatrix dm = distance_matrix(g);
  const PerronResult pr = perron(dm);
  const auto mass = [&](const PendantPath& p, bool with_root) {
    double s = with_root ? pr.vector[p.root] : 0.0;
    for (Vertex x : p.interior_and_tip) s += pr.vector[x];
    return s;
  };

  // Eigenvector error: |x - x*| <= sqrt(2) |r|_2 / delta, delta the distance
  // from lambda to the rest of the spectrum.
  const int n = g.order();
  Eigen::MatrixXd dense(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dense(i, j) = dm(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  double separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < n; ++i) separation = std::min(separation, pr.lambda - ev(i));
  separation -= 1e-9 * (1.0 + pr.lambda);
  const double r2 = std::sqrt(static_cast<double>(n)) * pr.residual;
  const double vec_err = separation > 0 ? std::sqrt(2.0) * r2 / separation
                                        : std::numeric_limits<double>::infinity();
  const double count = p_long.length() + p_short.length() + 2;
  const double allowance = std::sqrt(count) * vec_err;

  const double long_mass = mass(p_long, true);
  const double short_mass = mass(p_short, true);
  const double margin = long_mass - short_mass;

  VerificationReport report;
  report.theorem = "cor1";
  report.instance = {{"graph6", graph6::encode(g)},
                     {"long_root", p_long.root},
                     {"long_path", vertex_list(p_long.interior_and_tip)},
                     {"short_root", p_short.root},
                     {"short_path", vertex_list(p_short.interior_and_tip)},
                     {"roots_have_degree_above_2",
                      g.degree(p_long.root) > 2 && g.degree(p_short.root) > 2}};
  report.witness = {{"lambda", pr.lambda},
                    {"mass_long_with_root", long_mass},
                    {"mass_short_with_root", short_mass},
                    {"mass_long_without_root", mass(p_long, false)},
                    {"mass_short_without_root", mass(p_short, false)},
                    {"error_allowance", allowance}};
  report.witness["roots_excluded_holds"] =
      mass(p_long, false) - mass(p_short, false) > allowance;
  if (margin > allowance) {
    report.outcome = Outcome::kPass;
    report.certified_gap = margin - allowance;
    report.detail = "Perron mass on the longer path exceeds the shorter (roots included)";
  } else if (margin < -allowance) {
    report.outcome = Outcome::kFail;
    report.detail = "Perron mass on the shorter path is larger (roots included)";
  } else {
    report.outcome = Outcome::kInconclusive;
    report.detail = "mass difference within the eigenvector error allowance";
  }
  report.wall_time = clock.seconds();
  return report;
}

VerificationReport verify_relocation(const RelocationSpec& spec,
                                     const VerifyOptions& options) {
  Stopwatch clock;
  VerificationReport report;
  report.theorem = "2";
  report.instance = {{"graph6", graph6::encode(spec.g)},
                     {"u", spec.u}, {"v", spec.v},
                     {"c1", vertex_list(spec.c1)},
                     {"targets", vertex_list(spec.targets)}};
  Graph g_new;
  try {
    g_new = relocate_edges(spec);
  } catch (const RelocationError& e) {
    report.outcome = Outcome::kInconclusive;
    report.detail = std::string("hypothesis not met: ") + e.what();
    report.witness["failed_clause"] = e.clause;
    report.wall_time = clock.seconds();
    return report;
  }
  report.instance["relocated_graph6"] = graph6::encode(g_new);

  std::optional<Vertex> w = find_witness(spec, g_new);
  if (spec.witness) {
    // A caller-supplied witness must itself satisfy the distance condition.
    const Vertex given = *spec.witness;
    const bool ok = given >= 0 && given < spec.g.order() && given != spec.u &&
                    spec.c1.count(given) == 0 &&
                    std::all_of(spec.targets.begin(), spec.targets.end(), [&](Vertex t) {
                      return bfs_distances(spec.g, t)[given] < bfs_distances(g_new, t)[given];
                    });
    w = ok ? std::optional<Vertex>(given) : std::nullopt;
  }
  if (!w) {
    report.outcome = Outcome::kInconclusive;
    report.detail = "hypothesis not met: no witness vertex";
    report.witness["failed_clause"] = "witness";
    report.wall_time = clock.seconds();
    return report;
  }
  report.instance["witness"] = *w;

  const CertifiedComparison c = compare_graphs(spec.g, g_new, options);
  report.witness["before"] = bracket_json(c.a);
  report.witness["after"] = bracket_json(c.b);
  report.witness["isomorphic"] = c.isomorphic;
  if (c.relation == Relation::kLess) {
    report.outcome = Outcome::kPass;
    report.certified_gap = c.gap;
    report.detail = "certified strict increase after relocation";
  } else if (c.isomorphic || c.relation == Relation::kGreater) {
    report.outcome = Outcome::kFail;
    report.detail = c.isomorphic ? "relocated graph is isomorphic; spectral radii are equal"
                                 : "relocated graph has certified smaller spectral radius";
  } else {
    report.outcome = Outcome::kInconclusive;
    report.detail = "brackets overlap at minimum width";
  }
  report.wall_time = clock.seconds();
  return report;
}

VerificationReport verify_perturbation_bound(const Graph& g_old, const Graph& g_new,
                                             const VerifyOptions& options) {
  Stopwatch clock;
  if (g_old.order() != g_new.order()) {
    throw VerifyError("perturbation bound needs graphs on the same vertex set");
  }
  const DistanceMatrix d_old = distance_matrix(g_old);
  const DistanceMatrix d_new = distance_matrix(g_new);
  const PerronOptions po{std::min(options.width, 1e-10), PerronOptions{}.max_iter};
  const PerronResult p_old = perron(d_old, po);
  const PerronResult p_new = perron(d_new, po);

  // slack = (Λ1(target) - Λ1(source)) - x_source' (D_target - D_source) x_source
  const double forward = (p_new.lambda - p_old.lambda) -
                         quadratic_form_delta(d_old, d_new, p_old.vector);
  const double backward = (p_old.lambda - p_new.lambda) -
                          quadratic_form_delta(d_new, d_old, p_new.vector);

  VerificationReport report;
  report.theorem = "bound";
  report.instance = {{"old_graph6", graph6::encode(g_old)},
                     {"new_graph6", graph6::encode(g_new)},
                     {"tolerance", options.bound_tolerance}};
  report.witness = {{"old", bracket_json(p_old)},
                    {"new", bracket_json(p_new)},
                    {"forward_slack", forward},
                    {"backward_slack", backward}};
  const double worst = std::min(forward, backward);
  if (worst >= -options.bound_tolerance) {
    report.outcome = Outcome::kPass;
    report.detail = "quadratic-form lower bound holds in both directions";
  } else {
    report.outcome = Outcome::kFail;
    report.detail = forward < backward ? "bound violated for old -> new"
                                       : "bound violated for new -> old";
  }
  report.wall_time = clock.seconds();
  return report;
}

VerificationReport verify_distance_monotonicity(const Graph& g,
                                                const VerifyOptions& options) {
  Stopwatch clock;
  const Graph closure = block_clique_closure(g);
  const DistanceMatrix d = distance_matrix(g);
  const DistanceMatrix dc = distance_matrix(closure);
  const bool dominates = distance_dominates(d, dc);

  VerificationReport report;
  report.theorem = "mono";
  report.instance = {{"graph6", graph6::encode(g)},
                     {"closure_graph6", graph6::encode(closure)},
                     {"closure_is_identity", closure == g}};
  report.witness["distance_dominates"] = dominates;

  if (!dominates) {
    report.outcome = Outcome::kFail;
    report.detail = "closure increased some distance";
  } else if (d == dc) {
    report.outcome = Outcome::kPass;
    report.detail = "distance matrices equal; spectral radii equal";
  } else {
    const CertifiedComparison c = compare_graphs(closure, g, options);
    report.witness["closure"] = bracket_json(c.a);
    report.witness["graph"] = bracket_json(c.b);
    report.witness["relation"] = to_string(c.relation);
    if (c.relation == Relation::kGreater) {
      report.outcome = Outcome::kFail;
      report.detail = "closure has certified larger spectral radius";
    } else {
      report.outcome = Outcome::kPass;
      if (c.relation == Relation::kLess) report.certified_gap = c.gap;
      report.detail = c.relation == Relation::kLess
                          ? "closure has certified smaller spectral radius"
                          : "ordering not certified strict; never larger";
    }
  }
  report.wall_time = clock.seconds();
  return report;
}

VerificationReport verify_min_cut_vertices(int n, int k,
                                           std::span<const EnumeratedGraph> all_connected,
                                           const VerifyOptions& options) {
  if (n < 1 || k < 0 || k > std::max(0, n - 2)) {
    throw VerifyError("cut-vertex minimizer needs 0 <= k <= n-2");
  }
  require_order(all_connected, n);
  return minimizer_report("3", n, k, g_nk(n, k),
                          select(all_connected, EnumFilter{k, std::nullopt}), options);
}

VerificationReport verify_min_cut_vertices(int n, int k, const VerifyOptions& options) {
  if (n < 1 || k < 0 || k > std::max(0, n - 2)) {
    throw VerifyError("cut-vertex minimizer needs 0 <= k <= n-2");
  }
  EnumOptions eo = options.enumeration;
  eo.jobs = options.jobs;
  const auto all = connected_graphs(n, eo);
  return verify_min_cut_vertices(n, k, all, options);
}

VerificationReport verify_min_cut_edges(int n, int k,
                                        std::span<const EnumeratedGraph> all_connected,
                                        const VerifyOptions& options) {
  if (n < 4 || k < 0 || k > n - 1) {
    throw VerifyError("cut-edge minimizer needs n >= 4 and 0 <= k <= n-1");
  }
  require_order(all_connected, n);
  return minimizer_report("4", n, k, k_nk(n, k),
                          select(all_connected, EnumFilter{std::nullopt, k}), options);
}

VerificationReport verify_min_cut_edges(int n, int k, const VerifyOptions& options) {
  if (n < 4 || k < 0 || k > n - 1) {
    throw VerifyError("cut-edge minimizer needs n >= 4 and 0 <= k <= n-1");
  }
  EnumOptions eo = options.enumeration;
  eo.jobs = options.jobs;
  const auto all = connected_graphs(n, eo);
  return verify_min_cut_edges(n, k, all, options);
}

std::vector<VerificationReport> sweep_min_cut_vertices(int n, const VerifyOptions& options) {
  EnumOptions eo = options.enumeration;
  eo.jobs = options.jobs;
  const auto all = connected_graphs(n, eo);
  std::vector<VerificationReport> out;
  for (int k = 0; k <= std::max(0, n - 2); ++k) {
    out.push_back(verify_min_cut_vertices(n, k, all, options));
  }
  return out;
}

std::vector<VerificationReport> sweep_min_cut_edges(int n, const VerifyOptions& options) {
  EnumOptions eo = options.enumeration;
  eo.jobs = options.jobs;
  const auto all = connected_graphs(n, eo);
  std::vector<VerificationReport> out;
  for (int k = 0; k <= n - 1; ++k) {
    if (select(all, EnumFilter{std::nullopt, k}).empty()) continue;
    out.push_back(verify_min_cut_edges(n, k, all, options));
  }
  return out;
}

std::vector<GraftSite> graft_sites(int max_base, int max_total,
                                   const EnumOptions& enumeration) {
  std::vector<GraftSite> out;
  for (int m = 2; m <= max_base; ++m) {
    for (const auto& item : connected_graphs(m, enumeration)) {
      for (auto [a, b] : item.graph.edges()) {
        for (auto [u, v] : {Edge{a, b}, Edge{b, a}}) {
          for (int l = 1; 2 * l <= max_total; ++l) {
            for (int k = l; k + l <= max_total; ++k) {
              out.push_back({item.graph, u, v, k, l});
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<VerificationReport> sweep_graft(int max_base, int max_total,
                                            const VerifyOptions& options) {
  const auto sites = graft_sites(max_base, max_total, options.enumeration);
  return parallel_map<VerificationReport>(sites.size(), options.jobs, [&](std::size_t i) {
    return verify_graft_monotonicity(sites[i], options);
  });
}

std::vector<VerificationReport> sweep_pendant_sum(int max_base, int max_total,
                                                  const VerifyOptions& options) {
  std::vector<GraftSite> sites;
  for (auto& s : graft_sites(max_base, max_total, options.enumeration)) {
    if (s.k > s.l) sites.push_back(std::move(s));
  }
  return parallel_map<VerificationReport>(sites.size(), options.jobs, [&](std::size_t i) {
    const auto [at_u, at_v] = grafted_paths(sites[i]);
    auto r = verify_pendant_sum(graft(sites[i].base, sites[i].u, sites[i].v,
                                      sites[i].k, sites[i].l),
                                at_u, at_v);
    r.instance["base_graph6"] = graph6::encode(sites[i].base);
    r.instance["k"] = sites[i].k;
    r.instance["l"] = sites[i].l;
    return r;
  });
}

std::vector<RelocationSpec> single_vertex_relocations(int max_n, bool with_witness_only,
                                                      const EnumOptions& enumeration) {
  std::vector<RelocationSpec> out;
  for (int m = 2; m <= max_n; ++m) {
    for (const auto& item : connected_graphs(m, enumeration)) {
      const Graph& g = item.graph;
      for (Vertex u = 0; u < m; ++u) {
        for (Vertex v : g.neighbors(u)) {
          if (g.degree(v) != 1) continue;
          std::vector<Vertex> pool;
          for (Vertex t : g.neighbors(u)) {
            if (t != v) pool.push_back(t);
          }
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            RelocationSpec spec{g, u, v, {v}, {}, std::nullopt};
            for (std::size_t i = 0; i < pool.size(); ++i) {
              if ((mask >> i) & 1U) spec.targets.push_back(pool[i]);
            }
            spec.witness = find_witness(spec, relocate_edges(spec));
            if (with_witness_only && !spec.witness) continue;
            out.push_back(std::move(spec));
          }
        }
      }
    }
  }
  return out;
}

std::vector<VerificationReport> sweep_relocation(int max_n, const VerifyOptions& options) {
  const auto specs = single_vertex_relocations(max_n, true, options.enumeration);
  return parallel_map<VerificationReport>(specs.size(), options.jobs, [&](std::size_t i) {
    return verify_relocation(specs[i], options);
  });
}

std::vector<VerificationReport> sweep_perturbation_bound(int max_n,
                                                         const VerifyOptions& options) {
  std::vector<std::pair<Graph, Graph>> pairs;
  for (int m = 2; m <= max_n; ++m) {
    for (const auto& item : connected_graphs(m, options.enumeration)) {
      for (Vertex a = 0; a < m; ++a) {
        for (Vertex b = a + 1; b < m; ++b) {
          if (!item.graph.has_edge(a, b)) {
            pairs.emplace_back(item.graph, item.graph.with_edge(a, b));
          }
        }
      }
    }
  }
  return parallel_map<VerificationReport>(pairs.size(), options.jobs, [&](std::size_t i) {
    return verify_perturbation_bound(pairs[i].first, pairs[i].second, options);
  });
}

std::vector<VerificationReport> sweep_distance_monotonicity(int max_n,
                                                            const VerifyOptions& options) {
  std::vector<Graph> graphs;
  for (int m = 1; m <= max_n; ++m) {
    for (const auto& item : connected_graphs(m, options.enumeration)) {
      graphs.push_back(item.graph);
    }
  }
  return parallel_map<VerificationReport>(graphs.size(), options.jobs, [&](std::size_t i) {
    return verify_distance_monotonicity(graphs[i], options);
  });
}

Outcome aggregate(std::span<const VerificationReport> reports) {
  bool all_pass = true;
  for (const auto& r : reports) {
    if (r.outcome == Outcome::kFail) return Outcome::kFail;
    all_pass = all_pass && r.outcome == Outcome::kPass;
  }
  return all_pass ? Outcome::kPass : Outcome::kInconclusive;
}

}  // namespace distspec
