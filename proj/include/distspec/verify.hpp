#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "distspec/enumerate.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectrum.hpp"
#include "distspec/transforms.hpp"

namespace distspec {

enum class Outcome { kPass, kFail, kInconclusive };

const char* to_string(Outcome o);

/// One verified theorem instance.
///
/// A PASS that asserts a strict inequality always carries certified_gap > 0
/// taken from disjoint Collatz-Wielandt brackets. A FAIL carries graph6
/// strings and parameters in `instance`/`witness` sufficient to reproduce it.
/// INCONCLUSIVE means the hypotheses were not met or the brackets never
/// separated; it is not a counterexample.
struct VerificationReport {
  std::string theorem;
  nlohmann::json instance = nlohmann::json::object();
  Outcome outcome = Outcome::kInconclusive;
  std::optional<double> certified_gap;
  nlohmann::json witness = nlohmann::json::object();
  std::string detail;
  double wall_time = 0.0;  // seconds
};

/// `include_timing` adds wall_time; leave it off for reproducible output.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);

struct VerifyOptions {
  /// Initial Perron bracket width for comparisons.
  double width = 1e-9;
  /// Narrowest bracket tried before declaring a tie INCONCLUSIVE.
  double min_width = 1e-12;
  /// Slack for the non-strict perturbation inequality.
  double bound_tolerance = 1e-8;
  int jobs = 1;
  EnumOptions enumeration;
};

/// Result of ordering Λ1(a) against Λ1(b), tightening brackets on overlap.
struct CertifiedComparison {
  Relation relation = Relation::kIndistinguishable;
  double gap = 0.0;
  bool isomorphic = false;  // equal spectral radii for certain
  PerronResult a;
  PerronResult b;
};

CertifiedComparison compare_graphs(const Graph& a, const Graph& b,
                                   const VerifyOptions& options = {});

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graft shift: Λ1(G_{k,l}) < Λ1(G_{k+1,l-1}) for k > l >= 1; for k = l one
/// of the two shifted graphs must be certified larger.
VerificationReport verify_graft_monotonicity(const GraftSite& site,
                                             const VerifyOptions& options = {});

/// Perron mass on the longer pendant path (root included) exceeds the mass
/// on the shorter one. The root-excluded sums are logged alongside.
VerificationReport verify_pendant_sum(const Graph& g, const PendantPath& p_long,
                                      const PendantPath& p_short);

/// Pendant-path descriptions of the two paths hung by graft(): root u and
/// the u-path, root v and the v-path.
std::pair<PendantPath, PendantPath> grafted_paths(const GraftSite& site);

/// Edge relocation: Λ1(G) < Λ1(G') when the hypotheses hold and a witness
/// exists. Uses spec.witness when given, otherwise searches for one.
VerificationReport verify_relocation(const RelocationSpec& spec,
                                     const VerifyOptions& options = {});

/// Λ1(G') - Λ1(G) >= x'(D(G') - D(G))x - tol with x the unit Perron vector
/// of G, checked in both directions.
VerificationReport verify_perturbation_bound(const Graph& g_old, const Graph& g_new,
                                             const VerifyOptions& options = {});

/// D(g) dominates D(closure) and Λ1(closure) is never certified larger.
VerificationReport verify_distance_monotonicity(const Graph& g,
                                                const VerifyOptions& options = {});

/// Unique Λ1-minimizer over the connected graphs with n vertices and k cut
/// vertices is g_nk(n, k).
VerificationReport verify_min_cut_vertices(int n, int k,
                                           const VerifyOptions& options = {});
/// Same, over a class the caller already enumerated.
VerificationReport verify_min_cut_vertices(int n, int k,
                                           std::span<const EnumeratedGraph> all_connected,
                                           const VerifyOptions& options = {});

/// Unique Λ1-minimizer over the connected graphs with n vertices and k cut
/// edges is k_nk(n, k).
VerificationReport verify_min_cut_edges(int n, int k,
                                        const VerifyOptions& options = {});
VerificationReport verify_min_cut_edges(int n, int k,
                                        std::span<const EnumeratedGraph> all_connected,
                                        const VerifyOptions& options = {});

// Parameter sweeps. Each returns reports in a fixed order independent of
// options.jobs.

/// Every k in 0..n-2.
std::vector<VerificationReport> sweep_min_cut_vertices(int n, const VerifyOptions& options = {});
/// Every k in 0..n-1 with a nonempty class.
std::vector<VerificationReport> sweep_min_cut_edges(int n, const VerifyOptions& options = {});

/// Every graft site over connected bases of order 2..max_base, both
/// orientations of every edge, k >= l >= 1, k + l <= max_total.
std::vector<GraftSite> graft_sites(int max_base, int max_total, const EnumOptions& enumeration = {});
std::vector<VerificationReport> sweep_graft(int max_base, int max_total,
                                            const VerifyOptions& options = {});
/// Pendant-sum check on every k > l site of the same grid.
std::vector<VerificationReport> sweep_pendant_sum(int max_base, int max_total,
                                                  const VerifyOptions& options = {});

/// Valid relocation specs with a single-vertex c1 over connected graphs of
/// order 2..max_n; `with_witness_only` drops specs lacking a witness.
std::vector<RelocationSpec> single_vertex_relocations(int max_n, bool with_witness_only,
                                                      const EnumOptions& enumeration = {});
std::vector<VerificationReport> sweep_relocation(int max_n, const VerifyOptions& options = {});

/// (G, G+e) for every connected G of order 2..max_n and every non-edge e.
std::vector<VerificationReport> sweep_perturbation_bound(int max_n,
                                                         const VerifyOptions& options = {});

/// Every connected graph of order 1..max_n.
std::vector<VerificationReport> sweep_distance_monotonicity(int max_n,
                                                            const VerifyOptions& options = {});

/// PASS iff every report passes; FAIL if any fails; otherwise INCONCLUSIVE.
Outcome aggregate(std::span<const VerificationReport> reports);

}  // namespace distspec
