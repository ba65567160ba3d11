#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/spectrum.hpp"

namespace distspec {

enum class BaseKind { kComplete, kPath, kCycle };

Graph make_base(BaseKind kind, int n);

/// Hangs a path of `len` new vertices (labels n, n+1, ...) at `root`.
Graph attach_path(const Graph& g, Vertex root, int len);

/// Base graph G with an edge uv and path lengths k (at u) and l (at v).
struct GraftSite {
  Graph base;
  Vertex u = 0;
  Vertex v = 0;
  int k = 0;
  int l = 0;
};

struct GraftFamily {
  Graph current;                  // G_{k,l}
  std::optional<Graph> toward_u;  // G_{k+1,l-1}; absent when l = 0
  std::optional<Graph> toward_v;  // G_{k-1,l+1}; absent when k = 0
};

/// Labels: base vertices keep theirs, then the u-path (nearest u first),
/// then the v-path.
GraftFamily graft_family(const GraftSite& site);

/// G_{k,l} alone, with the graft_family labeling.
Graph graft(const Graph& base, Vertex u, Vertex v, int k, int l);

/// K_{n-k} with pendant paths of near-equal lengths summing to k. Longer
/// paths sit on the lowest-numbered clique vertices.
Graph g_nk(int n, int k);

/// K_{n-k} with k pendant vertices on clique vertex 0.
Graph k_nk(int n, int k);

struct EdgePartition {
  std::set<Vertex> side_a;       // d(j,a) < d(j,b)
  std::set<Vertex> equidistant;  // d(j,a) = d(j,b)
  std::set<Vertex> side_b;       // d(j,a) > d(j,b)
};

EdgePartition classify_by_edge(const Graph& g, Vertex a, Vertex b);

/// Moves the edges u-t (t in targets) to v-t.
struct RelocationSpec {
  Graph g;
  Vertex u = 0;
  Vertex v = 0;
  std::set<Vertex> c1;  // component of g - u containing v
  std::vector<Vertex> targets;
  std::optional<Vertex> witness;
};

/// Names the first hypothesis clause the spec violates.
class RelocationError : public std::invalid_argument {
 public:
  RelocationError(const std::string& clause, const std::string& detail)
      : std::invalid_argument(clause + ": " + detail), clause(clause) {}
  std::string clause;
};

/// Throws RelocationError; returns normally when every clause holds.
void validate_relocation(const RelocationSpec& spec);

/// Vertex set of the component of g - u that contains v.
std::set<Vertex> component_without(const Graph& g, Vertex u, Vertex v);

Graph relocate_edges(const RelocationSpec& spec);

/// Smallest w outside c1 and u with d_G(w,t) < d_G'(w,t) for every target.
std::optional<Vertex> find_witness(const RelocationSpec& spec, const Graph& g_new);

/// Completes every block to a clique.
Graph block_clique_closure(const Graph& g);

/// True iff d1(i,j) >= d2(i,j) everywhere.
bool distance_dominates(const DistanceMatrix& d1, const DistanceMatrix& d2);

}  // namespace distspec
