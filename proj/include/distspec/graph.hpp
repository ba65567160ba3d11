#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Hard ceiling on graph order; adjacency rows are 64-bit masks.
inline constexpr int kMaxOrder = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored normalized (first < second) and
/// sorted; neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Validates the edge list and throws GraphError naming the offending
  /// pair on a loop, duplicate or out-of-range endpoint.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::uint64_t neighbor_mask(Vertex v) const { return mask_[v]; }

  bool has_edge(Vertex a, Vertex b) const {
    return a != b && ((mask_[a] >> b) & 1U) != 0;
  }

  /// Graph with one extra edge; throws if already present.
  Graph with_edge(Vertex a, Vertex b) const;
  /// Graph with the listed edges removed and the others added.
  Graph edited(const std::vector<Edge>& remove,
               const std::vector<Edge>& add) const;
  /// Relabel: vertex v of this graph becomes perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> mask_;
};

/// Maximal pendant path v_0 v_1 ... v_s: deg(v_0) > 2, interior vertices
/// of degree 2, deg(v_s) = 1.
struct PendantPath {
  Vertex root = 0;
  std::vector<Vertex> interior_and_tip;

  int length() const { return static_cast<int>(interior_and_tip.size()); }
  /// Root followed by the path vertices.
  std::vector<Vertex> vertices() const;
};

struct BlockDecomposition {
  std::set<Vertex> cut_vertices;
  std::set<Edge> cut_edges;
  /// Each block as a sorted vertex list; bridges are 2-vertex blocks.
  std::vector<std::vector<Vertex>> blocks;
};

bool is_connected(const Graph& g);

/// Articulation points. Throws GraphError on disconnected input.
std::set<Vertex> cut_vertices(const Graph& g);

/// Bridges, each normalized (first < second).
std::set<Edge> cut_edges(const Graph& g);

BlockDecomposition blocks(const Graph& g);

std::vector<PendantPath> pendant_paths(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

std::string to_string(const Graph& g);

}  // namespace distspec
