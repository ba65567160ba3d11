#include "distspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace distspec {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  std::ostringstream out;
  out << "(" << a << "," << b << ")";
  return out.str();
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) {
    throw GraphError(std::string(op) + ": graph is disconnected");
  }
}

// One lowpoint DFS collecting articulation points, bridges and the
// biconnected components (as edge groups popped off an edge stack).
struct LowpointPass {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  explicit LowpointPass(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void run() {
    if (g.order() == 0) return;
    if (g.order() == 1) {
      out.blocks.push_back({0});
      return;
    }
    visit(0, -1);
  }

  void visit(Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] == -1) {
        ++children;
        edge_stack.emplace_back(u, w);
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) {
          out.cut_edges.insert({std::min(u, w), std::max(u, w)});
        }
        if (low[w] >= disc[u]) {
          if (parent != -1) out.cut_vertices.insert(u);
          pop_block(u, w);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        low[u] = std::min(low[u], disc[w]);
        edge_stack.emplace_back(u, w);
      }
    }
    if (parent == -1 && children > 1) out.cut_vertices.insert(u);
  }

  void pop_block(Vertex u, Vertex w) {
    std::set<Vertex> members;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      members.insert(e.first);
      members.insert(e.second);
      if (e.first == u && e.second == w) break;
    }
    out.blocks.emplace_back(members.begin(), members.end());
  }
};

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges)
    : n_(n), adj_(n), mask_(n, 0) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) +
                     " outside [0, " + std::to_string(kMaxOrder) + "]");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge " + pair_text(a, b) + " has endpoint out of range");
    }
    if (a == b) throw GraphError("edge " + pair_text(a, b) + " is a loop");
    if (has_edge(a, b)) {
      throw GraphError("edge " + pair_text(a, b) + " is a duplicate");
    }
    mask_[a] |= std::uint64_t{1} << b;
    mask_[b] |= std::uint64_t{1} << a;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> e = edges_;
  e.emplace_back(a, b);
  return Graph(n_, e);
}

Graph Graph::edited(const std::vector<Edge>& remove,
                    const std::vector<Edge>& add) const {
  std::set<Edge> kept(edges_.begin(), edges_.end());
  for (auto [a, b] : remove) {
    if (kept.erase({std::min(a, b), std::max(a, b)}) == 0) {
      throw GraphError("cannot remove missing edge " + pair_text(a, b));
    }
  }
  std::vector<Edge> e(kept.begin(), kept.end());
  e.insert(e.end(), add.begin(), add.end());
  return Graph(n_, e);
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw GraphError("relabeling has wrong length");
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [a, b] : edges_) e.emplace_back(perm[a], perm[b]);
  return Graph(n_, e);
}

std::vector<Vertex> PendantPath::vertices() const {
  std::vector<Vertex> out{root};
  out.insert(out.end(), interior_and_tip.begin(), interior_and_tip.end());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::set<Vertex> cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  LowpointPass pass(g);
  pass.run();
  return pass.out.cut_vertices;
}

std::set<Edge> cut_edges(const Graph& g) {
  require_connected(g, "cut_edges");
  LowpointPass pass(g);
  pass.run();
  return pass.out.cut_edges;
}

BlockDecomposition blocks(const Graph& g) {
  require_connected(g, "blocks");
  LowpointPass pass(g);
  pass.run();
  std::sort(pass.out.blocks.begin(), pass.out.blocks.end());
  return pass.out;
}

std::vector<PendantPath> pendant_paths(const Graph& g) {
  std::vector<PendantPath> out;
  for (Vertex tip = 0; tip < g.order(); ++tip) {
    if (g.degree(tip) != 1) continue;
    // Walk inward from the tip while the vertices have degree 2.
    std::vector<Vertex> walk{tip};
    Vertex prev = tip;
    Vertex cur = g.neighbors(tip)[0];
    while (g.degree(cur) == 2) {
      walk.push_back(cur);
      Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) <= 2) continue;  // the whole graph is a path
    PendantPath p;
    p.root = cur;
    p.interior_and_tip.assign(walk.rbegin(), walk.rend());
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.root, a.interior_and_tip) <
           std::tie(b.root, b.interior_and_tip);
  });
  return out;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " {";
  bool first = true;
  for (auto [a, b] : g.edges()) {
    out << (first ? "" : ",") << a << "-" << b;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace distspec
