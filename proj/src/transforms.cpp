#include "distspec/transforms.hpp"

#include <algorithm>
#include <queue>

namespace distspec {

namespace {

std::vector<Edge> clique_edges(int m) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) e.emplace_back(i, j);
  }
  return e;
}

void require_vertex(const Graph& g, Vertex x, const char* op) {
  if (x < 0 || x >= g.order()) {
    throw GraphError(std::string(op) + ": vertex " + std::to_string(x) +
                     " out of range");
  }
}

std::set<Vertex> neighbors_in(const Graph& g, Vertex x, const std::set<Vertex>& within) {
  std::set<Vertex> out;
  for (Vertex w : g.neighbors(x)) {
    if (within.count(w) != 0) out.insert(w);
  }
  return out;
}

}  // namespace

Graph make_base(BaseKind kind, int n) {
  switch (kind) {
    case BaseKind::kComplete:
      if (n < 1) throw GraphError("complete graph needs n >= 1");
      return Graph(n, clique_edges(n));
    case BaseKind::kPath: {
      if (n < 1) throw GraphError("path needs n >= 1");
      std::vector<Edge> e;
      for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return Graph(n, e);
    }
    case BaseKind::kCycle: {
      if (n < 3) throw GraphError("cycle needs n >= 3");
      std::vector<Edge> e;
      for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      return Graph(n, e);
    }
  }
  throw GraphError("unknown base kind");
}

Graph attach_path(const Graph& g, Vertex root, int len) {
  require_vertex(g, root, "attach_path");
  if (len < 0) throw GraphError("attach_path: negative length");
  if (len == 0) return g;
  std::vector<Edge> e = g.edges();
  Vertex prev = root;
  for (int i = 0; i < len; ++i) {
    const Vertex next = g.order() + i;
    e.emplace_back(prev, next);
    prev = next;
  }
  return Graph(g.order() + len, e);
}

Graph graft(const Graph& base, Vertex u, Vertex v, int k, int l) {
  require_vertex(base, u, "graft");
  require_vertex(base, v, "graft");
  if (!base.has_edge(u, v)) {
    throw GraphError("graft: " + std::to_string(u) + "-" + std::to_string(v) +
                     " is not an edge of the base graph");
  }
  return attach_path(attach_path(base, u, k), v, l);
}

GraftFamily graft_family(const GraftSite& site) {
  GraftFamily out;
  out.current = graft(site.base, site.u, site.v, site.k, site.l);
  if (site.l >= 1) {
    out.toward_u = graft(site.base, site.u, site.v, site.k + 1, site.l - 1);
  }
  if (site.k >= 1) {
    out.toward_v = graft(site.base, site.u, site.v, site.k - 1, site.l + 1);
  }
  return out;
}

Graph g_nk(int n, int k) {
  if (n < 1 || k < 0) throw GraphError("g_nk: need n >= 1 and k >= 0");
  if (k == 0) return make_base(BaseKind::kComplete, n);
  const int m = n - k;
  if (m < 2) {
    throw GraphError("g_nk: family undefined for n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + " (needs k <= n-2)");
  }
  Graph g = make_base(BaseKind::kComplete, m);
  const int base_len = k / m;
  const int extra = k % m;
  for (Vertex i = 0; i < m; ++i) {
    g = attach_path(g, i, base_len + (i < extra ? 1 : 0));
  }
  return g;
}

Graph k_nk(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw GraphError("k_nk: need 0 <= k <= n-1 (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  const int m = n - k;
  std::vector<Edge> e = clique_edges(m);
  for (Vertex p = m; p < n; ++p) e.emplace_back(0, p);
  return Graph(n, e);
}

EdgePartition classify_by_edge(const Graph& g, Vertex a, Vertex b) {
  require_vertex(g, a, "classify_by_edge");
  require_vertex(g, b, "classify_by_edge");
  if (!g.has_edge(a, b)) {
    throw GraphError("classify_by_edge: " + std::to_string(a) + "-" +
                     std::to_string(b) + " is not an edge");
  }
  const auto da = bfs_distances(g, a);
  const auto db = bfs_distances(g, b);
  EdgePartition out;
  for (Vertex j = 0; j < g.order(); ++j) {
    if (j == a || j == b) continue;
    if (da[j] < 0 || db[j] < 0) {
      throw GraphError("classify_by_edge: graph is disconnected");
    }
    if (da[j] < db[j]) {
      out.side_a.insert(j);
    } else if (da[j] == db[j]) {
      out.equidistant.insert(j);
    } else {
      out.side_b.insert(j);
    }
  }
  return out;
}

std::set<Vertex> component_without(const Graph& g, Vertex u, Vertex v) {
  std::set<Vertex> seen{v};
  std::queue<Vertex> frontier;
  frontier.push(v);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(x)) {
      if (w != u && seen.insert(w).second) frontier.push(w);
    }
  }
  return seen;
}

void validate_relocation(const RelocationSpec& spec) {
  const Graph& g = spec.g;
  const auto in_range = [&](Vertex x) { return x >= 0 && x < g.order(); };
  if (!in_range(spec.u) || !in_range(spec.v) || spec.u == spec.v) {
    throw RelocationError("vertices", "u and v must be distinct vertices");
  }
  if (!is_connected(g)) throw RelocationError("connectivity", "graph is disconnected");
  if (!g.has_edge(spec.u, spec.v)) {
    throw RelocationError("vertices", "v is not adjacent to u");
  }
  if (spec.c1 != component_without(g, spec.u, spec.v)) {
    throw RelocationError("component",
                          "c1 is not the component of G-u containing v");
  }
  std::set<Vertex> u_side = neighbors_in(g, spec.u, spec.c1);
  u_side.erase(spec.v);
  if (u_side != neighbors_in(g, spec.v, spec.c1)) {
    throw RelocationError("neighborhood", "N_C1(u) minus v differs from N_C1(v)");
  }
  if (spec.targets.empty()) {
    throw RelocationError("targets", "no targets (vacuous relocation)");
  }
  std::set<Vertex> distinct;
  for (Vertex t : spec.targets) {
    if (!in_range(t)) throw RelocationError("targets", "target out of range");
    if (!distinct.insert(t).second) {
      throw RelocationError("targets", "duplicate target " + std::to_string(t));
    }
    if (!g.has_edge(spec.u, t)) {
      throw RelocationError("target adjacency",
                            "target " + std::to_string(t) + " is not adjacent to u");
    }
    if (spec.c1.count(t) != 0) {
      throw RelocationError("target adjacency",
                            "target " + std::to_string(t) + " lies in c1");
    }
    if (g.has_edge(spec.v, t)) {
      throw RelocationError("target adjacency",
                            "target " + std::to_string(t) + " is adjacent to v");
    }
  }
}

Graph relocate_edges(const RelocationSpec& spec) {
  validate_relocation(spec);
  std::vector<Edge> remove;
  std::vector<Edge> add;
  for (Vertex t : spec.targets) {
    remove.emplace_back(spec.u, t);
    add.emplace_back(spec.v, t);
  }
  Graph out = spec.g.edited(remove, add);
  if (!is_connected(out)) {
    throw RelocationError("connectivity", "relocated graph is disconnected");
  }
  return out;
}

std::optional<Vertex> find_witness(const RelocationSpec& spec, const Graph& g_new) {
  if (spec.targets.empty()) return std::nullopt;
  std::vector<std::vector<int>> before;
  std::vector<std::vector<int>> after;
  for (Vertex t : spec.targets) {
    before.push_back(bfs_distances(spec.g, t));
    after.push_back(bfs_distances(g_new, t));
  }
  for (Vertex w = 0; w < spec.g.order(); ++w) {
    if (w == spec.u || spec.c1.count(w) != 0) continue;
    bool farther = true;
    for (std::size_t s = 0; s < spec.targets.size() && farther; ++s) {
      farther = before[s][w] < after[s][w];
    }
    if (farther) return w;
  }
  return std::nullopt;
}

Graph block_clique_closure(const Graph& g) {
  const BlockDecomposition bd = blocks(g);
  std::vector<Edge> e = g.edges();
  for (const auto& block : bd.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.has_edge(block[i], block[j])) e.emplace_back(block[i], block[j]);
      }
    }
  }
  return Graph(g.order(), e);
}

bool distance_dominates(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  if (d1.order() != d2.order()) {
    throw std::invalid_argument("distance_dominates: dimension mismatch");
  }
  for (int i = 0; i < d1.order(); ++i) {
    for (int j = 0; j < d1.order(); ++j) {
      if (d1(i, j) < d2(i, j)) return false;
    }
  }
  return true;
}

}  // namespace distspec
