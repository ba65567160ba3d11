#include "distspec/canonical.hpp"

#include <algorithm>
#include <cstdint>

namespace distspec {

namespace {

using Colors = std::vector<int>;

// Compresses arbitrary ordered labels to dense ranks 0..c-1 and returns c.
template <typename Key>
int rank_by(const std::vector<Key>& keys, Colors& out) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.resize(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Colors colors(n_, 0);
    explore(std::move(colors));
  }

  std::uint64_t best_code() const { return best_code_; }
  const std::vector<Vertex>& best_perm() const { return best_perm_; }

 private:
  // Iterated neighbour-colour refinement to an equitable partition. The
  // signature starts with the old colour, so cells only split and the
  // order of existing cells is kept.
  int refine(Colors& colors) const {
    int count = rank_by(colors, colors);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].push_back(colors[v]);
        std::vector<int> around;
        for (Vertex w : g_.neighbors(v)) around.push_back(colors[w]);
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
      }
      Colors next;
      int next_count = rank_by(sig, next);
      colors = std::move(next);
      if (next_count == count) return count;
      count = next_count;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (g_.neighbor_mask(a) & ~bb) == (g_.neighbor_mask(b) & ~ba);
  }

  void explore(Colors colors) {
    const int count = refine(colors);
    if (count == n_) {
      visit_leaf(colors);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> cell_size(count, 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so their subtrees produce the same leaf codes.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](Vertex t) { return twins(t, v); })) {
        continue;
      }
      tried.push_back(v);
      Colors child(n_);
      for (Vertex u = 0; u < n_; ++u) child[u] = 2 * colors[u] + (u == v ? 0 : 1);
      explore(std::move(child));
    }
  }

  void visit_leaf(const Colors& position) {
    std::uint64_t code = 0;
    int bit = 63;
    // position[v] is the new label of v; walk the new labels in column order.
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[position[v]] = v;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, --bit) {
        if (g_.has_edge(at[i], at[j])) code |= std::uint64_t{1} << bit;
      }
    }
    if (best_perm_.empty() || code < best_code_) {
      best_code_ = code;
      best_perm_.assign(position.begin(), position.end());
    }
  }

  const Graph& g_;
  int n_;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_perm_;
};

void check_order(const Graph& g, int max_order) {
  if (max_order > kCanonicalHardLimit) {
    throw GraphError("canonical max order " + std::to_string(max_order) +
                     " exceeds the hard limit " +
                     std::to_string(kCanonicalHardLimit));
  }
  if (g.order() > max_order) {
    throw GraphError("canonical_key: order " + std::to_string(g.order()) +
                     " exceeds configured max " + std::to_string(max_order));
  }
}

std::string encode_key(int n, std::uint64_t code) {
  const int pairs = n * (n - 1) / 2;
  std::string key(1, static_cast<char>(n));
  for (int byte = 0; byte < (pairs + 7) / 8; ++byte) {
    key.push_back(static_cast<char>((code >> (56 - 8 * byte)) & 0xFF));
  }
  return key;
}

}  // namespace

Canonical canonicalize(const Graph& g, int max_order) {
  check_order(g, max_order);
  if (g.order() == 0) return {encode_key(0, 0), g};
  CanonicalSearch search(g);
  search.run();
  return {encode_key(g.order(), search.best_code()),
          g.relabeled(search.best_perm())};
}

std::vector<Vertex> canonical_labeling(const Graph& g, int max_order) {
  check_order(g, max_order);
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run();
  return search.best_perm();
}

std::string canonical_key(const Graph& g, int max_order) {
  return canonicalize(g, max_order).key;
}

Graph canonical_form(const Graph& g, int max_order) {
  return g.relabeled(canonical_labeling(g, max_order));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int limit = std::max(a.order(), kDefaultCanonicalMaxOrder);
  return canonical_key(a, limit) == canonical_key(b, limit);
}

}  // namespace distspec
