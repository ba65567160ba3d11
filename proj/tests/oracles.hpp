#pragma once

// Brute-force reference implementations used only by the tests. None of
// these touch the refinement search or the augmentation generator.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Eigenvalues>

#include "distspec/graph.hpp"

namespace oracle {

using distspec::Edge;
using distspec::Graph;
using distspec::Vertex;

/// Upper-triangle bits of g relabeled by perm (v -> perm[v]), pair (i,j)
/// with i<j at bit index j*(j-1)/2 + i counted from the most significant.
inline std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (auto [a, b] : g.edges()) {
    int i = std::min(perm[a], perm[b]);
    int j = std::max(perm[a], perm[b]);
    code |= std::uint64_t{1} << (63 - (j * (j - 1) / 2 + i));
  }
  return code;
}

/// Minimum code over all n! orderings: a complete isomorphism invariant.
inline std::uint64_t min_code(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b);
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

/// Isomorphism classes of connected graphs on n vertices, by trying every
/// edge subset of K_n. Returns min_code per class.
inline std::set<std::uint64_t> connected_classes(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) e.push_back(pairs[p]);
    }
    Graph g(n, e);
    if (connected(g)) classes.insert(min_code(g));
  }
  return classes;
}

/// Articulation points by deleting each vertex in turn.
inline std::set<Vertex> cut_vertices(const Graph& g) {
  std::set<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) {
      if (a != x && b != x) e.emplace_back(a < x ? a : a - 1, b < x ? b : b - 1);
    }
    if (!connected(Graph(g.order() - 1, e))) out.insert(x);
  }
  return out;
}

/// Bridges by deleting each edge in turn.
inline std::set<Edge> cut_edges(const Graph& g) {
  std::set<Edge> out;
  for (auto edge : g.edges()) {
    if (!connected(g.edited({edge}, {}))) out.insert(edge);
  }
  return out;
}

/// Floyd-Warshall distances.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Largest eigenvalue of D(g) from a dense symmetric eigensolver.
inline double spectral_radius(const Graph& g) {
  const auto d = distances(g);
  const int n = g.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = d[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(n - 1);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph random_connected(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) e.emplace_back(i, j);
      }
    }
    Graph g(n, e);
    if (connected(g)) return g;
  }
}

}  // namespace oracle
