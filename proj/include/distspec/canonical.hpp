#pragma once

#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

inline constexpr int kDefaultCanonicalMaxOrder = 10;
/// n(n-1)/2 adjacency bits must fit a 64-bit word.
inline constexpr int kCanonicalHardLimit = 11;

/// Byte string identifying the isomorphism class of `g`: one byte holding
/// n, then the upper-triangle adjacency bits (graph6 column order, most
/// significant first) of the lexicographically minimal relabeling among
/// the orderings reached by colour refinement and individualization.
///
/// Equal keys iff the graphs are isomorphic. Keys of equal-order graphs
/// compare like their bit strings.
std::string canonical_key(const Graph& g,
                          int max_order = kDefaultCanonicalMaxOrder);

/// Relabeling perm (vertex v -> perm[v]) realising the canonical key.
std::vector<Vertex> canonical_labeling(const Graph& g,
                                       int max_order = kDefaultCanonicalMaxOrder);

/// canonical_labeling applied to g.
Graph canonical_form(const Graph& g, int max_order = kDefaultCanonicalMaxOrder);

struct Canonical {
  std::string key;
  Graph form;
};

/// Key and canonical relabeling from one search.
Canonical canonicalize(const Graph& g, int max_order = kDefaultCanonicalMaxOrder);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace distspec
