#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

inline constexpr int kDefaultEnumMaxOrder = 9;
/// Orders above the default need an explicit raise of max_n; nothing
/// beyond this is supported.
inline constexpr int kEnumHardLimit = 10;

struct EnumOptions {
  int max_n = kDefaultEnumMaxOrder;
  /// Worker threads for the augmentation step; the result does not depend
  /// on it.
  int jobs = 1;
};

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumeratedGraph {
  std::string key;  // canonical_key
  Graph graph;      // canonical form
};

/// One canonical representative per isomorphism class of connected graphs
/// on n vertices, sorted by canonical key. Built by adding a vertex with
/// every nonempty neighbour set to each class of order n-1.
std::vector<EnumeratedGraph> connected_graphs(int n, const EnumOptions& options = {});

struct EnumFilter {
  std::optional<int> cut_vertex_count;
  std::optional<int> cut_edge_count;
};

bool matches(const Graph& g, const EnumFilter& filter);

/// connected_graphs restricted to the filter. At least one count must be
/// given; both may be.
std::vector<EnumeratedGraph> filtered_graphs(int n, const EnumFilter& filter,
                                             const EnumOptions& options = {});

}  // namespace distspec
