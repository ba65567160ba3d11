#include "distspec/enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "distspec/canonical.hpp"

namespace distspec {

namespace {

using ClassMap = std::map<std::string, Graph>;

void check_range(int n, const EnumOptions& options) {
  if (options.max_n > kEnumHardLimit) {
    throw EnumerationError("enumeration cap " + std::to_string(options.max_n) +
                           " exceeds the supported limit " +
                           std::to_string(kEnumHardLimit));
  }
  if (n < 1 || n > options.max_n) {
    throw EnumerationError("enumeration order " + std::to_string(n) +
                           " outside [1, " + std::to_string(options.max_n) + "]");
  }
}

// Every one-vertex extension of the parents with index = shard (mod stride).
void extend_shard(const std::vector<EnumeratedGraph>& parents, std::size_t shard,
                  std::size_t stride, int max_order, ClassMap& out) {
  for (std::size_t p = shard; p < parents.size(); p += stride) {
    const Graph& parent = parents[p].graph;
    const int m = parent.order();
    const Vertex fresh = m;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
      std::vector<Edge> e = parent.edges();
      for (Vertex w = 0; w < m; ++w) {
        if ((subset >> w) & 1U) e.emplace_back(w, fresh);
      }
      Graph child(m + 1, e);
      Canonical c = canonicalize(child, max_order);
      out.try_emplace(std::move(c.key), std::move(c.form));
    }
  }
}

std::vector<EnumeratedGraph> extend(const std::vector<EnumeratedGraph>& parents,
                                    int jobs) {
  const int max_order = kEnumHardLimit;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, parents.size()));
  std::vector<ClassMap> partial(workers);
  if (workers == 1) {
    extend_shard(parents, 0, 1, max_order, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(extend_shard, std::cref(parents), w, workers, max_order,
                        std::ref(partial[w]));
    }
    for (auto& t : pool) t.join();
  }
  ClassMap merged = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) merged.merge(partial[w]);

  std::vector<EnumeratedGraph> out;
  out.reserve(merged.size());
  for (auto& [key, g] : merged) out.push_back({key, std::move(g)});
  return out;
}

}  // namespace

std::vector<EnumeratedGraph> connected_graphs(int n, const EnumOptions& options) {
  check_range(n, options);
  Graph single(1, {});
  std::vector<EnumeratedGraph> level{{canonical_key(single), single}};
  for (int m = 2; m <= n; ++m) level = extend(level, options.jobs);
  return level;
}

bool matches(const Graph& g, const EnumFilter& filter) {
  if (filter.cut_vertex_count &&
      static_cast<int>(cut_vertices(g).size()) != *filter.cut_vertex_count) {
    return false;
  }
  if (filter.cut_edge_count &&
      static_cast<int>(cut_edges(g).size()) != *filter.cut_edge_count) {
    return false;
  }
  return true;
}

std::vector<EnumeratedGraph> filtered_graphs(int n, const EnumFilter& filter,
                                             const EnumOptions& options) {
  if (!filter.cut_vertex_count && !filter.cut_edge_count) {
    throw EnumerationError("filter needs a cut-vertex or cut-edge count");
  }
  if ((filter.cut_vertex_count && *filter.cut_vertex_count < 0) ||
      (filter.cut_edge_count && *filter.cut_edge_count < 0)) {
    throw EnumerationError("filter counts must be nonnegative");
  }
  auto all = connected_graphs(n, options);
  std::vector<EnumeratedGraph> out;
  for (auto& item : all) {
    if (matches(item.graph, filter)) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace distspec
