#include <doctest.h>

#include <random>
#include <sstream>

#include "distspec/canonical.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"
#include "distspec/transforms.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

Graph path(int n) { return make_base(BaseKind::kPath, n); }
Graph complete(int n) { return make_base(BaseKind::kComplete, n); }
Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
Graph k4_with_pendant() { return attach_path(complete(4), 0, 1); }

}  // namespace

TEST_CASE("build_graph") {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.size() == 3);
  CHECK(tri.neighbors(1) == std::vector<Vertex>{0, 2});

  Graph k2(2, {{0, 1}});
  CHECK(k2.size() == 1);
  CHECK(k2.degree(0) == 1);

  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {0, 1}}), doctest::Contains("(0,1)"), GraphError);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"), GraphError);
  CHECK_THROWS_WITH_AS(Graph(3, {{2, 2}}), doctest::Contains("loop"), GraphError);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 3}}), doctest::Contains("(0,3)"), GraphError);
  CHECK_THROWS_AS(Graph(65, {}), GraphError);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected(2 + trial % 8, 0.4, rng);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(sum == 2 * static_cast<int>(g.size()));
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path(4)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(complete(5)));
}

TEST_CASE("cut_vertices") {
  CHECK(cut_vertices(path(4)) == std::set<Vertex>{1, 2});
  CHECK(cut_vertices(complete(5)).empty());
  CHECK(cut_vertices(k4_with_pendant()) == std::set<Vertex>{0});
  CHECK_THROWS_AS(cut_vertices(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("cut_edges") {
  CHECK(cut_edges(star3()).size() == 3);
  CHECK(cut_edges(make_base(BaseKind::kCycle, 4)).empty());
  CHECK(cut_edges(path(4)) == std::set<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(cut_edges(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("blocks") {
  auto p4 = blocks(path(4));
  CHECK(p4.blocks.size() == 3);
  for (const auto& b : p4.blocks) CHECK(b.size() == 2);
  CHECK(p4.cut_vertices == std::set<Vertex>{1, 2});

  auto kp = blocks(k4_with_pendant());
  CHECK(kp.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {0, 4}});
  CHECK(kp.cut_vertices == std::set<Vertex>{0});

  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto bt = blocks(bowtie);
  CHECK(bt.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
  CHECK(bt.cut_vertices == std::set<Vertex>{2});

  CHECK_THROWS_AS(blocks(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("cut structure agrees with deletion oracles on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(2 + trial % 9, 0.3, rng);
    const auto cv = cut_vertices(g);
    const auto ce = cut_edges(g);
    CHECK(cv == oracle::cut_vertices(g));
    CHECK(ce == oracle::cut_edges(g));
    CHECK(ce.size() <= g.size());
    for (auto [a, b] : ce) {
      if (g.degree(a) >= 2) CHECK(cv.count(a) == 1);
      if (g.degree(b) >= 2) CHECK(cv.count(b) == 1);
    }

    // Blocks partition the edges and meet only in cut vertices.
    const auto bd = blocks(g);
    CHECK(bd.cut_vertices == cv);
    CHECK(bd.cut_edges == ce);
    std::size_t covered = 0;
    for (const auto& b : bd.blocks) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) covered += g.has_edge(b[i], b[j]);
      }
    }
    CHECK(covered == g.size());
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
        std::vector<Vertex> common;
        std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(),
                              bd.blocks[j].begin(), bd.blocks[j].end(),
                              std::back_inserter(common));
        CHECK(common.size() <= 1);
        if (common.size() == 1) CHECK(cv.count(common[0]) == 1);
      }
    }
  }
}

TEST_CASE("blocks of a tree are its edges") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 10; ++n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    const auto bd = blocks(Graph(n, e));
    std::size_t total = 0;
    for (const auto& b : bd.blocks) total += b.size() - 1;
    CHECK(total == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("pendant_paths") {
  auto tail = pendant_paths(attach_path(complete(4), 0, 2));
  REQUIRE(tail.size() == 1);
  CHECK(tail[0].root == 0);
  CHECK(tail[0].length() == 2);
  CHECK(tail[0].interior_and_tip == std::vector<Vertex>{4, 5});

  CHECK(pendant_paths(path(5)).empty());
  CHECK(pendant_paths(path(2)).empty());

  // Spider: centre 0, legs of lengths 1, 2, 3.
  Graph spider = attach_path(attach_path(attach_path(Graph(1, {}), 0, 1), 0, 2), 0, 3);
  auto legs = pendant_paths(spider);
  REQUIRE(legs.size() == 3);
  std::multiset<int> lengths;
  for (const auto& p : legs) {
    CHECK(p.root == 0);
    lengths.insert(p.length());
  }
  CHECK(lengths == std::multiset<int>{1, 2, 3});
}

TEST_CASE("pendant paths satisfy the definition and are disjoint") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(3 + trial % 6, 0.5, rng);
    g = attach_path(attach_path(g, 0, 1 + trial % 3), 1, trial % 2);
    std::set<Vertex> used;
    for (const auto& p : pendant_paths(g)) {
      CHECK(g.degree(p.root) > 2);
      CHECK(g.degree(p.interior_and_tip.back()) == 1);
      auto walk = p.vertices();
      for (std::size_t i = 1; i + 1 < walk.size(); ++i) CHECK(g.degree(walk[i]) == 2);
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) CHECK(g.has_edge(walk[i], walk[i + 1]));
      for (Vertex x : p.interior_and_tip) CHECK(used.insert(x).second);
    }
  }
}

TEST_CASE("graph6 encoding") {
  // Reference strings from the format description.
  CHECK(graph6::encode(Graph(1, {})) == "@");
  CHECK(graph6::encode(complete(4)) == "C~");
  CHECK(graph6::encode(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  CHECK(graph6::decode(">>graph6<<DQc\n") == Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK_THROWS_AS(graph6::decode("D"), graph6::FormatError);
  CHECK_THROWS_AS(graph6::decode("C\x20"), graph6::FormatError);
  CHECK_THROWS_AS(graph6::decode(""), graph6::FormatError);
  CHECK_THROWS_AS(graph6::decode("Bx"), graph6::FormatError);  // padding bit set

  std::istringstream stream("A_\n\nBw\r\n");
  auto graphs = graph6::decode_stream(stream);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == complete(3));
}

TEST_CASE("graph6 round-trips every enumerated graph up to order 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& item : connected_graphs(n)) {
      const std::string text = graph6::encode(item.graph);
      CHECK(graph6::decode(text) == item.graph);
      CHECK(graph6::encode(graph6::decode(text)) == text);
    }
  }
}

TEST_CASE("canonical_key") {
  CHECK(canonical_key(path(4)) == canonical_key(Graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK(canonical_key(star3()) != canonical_key(path(4)));

  // Paw: triangle 0-1-2 with pendant 3 at 0. Brute force over all 4! labelings.
  Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  std::vector<int> perm{0, 1, 2, 3};
  std::set<std::string> keys;
  do {
    keys.insert(canonical_key(paw.relabeled(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(keys.size() == 1);

  CHECK_THROWS_AS(canonical_key(path(11)), GraphError);
  CHECK_NOTHROW(canonical_key(path(11), 11));
  CHECK_THROWS_AS(canonical_key(path(4), 12), GraphError);
}

TEST_CASE("canonical_key is invariant under random relabeling") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 7;
    Graph g = oracle::random_connected(n, 0.5, rng);
    const std::string key = canonical_key(g);
    const Canonical c = canonicalize(g);
    CHECK(c.key == key);
    CHECK(canonical_key(c.form) == key);
    CHECK(oracle::isomorphic(c.form, g));
    for (int r = 0; r < 100; ++r) {
      CHECK(canonical_key(g.relabeled(oracle::random_permutation(n, rng))) == key);
    }
  }
}

TEST_CASE("equal keys iff isomorphic (brute-force oracle)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    Graph a = oracle::random_connected(n, 0.5, rng);
    Graph b = oracle::random_connected(n, 0.5, rng);
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));
  }
  // Regular graphs stress the individualization step: C_6 vs two triangles
  // joined by a matching (prism), both 2- and 3-regular comparisons.
  Graph c6 = make_base(BaseKind::kCycle, 6);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_key(c6) != canonical_key(two_triangles));
  Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(canonical_key(prism) != canonical_key(k33));
}
