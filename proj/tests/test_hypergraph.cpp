#include "doctest.h"
#include "hyperseidel/hypergraph.hpp"

using namespace hyperseidel;

TEST_CASE("constructor canonicalizes") {
  Hypergraph h(5, {{4, 1, 2}, {0, 1}, {1, 2, 4}});
  CHECK(h.num_vertices() == 5);
  CHECK(h.num_edges() == 2);  // duplicate dropped
  CHECK(h.edges()[0] == Edge{0, 1});
  CHECK(h.edges()[1] == Edge{1, 2, 4});
  CHECK(h.has_edge({4, 2, 1}));
  CHECK(!h.has_edge({0, 2}));
  CHECK(h.degree(1) == 2);
  CHECK(h.degree(3) == 0);
}

TEST_CASE("constructor rejects bad edges") {
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), InvalidParams);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), InvalidParams);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), IndexOutOfRange);
  CHECK_THROWS_AS(Hypergraph(-1, {}), InvalidParams);
}

TEST_CASE("simplicity, uniformity, connectivity") {
  Hypergraph simple(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(is_simple(simple));
  CHECK(is_k_uniform(simple, 3));
  CHECK(!is_k_uniform(simple, 2));
  CHECK(is_connected(simple));

  Hypergraph contained(4, {{0, 1}, {0, 1, 2}});
  CHECK(!is_simple(contained));

  Hypergraph split(5, {{0, 1}, {2, 3, 4}});
  CHECK(!is_connected(split));
  CHECK(!is_connected(Hypergraph(3, {{0, 1}})));  // isolated vertex 2
  CHECK_THROWS_AS(is_k_uniform(simple, 1), InvalidParams);
}

TEST_CASE("co_degree counts shared edges") {
  Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}, {2, 3}});
  CHECK(co_degree(h, 0, 1) == 2);
  CHECK(co_degree(h, 1, 0) == 2);
  CHECK(co_degree(h, 0, 3) == 1);
  CHECK(co_degree(h, 1, 2) == 1);
  CHECK(co_degree(h, 0, 2) == 1);
  CHECK_THROWS_AS(co_degree(h, 0, 0), InvalidPair);
  CHECK_THROWS_AS(co_degree(h, 0, 4), IndexOutOfRange);
}

TEST_CASE("complete bipartite generator") {
  auto [h, labels] = gen_complete_bipartite(3, 3, 6);
  // C(9,3) - C(3,3) - C(6,3) = 84 - 1 - 20
  CHECK(h.num_edges() == 63);
  CHECK(h.num_vertices() == 9);
  CHECK(labels.side_a == std::vector<int>{0, 1, 2});
  CHECK(labels.side_b.size() == 6);
  CHECK(is_k_uniform(h, 3));
  // co-degrees: n within V1, m within V2, m+n-2 across
  CHECK(co_degree(h, 0, 1) == 6);
  CHECK(co_degree(h, 3, 4) == 3);
  CHECK(co_degree(h, 0, 3) == 7);
  CHECK_THROWS_AS(gen_complete_bipartite(1, 2, 2), InvalidParams);
  CHECK_THROWS_AS(gen_complete_bipartite(3, 0, 2), InvalidParams);
}

TEST_CASE("turan generator, both readings") {
  auto [h, parts] = gen_turan(9, 3, 3);
  CHECK(parts.size() == 3);
  CHECK(parts[0].size() == 3);
  CHECK(h.num_edges() == 81);  // 84 minus three within-part triples

  auto [hs, parts_s] = gen_turan(9, 3, 3, true);
  CHECK(hs.num_edges() == 27);  // one vertex per part

  // uneven split: larger parts first
  auto [h2, parts2] = gen_turan(7, 3, 3);
  CHECK(parts2[0].size() == 3);
  CHECK(parts2[1].size() == 2);
  CHECK(parts2[2].size() == 2);
  CHECK_THROWS_AS(gen_turan(2, 3, 3), InvalidParams);
}

TEST_CASE("delete_hyperedge") {
  Hypergraph h(4, {{0, 1, 2}, {1, 2, 3}});
  Hypergraph hd = delete_hyperedge(h, {2, 1, 0});
  CHECK(hd.num_edges() == 1);
  CHECK(hd.num_vertices() == 4);
  CHECK(hd.has_edge({1, 2, 3}));
  CHECK_THROWS_AS(delete_hyperedge(h, {0, 1, 3}), EdgeNotFound);
}

TEST_CASE("strong deletion removes the vertex and reindexes") {
  Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}, {0, 3, 4}});
  Hypergraph hd = strong_delete_vertex(h, 2);
  CHECK(hd.num_vertices() == 4);
  CHECK(hd.num_edges() == 1);
  CHECK(hd.has_edge({0, 2, 3}));  // old {0,3,4} shifted down
  CHECK_THROWS_AS(strong_delete_vertex(h, 5), IndexOutOfRange);
}

TEST_CASE("strip_incident_edges keeps the vertex") {
  Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}, {0, 3, 4}});
  Hypergraph hd = strip_incident_edges(h, 2);
  CHECK(hd.num_vertices() == 5);
  CHECK(hd.num_edges() == 1);
  CHECK(hd.has_edge({0, 3, 4}));
  CHECK(hd.degree(2) == 0);
}

TEST_CASE("weak deletion audit counters") {
  // duplicate after shrinking
  Hypergraph dup(4, {{0, 1}, {0, 1, 3}});
  WeakDeletionResult r1 = weak_delete_vertex(dup, 3);
  CHECK(r1.hypergraph.num_edges() == 1);
  CHECK(r1.merged_duplicates == 1);
  CHECK(r1.dropped_small == 0);

  // edges shrinking below size 2 are dropped
  Hypergraph small(3, {{0, 2}, {1, 2}});
  WeakDeletionResult r2 = weak_delete_vertex(small, 2);
  CHECK(r2.hypergraph.num_edges() == 0);
  CHECK(r2.dropped_small == 2);

  // containment is preserved and reported, not removed
  Hypergraph cont(4, {{0, 1, 2}, {0, 1, 3}});
  WeakDeletionResult r3 = weak_delete_vertex(cont, 3);
  CHECK(r3.hypergraph.num_edges() == 2);
  CHECK(r3.containments == 1);
  CHECK(!is_simple(r3.hypergraph));
}

TEST_CASE("edge classification against a bipartition") {
  BipartitionLabels labels{{0, 1, 2}, {3, 4, 5}};
  CHECK(classify_edge({0, 3, 4}, labels) == EdgeType::TypeI);
  CHECK(classify_edge({0, 1, 3}, labels) == EdgeType::TypeII);
  CHECK_THROWS_AS(classify_edge({0, 1, 2}, labels), NotClassifiable);
  CHECK_THROWS_AS(classify_edge({3, 4, 5}, labels), NotClassifiable);
  CHECK_THROWS_AS(classify_edge({0, 1}, labels), NotClassifiable);
}
