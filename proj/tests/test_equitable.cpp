#include "doctest.h"
#include "hyperseidel/closedform.hpp"
#include "hyperseidel/equitable.hpp"

using namespace hyperseidel;

TEST_CASE("partition parser") {
  VertexPartition p = parse_partition("1|2,3|4-9");
  REQUIRE(p.num_blocks() == 3);
  CHECK(p.blocks[0] == std::vector<int>{0});
  CHECK(p.blocks[1] == std::vector<int>{1, 2});
  CHECK(p.blocks[2] == std::vector<int>{3, 4, 5, 6, 7, 8});

  CHECK_THROWS_AS(parse_partition(""), InvalidPartition);
  CHECK_THROWS_AS(parse_partition("1||2"), InvalidPartition);
  CHECK_THROWS_AS(parse_partition("0|1"), InvalidPartition);   // labels are 1-based
  CHECK_THROWS_AS(parse_partition("5-2"), InvalidPartition);   // reversed range
  CHECK_THROWS_AS(parse_partition("1|a"), InvalidPartition);
}

TEST_CASE("partition validation") {
  VertexPartition good{{{0, 1}, {2}}};
  CHECK_NOTHROW(good.validate(3));
  CHECK_THROWS_AS(good.validate(4), InvalidPartition);               // vertex 3 uncovered
  VertexPartition overlap{{{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(overlap.validate(3), InvalidPartition);
  VertexPartition empty_block{{{0, 1, 2}, {}}};
  CHECK_THROWS_AS(empty_block.validate(3), InvalidPartition);
}

TEST_CASE("bipartition of the intact hypergraph is equitable") {
  auto [h, labels] = gen_complete_bipartite(3, 3, 3);
  SeidelMatrix s(h);
  VertexPartition p{{labels.side_a, labels.side_b}};
  EquitableCheck chk = check_equitable(s, p);
  CHECK(chk.equitable);
  CHECK(!chk.witness.has_value());

  IntMatrix q = quotient_matrix(s, p);
  // frozen oracle: row sums of the 6x6 Seidel matrix over the two sides
  CHECK(q(0, 0) == -10);
  CHECK(q(0, 1) == -21);
  CHECK(q(1, 0) == -21);
  CHECK(q(1, 1) == -10);
  CHECK(char_poly_exact(q) == IntPolynomial::from_ints({-341, 20, 1}));
  CHECK(quotient_spectrum_subset(s, p, 1e-7));
}

TEST_CASE("deleting an edge breaks the 2-block partition") {
  auto [h, labels] = gen_complete_bipartite(3, 3, 6);
  Hypergraph hd = delete_hyperedge(h, {0, 3, 4});
  SeidelMatrix s(hd);
  VertexPartition p{{labels.side_a, labels.side_b}};
  EquitableCheck chk = check_equitable(s, p);
  CHECK(!chk.equitable);
  REQUIRE(chk.witness.has_value());
  CHECK(chk.witness->sum_i != chk.witness->sum_i2);
  CHECK_THROWS_AS(quotient_matrix(s, p), NotEquitable);
}

TEST_CASE("canonical 5-block partitions are equitable after deletion") {
  for (DeletionCase c : {DeletionCase::TypeI, DeletionCase::TypeII}) {
    C3Params prm{4, 5};
    auto [h, labels] = gen_complete_bipartite(3, prm.m, prm.n);
    Hypergraph hd = delete_hyperedge(h, canonical_edge(prm, c));
    SeidelMatrix s(hd);
    VertexPartition p = canonical_partition(prm, c);
    CHECK(check_equitable(s, p).equitable);
    CHECK(quotient_spectrum_subset(s, p, 1e-7));
  }
}

TEST_CASE("non-symmetric quotient matrix rejects to_symmetric") {
  auto [h, labels] = gen_complete_bipartite(3, 2, 4);
  SeidelMatrix s(h);
  VertexPartition p{{labels.side_a, labels.side_b}};
  IntMatrix q = quotient_matrix(s, p);
  CHECK(q(0, 1) != q(1, 0));  // blocks differ in size
  CHECK_THROWS_AS(q.to_symmetric(), LinalgError);
}
