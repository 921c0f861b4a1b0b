#ifndef HYPERSEIDEL_EQUITABLE_HPP
#define HYPERSEIDEL_EQUITABLE_HPP

#include <optional>

#include "hyperseidel/seidel.hpp"

namespace hyperseidel {

struct InvalidPartition : HypergraphError {
  using HypergraphError::HypergraphError;
};
struct NotEquitable : HypergraphError {
  using HypergraphError::HypergraphError;
};

/// Ordered blocks of disjoint nonempty vertex lists covering 0..n-1.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  /// Throws InvalidPartition unless the blocks partition [0, n).
  void validate(int n) const;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

/// Witness of a failed equitability check: rows i and i2 of source block r
/// have different row sums over block s.
struct EquitableWitness {
  int block_r, block_s;
  int row_i, row_i2;
  long long sum_i, sum_i2;
};

struct EquitableCheck {
  bool equitable;
  std::optional<EquitableWitness> witness;
};

/// Exact integer check that every block-pair row sum is constant across the
/// rows of the source block.
EquitableCheck check_equitable(const SeidelMatrix& s, const VertexPartition& p);

/// The t x t integer quotient matrix q_rs. Throws NotEquitable when the
/// partition is not equitable.
IntMatrix quotient_matrix(const SeidelMatrix& s, const VertexPartition& p);

/// True iff every real root of the exact quotient characteristic polynomial
/// matches an eigenvalue of s within tol (multiset containment).
bool quotient_spectrum_subset(const SeidelMatrix& s, const VertexPartition& p, double tol);

/// Parse the CLI partition syntax "1|2,3|4-9" (1-based labels, blocks split
/// by '|', ranges allowed) into 0-based blocks.
VertexPartition parse_partition(const std::string& spec);

}  // namespace hyperseidel

#endif
