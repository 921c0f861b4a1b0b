#ifndef HYPERSEIDEL_SEIDEL_HPP
#define HYPERSEIDEL_SEIDEL_HPP

#include "hyperseidel/hypergraph.hpp"
#include "hyperseidel/linalg.hpp"

namespace hyperseidel {

/// Seidel matrix S = J - I - 2A, kept in exact integer form with a real view
/// derived on demand. Off-diagonal entries are the odd integers 1 - 2c_ij.
class SeidelMatrix {
 public:
  explicit SeidelMatrix(const Hypergraph& h);

  int order() const { return order_; }
  long long operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * order_ + j];
  }

  SymmetricMatrix real_view() const;
  IntMatrix int_view() const;

  long long trace() const;

 private:
  int order_;
  std::vector<long long> entries_;
};

/// Co-degree adjacency matrix: A[i][j] = c_ij (0 on the diagonal).
SymmetricMatrix adjacency_matrix(const Hypergraph& h);

SeidelMatrix seidel_matrix(const Hypergraph& h);

Spectrum seidel_spectrum(const Hypergraph& h, double tol = 1e-12);

/// Sum of absolute values of all Seidel eigenvalues.
double seidel_energy(const Hypergraph& h, double tol = 1e-12);

/// E_S(h - e) - E_S(h); sign classifies the deleted edge.
double energy_delta_on_edge_deletion(const Hypergraph& h, const Edge& e, double tol = 1e-12);

}  // namespace hyperseidel

#endif
