#include "hyperseidel/seidel.hpp"

#include <cmath>

namespace hyperseidel {

SeidelMatrix::SeidelMatrix(const Hypergraph& h)
    : order_(h.num_vertices()),
      entries_(static_cast<size_t>(order_) * order_, 0) {
  if (order_ < 1) throw InvalidParams("SeidelMatrix: empty vertex set");
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (i != j) entries_[static_cast<size_t>(i) * order_ + j] = 1;
  for (const auto& e : h.edges())
    for (size_t a = 0; a < e.size(); ++a)
      for (size_t b = a + 1; b < e.size(); ++b) {
        entries_[static_cast<size_t>(e[a]) * order_ + e[b]] -= 2;
        entries_[static_cast<size_t>(e[b]) * order_ + e[a]] -= 2;
      }
}

SymmetricMatrix SeidelMatrix::real_view() const {
  SymmetricMatrix m(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j) m.set(i, j, static_cast<double>((*this)(i, j)));
  return m;
}

IntMatrix SeidelMatrix::int_view() const {
  IntMatrix m(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

long long SeidelMatrix::trace() const {
  long long t = 0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

SymmetricMatrix adjacency_matrix(const Hypergraph& h) {
  if (h.num_vertices() < 1) throw InvalidParams("adjacency_matrix: empty vertex set");
  SymmetricMatrix a(h.num_vertices());
  for (const auto& e : h.edges())
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        a.set(e[i], e[j], a(e[i], e[j]) + 1);
  return a;
}

SeidelMatrix seidel_matrix(const Hypergraph& h) { return SeidelMatrix(h); }

Spectrum seidel_spectrum(const Hypergraph& h, double tol) {
  return eig_symmetric(seidel_matrix(h).real_view(), tol);
}

double seidel_energy(const Hypergraph& h, double tol) {
  double e = 0;
  for (double v : seidel_spectrum(h, tol).values) e += std::abs(v);
  return e;
}

double energy_delta_on_edge_deletion(const Hypergraph& h, const Edge& e, double tol) {
  return seidel_energy(delete_hyperedge(h, e), tol) - seidel_energy(h, tol);
}

}  // namespace hyperseidel
