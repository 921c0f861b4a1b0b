#ifndef HYPERSEIDEL_CLOSEDFORM_HPP
#define HYPERSEIDEL_CLOSEDFORM_HPP

#include "hyperseidel/equitable.hpp"
#include "hyperseidel/seidel.hpp"

namespace hyperseidel {

/// Bipartition sizes of the complete 3-uniform bipartite hypergraph.
struct C3Params {
  int m;  // |V1|
  int n;  // |V2|
};

enum class DeletionCase {
  Intact,
  TypeI,   // deleted edge has one vertex in V1, two in V2
  TypeII,  // two vertices in V1, one in V2
};

/// Closed-form spectrum: trivial eigenvalues with multiplicities plus the
/// roots of the quotient characteristic polynomial.
struct ClosedSpectrum {
  std::vector<std::pair<double, int>> trivial_values;
  std::vector<double> quotient_roots;

  /// All m+n values merged, sorted descending.
  std::vector<double> full() const;
};

/// Trace of the 2-block quotient: 3m + 3n - 4mn - 2.
long long trace_t(const C3Params& p);

/// Discriminant U(m,n) = T^2 - 4R as an exact integer.
mpz_class u_of(const C3Params& p);

/// Delta U(m,n) = U(m,n+1) - U(m,n) as an exact integer.
mpz_class delta_u(const C3Params& p);

/// L(m,n) = (m-1)(2n-1) + (n-1)(2m-1).
long long l_of(const C3Params& p);

/// Closed-form Seidel energy L(m,n) + sqrt(U(m,n)).
double energy_formula_c3(const C3Params& p);

/// Spectrum of the intact C^3_{m,n}: 2n-1 (m-1 times), 2m-1 (n-1 times) and
/// the pair (T +/- sqrt(U)) / 2.
ClosedSpectrum spectrum_c3(const C3Params& p);

/// Degree-5 polynomials whose roots are the nontrivial eigenvalues after a
/// Type-I (xi1) resp. Type-II (xi2) deletion. Leading coefficient -1.
IntPolynomial xi1(const C3Params& p);
IntPolynomial xi2(const C3Params& p);

/// 5x5 integer quotient matrices for the canonical deleted edges
/// {u1, u_{m+1}, u_{m+2}} (Type-I) and {u1, u2, u_{m+1}} (Type-II), block
/// order matching the canonical partitions below.
IntMatrix quotient_type1(const C3Params& p);
IntMatrix quotient_type2(const C3Params& p);

/// Canonical deleted edges (0-based vertex indices).
Edge canonical_edge(const C3Params& p, DeletionCase c);

/// {V1, V2} for Intact; the 5-block singleton/rest partitions for the two
/// deletion cases, in the block order the quotient matrices use.
VertexPartition canonical_partition(const C3Params& p, DeletionCase c);

/// Checks S v = lambda v exactly in integer arithmetic for the difference
/// vector families, with multiplicities m-1 / n-1 (Intact), m-2 / n-3
/// (Type-I), m-3 / n-2 (Type-II).
bool verify_trivial_eigenvectors(const C3Params& p, DeletionCase which);

/// Exact residual of xi1 at rho = 2m-3. Zero means the factorization claim
/// holds at this (m,n); nonzero is reported, never asserted.
struct FactorizationReport {
  C3Params params;
  mpz_class residual;  // xi1(2m-3)
  bool holds() const { return residual == 0; }
};

FactorizationReport check_factorization_claim(const C3Params& p);

}  // namespace hyperseidel

#endif
