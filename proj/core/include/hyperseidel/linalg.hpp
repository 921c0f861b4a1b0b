#ifndef HYPERSEIDEL_LINALG_HPP
#define HYPERSEIDEL_LINALG_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperseidel {

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : LinalgError {
  using LinalgError::LinalgError;
};
struct OrderTooLarge : LinalgError {
  using LinalgError::LinalgError;
};

/// Dense real symmetric matrix. set() mirrors the entry so symmetry holds
/// exactly by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order)
      : order_(order), entries_(static_cast<size_t>(order) * order, 0.0) {
    if (order < 1) throw LinalgError("matrix order must be >= 1");
  }

  int order() const { return order_; }
  double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * order_ + j]; }
  void set(int i, int j, double v) {
    entries_[static_cast<size_t>(i) * order_ + j] = v;
    entries_[static_cast<size_t>(j) * order_ + i] = v;
  }

  double trace() const;
  double frobenius_norm() const;

 private:
  int order_;
  std::vector<double> entries_;
};

/// Dense matrix with arbitrary-precision integer entries (not necessarily
/// symmetric; quotient matrices generally are not).
class IntMatrix {
 public:
  explicit IntMatrix(int order) : order_(order), entries_(static_cast<size_t>(order) * order) {
    if (order < 1) throw LinalgError("matrix order must be >= 1");
  }

  int order() const { return order_; }
  const mpz_class& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * order_ + j];
  }
  mpz_class& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  SymmetricMatrix to_symmetric() const;  // throws if not symmetric
  std::vector<std::vector<double>> to_double() const;

 private:
  int order_;
  std::vector<mpz_class> entries_;
};

/// Integer polynomial, coefficients in ascending degree order. The zero
/// polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& coeff(int d) const;  // 0 if d > degree

  mpz_class eval(const mpz_class& x) const;
  double eval_double(double x) const;

  IntPolynomial negated() const;  // -p
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<mpz_class> coeffs_;
};

struct Spectrum {
  std::vector<double> values;  // descending
  double cluster_tol = 1e-8;

  /// Groups eigenvalues within cluster_tol of each other.
  std::vector<std::pair<double, int>> clusters() const;
};

struct Inertia {
  int n_pos = 0;
  int n_zero = 0;
  int n_neg = 0;
  bool operator==(const Inertia&) const = default;
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, sorted
/// descending. Deterministic for fixed input. Throws NoConvergence if the
/// off-diagonal norm does not drop below tol * ||m||_F within the sweep
/// budget.
Spectrum eig_symmetric(const SymmetricMatrix& m, double tol = 1e-12, int max_sweeps = 100);

/// Exact monic characteristic polynomial det(xI - M) via the
/// Faddeev-LeVerrier recursion; all divisions are exact for integer input.
IntPolynomial char_poly_exact(const IntMatrix& m);

/// All real roots with multiplicity, sorted descending, each within tol of a
/// true root. Sturm isolation on the square-free factors, then bisection and
/// Newton refinement.
std::vector<double> real_roots(const IntPolynomial& p, double tol = 1e-12);

/// Sign changes in the nonzero coefficient sequence, scanned by descending
/// degree.
int sign_variations(const IntPolynomial& p);

/// p(-x)
IntPolynomial negate_variable(const IntPolynomial& p);

Inertia inertia_of(const Spectrum& s, double zero_tol);

}  // namespace hyperseidel

#endif
