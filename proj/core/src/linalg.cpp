#include "hyperseidel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperseidel {

double SymmetricMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

SymmetricMatrix IntMatrix::to_symmetric() const {
  SymmetricMatrix s(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = i; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i))
        throw LinalgError("IntMatrix::to_symmetric: matrix is not symmetric");
      s.set(i, j, (*this)(i, j).get_d());
    }
  return s;
}

std::vector<std::vector<double>> IntMatrix::to_double() const {
  std::vector<std::vector<double>> out(order_, std::vector<double>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) out[i][j] = (*this)(i, j).get_d();
  return out;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return IntPolynomial(std::move(cs));
}

const mpz_class& IntPolynomial::coeff(int d) const {
  static const mpz_class zero = 0;
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[d];
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::eval_double(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<mpz_class> cs = coeffs_;
  for (auto& c : cs) c = -c;
  return IntPolynomial(std::move(cs));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[d];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || d == 0) os << a.get_str();
    if (d >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::vector<std::pair<double, int>> Spectrum::clusters() const {
  std::vector<std::pair<double, int>> out;
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) <= cluster_tol)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

Spectrum eig_symmetric(const SymmetricMatrix& m, double tol, int max_sweeps) {
  if (tol <= 0) throw LinalgError("eig_symmetric: tol must be positive");
  const int n = m.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  const double norm = m.frobenius_norm();
  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  if (norm > 0) {
    int sweep = 0;
    while (off_norm() > tol * norm) {
      if (++sweep > max_sweeps) throw NoConvergence("eig_symmetric: sweep budget exhausted");
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          const double apq = a[p][q];
          if (apq == 0) continue;
          const double theta = (a[q][q] - a[p][p]) / (2 * apq);
          const double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          for (int k = 0; k < n; ++k) {
            const double akp = a[k][p], akq = a[k][q];
            a[k][p] = c * akp - s * akq;
            a[k][q] = s * akp + c * akq;
          }
          for (int k = 0; k < n; ++k) {
            const double apk = a[p][k], aqk = a[q][k];
            a[p][k] = c * apk - s * aqk;
            a[q][k] = s * apk + c * aqk;
          }
        }
    }
  }

  Spectrum spec;
  spec.values.resize(n);
  for (int i = 0; i < n; ++i) spec.values[i] = a[i][i];
  std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
  spec.cluster_tol = 1e-8 * std::max(1.0, norm);
  return spec;
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
  const int n = m.order();
  if (n > 64) throw OrderTooLarge("char_poly_exact: order > 64");
  // Faddeev-LeVerrier: N_0 = I, c_n = 1;
  //   for k = 1..n: AN = M * N_{k-1}; c_{n-k} = -tr(AN)/k; N_k = AN + c_{n-k} I.
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix nmat(n);
  for (int i = 0; i < n; ++i) nmat(i, i) = 1;
  for (int k = 1; k <= n; ++k) {
    IntMatrix an(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (int l = 0; l < n; ++l) s += m(i, l) * nmat(l, j);
        an(i, j) = s;
      }
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += an(i, i);
    mpz_class ck;
    mpz_divexact_ui(ck.get_mpz_t(), mpz_class(-tr).get_mpz_t(), k);
    c[n - k] = ck;
    nmat = an;
    for (int i = 0; i < n; ++i) nmat(i, i) += ck;
  }
  return IntPolynomial(std::move(c));
}

int sign_variations(const IntPolynomial& p) {
  if (p.is_zero()) throw LinalgError("sign_variations: zero polynomial");
  int variations = 0;
  int prev = 0;
  for (int d = p.degree(); d >= 0; --d) {
    const int s = sgn(p.coeff(d));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

IntPolynomial negate_variable(const IntPolynomial& p) {
  std::vector<mpz_class> cs = p.coeffs();
  for (size_t d = 0; d < cs.size(); ++d)
    if (d % 2 == 1) cs[d] = -cs[d];
  return IntPolynomial(std::move(cs));
}

Inertia inertia_of(const Spectrum& s, double zero_tol) {
  if (zero_tol <= 0) throw LinalgError("inertia_of: zero_tol must be positive");
  Inertia in;
  for (double v : s.values) {
    if (v > zero_tol)
      ++in.n_pos;
    else if (v < -zero_tol)
      ++in.n_neg;
    else
      ++in.n_zero;
  }
  return in;
}

// ---------------------------------------------------------------------------
// Real-root isolation: exact rational polynomial arithmetic, Yun square-free
// decomposition, Sturm chains, rational bisection, Newton polish.

namespace {

using QPoly = std::vector<mpq_class>;  // ascending degree

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int q_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly q_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

mpq_class q_eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// remainder of a / b
QPoly q_rem(QPoly a, const QPoly& b) {
  while (q_deg(a) >= q_deg(b)) {
    mpq_class f = a.back() / b.back();
    int shift = q_deg(a) - q_deg(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    q_trim(a);
    if (a.empty()) break;
  }
  return a;
}

QPoly q_quot(QPoly a, const QPoly& b) {
  QPoly q(std::max(0, q_deg(a) - q_deg(b) + 1));
  while (q_deg(a) >= q_deg(b)) {
    mpq_class f = a.back() / b.back();
    int shift = q_deg(a) - q_deg(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    q_trim(a);
  }
  q_trim(q);
  return q;
}

void q_monic(QPoly& p) {
  if (p.empty()) return;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

QPoly q_gcd(QPoly a, QPoly b) {
  q_trim(a);
  q_trim(b);
  while (!b.empty()) {
    QPoly r = q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  q_monic(a);
  return a;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  q_trim(r);
  return r;
}

// Yun's algorithm: p = prod f_i^i with f_i square-free and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(QPoly p) {
  std::vector<std::pair<QPoly, int>> factors;
  q_trim(p);
  if (q_deg(p) < 1) return factors;
  QPoly dp = q_derivative(p);
  QPoly a = q_gcd(p, dp);
  if (q_deg(a) == 0) {
    q_monic(p);
    factors.emplace_back(p, 1);
    return factors;
  }
  QPoly b = q_quot(p, a);
  QPoly c = q_quot(dp, a);
  QPoly d = q_sub(c, q_derivative(b));
  int i = 1;
  while (q_deg(b) > 0) {
    QPoly f = q_gcd(b, d);
    if (q_deg(f) > 0) factors.emplace_back(f, i);
    b = q_quot(b, f);
    c = q_quot(d, f);
    d = q_sub(c, q_derivative(b));
    ++i;
  }
  return factors;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain;
  chain.push_back(f);
  chain.push_back(q_derivative(f));
  while (q_deg(chain.back()) >= 0) {
    QPoly r = q_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int variations = 0, prev = 0;
  for (const auto& p : chain) {
    mpq_class v = q_eval(p, x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Roots of a square-free rational polynomial, each refined to the requested
// tolerance.
void roots_of_squarefree(const QPoly& f, double tol, std::vector<double>& out) {
  if (q_deg(f) < 1) return;
  if (q_deg(f) == 1) {
    mpq_class r = -f[0] / f[1];
    out.push_back(r.get_d());
    return;
  }
  auto chain = sturm_chain(f);

  // Cauchy bound: all roots lie in [-B, B].
  mpq_class bound = 1;
  for (int i = 0; i <= q_deg(f) - 1; ++i) {
    mpq_class ratio = abs(f[i] / f.back());
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  struct Interval {
    mpq_class lo, hi;  // roots counted over (lo, hi]
    int count;
  };
  std::vector<Interval> stack;
  {
    int total = sturm_variations(chain, -bound) - sturm_variations(chain, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
  }

  auto polish = [&](double x) {
    // two Newton steps on the double view
    QPoly df = q_derivative(f);
    for (int it = 0; it < 2; ++it) {
      double fv = 0, dv = 0;
      for (auto it2 = f.rbegin(); it2 != f.rend(); ++it2) fv = fv * x + it2->get_d();
      for (auto it2 = df.rbegin(); it2 != df.rend(); ++it2) dv = dv * x + it2->get_d();
      if (dv == 0) break;
      double next = x - fv / dv;
      if (!std::isfinite(next)) break;
      x = next;
    }
    return x;
  };

  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    mpq_class width = iv.hi - iv.lo;
    mpq_class mid = (iv.lo + iv.hi) / 2;
    double scale = 1.0 + std::abs(mid.get_d());
    if (iv.count == 1 && width.get_d() < tol * scale) {
      out.push_back(polish(mid.get_d()));
      continue;
    }
    if (q_eval(f, mid) == 0 && iv.count == 1) {
      out.push_back(mid.get_d());
      continue;
    }
    int vm = sturm_variations(chain, mid);
    int left = sturm_variations(chain, iv.lo) - vm;
    int right = iv.count - left;
    if (left > 0) stack.push_back({iv.lo, mid, left});
    if (right > 0) stack.push_back({mid, iv.hi, right});
  }
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw LinalgError("real_roots: zero polynomial");
  if (tol <= 0) throw LinalgError("real_roots: tol must be positive");
  QPoly q;
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  std::vector<double> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    std::vector<double> fr;
    roots_of_squarefree(factor, tol, fr);
    for (double r : fr)
      for (int i = 0; i < mult; ++i) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace hyperseidel
