#include "hyperseidel/closedform.hpp"

#include <algorithm>
#include <cmath>

namespace hyperseidel {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw InvalidParams(msg);
}

}  // namespace

std::vector<double> ClosedSpectrum::full() const {
  std::vector<double> all;
  for (auto [v, mult] : trivial_values)
    for (int i = 0; i < mult; ++i) all.push_back(v);
  for (double r : quotient_roots) all.push_back(r);
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

long long trace_t(const C3Params& p) {
  const long long m = p.m, n = p.n;
  return 3 * m + 3 * n - 4 * m * n - 2;
}

mpz_class u_of(const C3Params& p) {
  const mpz_class m = p.m, n = p.n;
  return 16 * m * m * m * n + n * n + 2 * m * n * (8 * n * n - 40 * n + 49) +
         m * m * (32 * n * n - 80 * n + 1);
}

mpz_class delta_u(const C3Params& p) {
  const mpz_class m = p.m, n = p.n;
  return 16 * m * m * m + 64 * m * m * n - 48 * m * m + 48 * m * n * n - 112 * m * n +
         34 * m + 2 * n + 1;
}

long long l_of(const C3Params& p) {
  const long long m = p.m, n = p.n;
  return (m - 1) * (2 * n - 1) + (n - 1) * (2 * m - 1);
}

double energy_formula_c3(const C3Params& p) {
  require(p.m >= 2 && p.n >= 2, "energy_formula_c3: need m,n >= 2");
  return static_cast<double>(l_of(p)) + std::sqrt(u_of(p).get_d());
}

ClosedSpectrum spectrum_c3(const C3Params& p) {
  require(p.m >= 2 && p.n >= 2, "spectrum_c3: need m,n >= 2");
  ClosedSpectrum s;
  s.trivial_values = {{2.0 * p.n - 1, p.m - 1}, {2.0 * p.m - 1, p.n - 1}};
  const double t = static_cast<double>(trace_t(p));
  const double root = std::sqrt(u_of(p).get_d());
  s.quotient_roots = {(t + root) / 2, (t - root) / 2};
  return s;
}

IntPolynomial xi1(const C3Params& p) {
  require(p.m >= 2 && p.n >= 3, "xi1: need m >= 2, n >= 3");
  const mpz_class m = p.m, n = p.n;
  const mpz_class m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
  const mpz_class n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  std::vector<mpz_class> c(6);
  c[5] = -1;
  c[4] = -5 + 7 * m + 5 * n - 4 * m * n;
  c[3] = 46 + 4 * m - 18 * m2 + 4 * n - 22 * m * n + 2 * m2 * n + 4 * m3 * n - 8 * n2 -
         6 * m * n2 + 4 * m2 * n2 + 4 * m * n3;
  c[2] = 286 - 234 * m - 46 * m2 + 36 * m3 - 206 * n + 62 * m * n - 10 * m2 * n +
         52 * m3 * n - 16 * m4 * n + 8 * n2 - 10 * m * n2 + 64 * m2 * n2 - 24 * m3 * n2 +
         4 * n3 + 40 * m * n3 - 24 * m2 * n3 - 8 * m * n4;
  c[1] = 83 + 76 * m - 366 * m2 + 248 * m3 - 40 * m4 - 228 * n - 90 * m * n +
         238 * m2 * n + 20 * m3 * n - 88 * m4 * n + 16 * m5 * n - 40 * n2 +
         246 * m * n2 + 132 * m2 * n2 - 184 * m3 * n2 + 48 * m4 * n2 + 40 * n3 -
         28 * m * n3 - 160 * m2 * n3 + 48 * m3 * n3 - 16 * m * n4 + 32 * m2 * n4;
  c[0] = -921 + 2387 * m - 2322 * m2 + 1012 * m3 - 168 * m4 + 873 * n - 2250 * m * n +
         1994 * m2 * n - 732 * m3 * n + 72 * m4 * n + 16 * m5 * n - 408 * n2 +
         1274 * m * n2 - 680 * m2 * n2 - 160 * m3 * n2 + 160 * m4 * n2 - 32 * m5 * n2 +
         84 * n3 - 368 * m * n3 + 40 * m2 * n3 + 160 * m3 * n3 - 32 * m4 * n3 +
         24 * m * n4 + 32 * m2 * n4 - 32 * m3 * n4;
  return IntPolynomial(std::move(c));
}

IntPolynomial xi2(const C3Params& p) {
  require(p.m >= 3 && p.n >= 2, "xi2: need m >= 3, n >= 2");
  const mpz_class m = p.m, n = p.n;
  const mpz_class m2 = m * m, m3 = m2 * m, m4 = m3 * m;
  const mpz_class n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  std::vector<mpz_class> c(6);
  c[5] = -1;
  c[4] = -5 + 5 * m + 7 * n - 4 * m * n;
  c[3] = 46 + 4 * m - 8 * m2 + 4 * n - 22 * m * n - 6 * m2 * n + 4 * m3 * n - 18 * n2 +
         2 * m * n2 + 4 * m2 * n2 + 4 * m * n3;
  c[2] = 286 - 206 * m + 8 * m2 + 4 * m3 - 234 * n + 62 * m * n - 10 * m2 * n +
         40 * m3 * n - 8 * m4 * n - 46 * n2 - 10 * m * n2 + 64 * m2 * n2 - 24 * m3 * n2 +
         36 * n3 + 52 * m * n3 - 24 * m2 * n3 - 16 * m * n4;
  c[1] = 83 - 228 * m - 40 * m2 + 40 * m3 + 76 * n - 90 * m * n + 246 * m2 * n -
         28 * m3 * n - 16 * m4 * n - 366 * n2 + 238 * m * n2 + 132 * m2 * n2 -
         160 * m3 * n2 + 32 * m4 * n2 + 248 * n3 + 20 * m * n3 - 184 * m2 * n3 +
         48 * m3 * n3 - 40 * n4 - 88 * m * n4 + 48 * m2 * n4 + 16 * m * n5;
  c[0] = -921 + 873 * m - 408 * m2 + 84 * m3 + 2387 * n - 2250 * m * n + 1274 * m2 * n -
         368 * m3 * n + 24 * m4 * n - 2322 * n2 + 1994 * m * n2 - 680 * m2 * n2 +
         40 * m3 * n2 + 32 * m4 * n2 + 1012 * n3 - 732 * m * n3 - 160 * m2 * n3 +
         160 * m3 * n3 - 32 * m4 * n3 - 168 * n4 + 72 * m * n4 + 160 * m2 * n4 -
         32 * m3 * n4 + 16 * m * n5 - 32 * m2 * n5;
  return IntPolynomial(std::move(c));
}

IntMatrix quotient_type1(const C3Params& p) {
  require(p.m >= 2 && p.n >= 3, "quotient_type1: need m >= 2, n >= 3");
  const long long m = p.m, n = p.n;
  const long long a3 = 1 - 2 * (m + n - 3);  // co-degree reduced by the deletion
  const long long cc = 1 - 2 * (m + n - 2);  // intact cross entry
  const long long w1 = 1 - 2 * n;            // within V1
  const long long w2 = 1 - 2 * m;            // within V2
  IntMatrix q(5);
  long long rows[5][5] = {
      {0, a3, a3, (m - 1) * w1, (n - 2) * cc},
      {a3, 0, 1 - 2 * (m - 1), (m - 1) * cc, (n - 2) * w2},
      {a3, 1 - 2 * (m - 1), 0, (m - 1) * cc, (n - 2) * w2},
      {w1, cc, cc, (m - 2) * w1, (n - 2) * cc},
      {cc, w2, w2, (m - 1) * cc, (n - 3) * w2},
  };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q(i, j) = static_cast<long>(rows[i][j]);
  return q;
}

IntMatrix quotient_type2(const C3Params& p) {
  require(p.m >= 3 && p.n >= 2, "quotient_type2: need m >= 3, n >= 2");
  const long long m = p.m, n = p.n;
  const long long a3 = 1 - 2 * (m + n - 3);
  const long long cc = 1 - 2 * (m + n - 2);
  const long long w1 = 1 - 2 * n;
  const long long w2 = 1 - 2 * m;
  IntMatrix q(5);
  long long rows[5][5] = {
      {0, 1 - 2 * (n - 1), a3, (m - 2) * w1, (n - 1) * cc},
      {1 - 2 * (n - 1), 0, a3, (m - 2) * w1, (n - 1) * cc},
      {a3, a3, 0, (m - 2) * cc, (n - 1) * w2},
      {w1, w1, cc, (m - 3) * w1, (n - 1) * cc},
      {cc, cc, w2, (m - 2) * cc, (n - 2) * w2},
  };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q(i, j) = static_cast<long>(rows[i][j]);
  return q;
}

Edge canonical_edge(const C3Params& p, DeletionCase c) {
  switch (c) {
    case DeletionCase::TypeI:
      return {0, p.m, p.m + 1};
    case DeletionCase::TypeII:
      return {0, 1, p.m};
    default:
      throw InvalidParams("canonical_edge: no edge for the intact case");
  }
}

VertexPartition canonical_partition(const C3Params& p, DeletionCase c) {
  const int m = p.m, n = p.n;
  VertexPartition part;
  auto range = [](int lo, int hi) {  // [lo, hi)
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
  };
  switch (c) {
    case DeletionCase::Intact:
      part.blocks = {range(0, m), range(m, m + n)};
      break;
    case DeletionCase::TypeI:
      part.blocks = {{0}, {m}, {m + 1}, range(1, m), range(m + 2, m + n)};
      break;
    case DeletionCase::TypeII:
      part.blocks = {{0}, {1}, {m}, range(2, m), range(m + 1, m + n)};
      break;
  }
  return part;
}

bool verify_trivial_eigenvectors(const C3Params& p, DeletionCase which) {
  const int m = p.m, n = p.n;
  switch (which) {
    case DeletionCase::Intact:
      require(m >= 2 && n >= 2, "verify_trivial_eigenvectors: need m,n >= 2");
      break;
    case DeletionCase::TypeI:
      require(m >= 2 && n >= 3, "verify_trivial_eigenvectors: need m >= 2, n >= 3");
      break;
    case DeletionCase::TypeII:
      require(m >= 3 && n >= 2, "verify_trivial_eigenvectors: need m >= 3, n >= 2");
      break;
  }
  auto [h, labels] = gen_complete_bipartite(3, m, n);
  if (which != DeletionCase::Intact) h = delete_hyperedge(h, canonical_edge(p, which));
  SeidelMatrix s(h);

  // Each family is a set of difference vectors e_base - e_j.
  struct Family {
    int base;
    int first, last;  // j in [first, last)
    long long lambda;
  };
  std::vector<Family> families;
  switch (which) {
    case DeletionCase::Intact:
      families = {{0, 1, m, 2LL * n - 1}, {m, m + 1, m + n, 2LL * m - 1}};
      break;
    case DeletionCase::TypeI:
      families = {{1, 2, m, 2LL * n - 1}, {m + 2, m + 3, m + n, 2LL * m - 1}};
      break;
    case DeletionCase::TypeII:
      families = {{2, 3, m, 2LL * n - 1}, {m + 1, m + 2, m + n, 2LL * m - 1}};
      break;
  }
  for (const auto& fam : families) {
    for (int j = fam.first; j < fam.last; ++j) {
      // (S v)_i = S[i][base] - S[i][j]; must equal lambda * v_i exactly.
      for (int i = 0; i < s.order(); ++i) {
        long long lhs = s(i, fam.base) - s(i, j);
        long long rhs = 0;
        if (i == fam.base) rhs = fam.lambda;
        if (i == j) rhs = -fam.lambda;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

FactorizationReport check_factorization_claim(const C3Params& p) {
  require(p.m >= 3 && p.n >= 3, "check_factorization_claim: need m,n >= 3");
  FactorizationReport report{p, xi1(p).eval(mpz_class(2 * p.m - 3))};
  return report;
}

}  // namespace hyperseidel
