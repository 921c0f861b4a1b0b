// Acceptance gate: one line per criterion, nonzero exit iff an asserted
// criterion fails. "reported" lines surface known claims without gating.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hyperseidel/closedform.hpp"
#include "hyperseidel/equitable.hpp"
#include "hyperseidel/fixtures.hpp"
#include "hyperseidel/io.hpp"
#include "hyperseidel/seidel.hpp"
#include "hyperseidel/verify.hpp"

using namespace hyperseidel;

namespace {

int failed = 0;

void line(const char* status, int number, const char* name, const std::string& detail) {
  std::printf("%-8s %2d  %-28s %s\n", status, number, name, detail.c_str());
}

void verdict(bool ok, int number, const char* name, const std::string& detail) {
  if (!ok) ++failed;
  line(ok ? "PASS" : "FAIL", number, name, detail);
}

bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: 6-vertex design, energy 12 -> 6*sqrt(5) for every edge
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Hypergraph h = fixtures::energy_increase();
  bool ok = std::abs(seidel_energy(h) - 12.0) < 1e-9;
  ok = ok && multiset_close(seidel_spectrum(h).values, {-3, -1, -1, -1, 3, 3}, 1e-9);
  const double r5 = std::sqrt(5.0);
  for (const Edge& e : h.edges()) {
    Hypergraph hd = delete_hyperedge(h, e);
    ok = ok && std::abs(seidel_energy(hd) - 13.4164079) < 1e-6;
    ok = ok && multiset_close(seidel_spectrum(hd).values, {r5, r5, r5, -r5, -r5, -r5}, 1e-9);
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 0.1;
  char buf[128];
  std::snprintf(buf, sizeof buf, "E 12 -> 13.4164079 on all 4 edges, %.3fs", dt);
  verdict(ok, 1, "energy-increase-example", buf);
}

// 2: 8-vertex loose cycle, energy 8+8*sqrt(2) -> 6+4*sqrt(2)+4*sqrt(3)
void criterion2() {
  Hypergraph h = fixtures::energy_decrease();
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  bool ok = std::abs(seidel_energy(h) - 19.3137085) < 1e-6;
  ok = ok && multiset_close(seidel_spectrum(h).values,
                            {-1 - 2 * r2, -1 - 2 * r2, -1, -1, 3, 3, -1 + 2 * r2, -1 + 2 * r2},
                            1e-9);
  Hypergraph hd = delete_hyperedge(h, {0, 1, 2});
  ok = ok && std::abs(seidel_energy(hd) - 18.5850575) < 1e-6;
  ok = ok && multiset_close(seidel_spectrum(hd).values,
                            {-1 - 2 * r3, 1 - 2 * r2, -3, 1, 1, 1, -1 + 2 * r3, 1 + 2 * r2},
                            1e-9);
  verdict(ok, 2, "energy-decrease-example", "E 19.3137085 -> 18.5850575, surd spectra match");
}

// 3: single full edge, energy 2(n-1) before and after deletion
void criterion3() {
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    Hypergraph h = fixtures::single_edge(n);
    ok = ok && std::abs(seidel_energy(h) - 2.0 * (n - 1)) < 1e-9;
    Hypergraph hd = delete_hyperedge(h, h.edges()[0]);
    ok = ok && std::abs(seidel_energy(hd) - 2.0 * (n - 1)) < 1e-9;
  }
  verdict(ok, 3, "energy-equal-example", "E = 2(n-1) preserved for n = 3..12");
}

// 4: closed-form intact spectrum vs eigensolve on [2,8]^2
void criterion4() {
  bool ok = true;
  int cells = 0;
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      auto closed = spectrum_c3({m, n}).full();
      auto brute = seidel_spectrum(gen_complete_bipartite(3, m, n).first).values;
      ok = ok && multiset_close(closed, brute, 1e-7);
      ++cells;
    }
  verdict(ok, 4, "intact-spectrum-closed-form",
          "closed vs eigensolve on " + std::to_string(cells) + " cells, tol 1e-7");
}

// 5: equitable partitions, exact xi agreement, eigenvector families
void criterion5() {
  bool ok = true;
  int cells = 0;
  auto check_case = [&](int m, int n, DeletionCase c) {
    C3Params p{m, n};
    auto [h, labels] = gen_complete_bipartite(3, m, n);
    Hypergraph hd = delete_hyperedge(h, canonical_edge(p, c));
    SeidelMatrix s(hd);
    VertexPartition part = canonical_partition(p, c);
    ok = ok && check_equitable(s, part).equitable;
    IntMatrix built = quotient_matrix(s, part);
    IntMatrix closed = c == DeletionCase::TypeI ? quotient_type1(p) : quotient_type2(p);
    IntPolynomial xi = c == DeletionCase::TypeI ? xi1(p) : xi2(p);
    ok = ok && built == closed;
    ok = ok && xi == char_poly_exact(built).negated();
    ok = ok && verify_trivial_eigenvectors(p, c);
    ++cells;
  };
  for (int m = 2; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n) check_case(m, n, DeletionCase::TypeI);
  for (int m = 3; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) check_case(m, n, DeletionCase::TypeII);
  verdict(ok, 5, "deleted-quotient-exactness",
          "equitable + exact xi + eigenvector families on " + std::to_string(cells) + " cells");
}

// 6: inertia (m+n-1, 0, 1) and one negative root by sign variations
void criterion6() {
  bool ok = true;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n)
      for (DeletionCase c : {DeletionCase::TypeI, DeletionCase::TypeII}) {
        C3Params p{m, n};
        auto [h, labels] = gen_complete_bipartite(3, m, n);
        Hypergraph hd = delete_hyperedge(h, canonical_edge(p, c));
        Spectrum spec = seidel_spectrum(hd);
        double zero_tol = 1e-8 * seidel_matrix(hd).real_view().frobenius_norm();
        ok = ok && inertia_of(spec, zero_tol) == Inertia{m + n - 1, 0, 1};
        IntPolynomial xi = c == DeletionCase::TypeI ? xi1(p) : xi2(p);
        ok = ok && sign_variations(negate_variable(xi)) == 1;
      }
  verdict(ok, 6, "deleted-inertia", "(m+n-1,0,1) and one sign variation on [3,8]^2, both types");
}

// 7: energy strictly decreases under deletion, full sweep bounded
void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n)
      for (DeletionCase c : {DeletionCase::TypeI, DeletionCase::TypeII}) {
        auto [h, labels] = gen_complete_bipartite(3, m, n);
        double delta = energy_delta_on_edge_deletion(h, canonical_edge({m, n}, c));
        ok = ok && -delta > 1e-6;
      }
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "E(C) - E(C-e) > 1e-6 on [3,8]^2 both types, %.2fs", dt);
  verdict(ok, 7, "deletion-energy-drop", buf);
}

// 8: discriminant increment identity and monotone energy on [2,12]^2
void criterion8() {
  bool ok = true;
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      mpz_class du = delta_u({m, n});
      ok = ok && du == u_of({m, n + 1}) - u_of({m, n}) && du > 0;
      double e = energy_formula_c3({m, n});
      ok = ok && energy_formula_c3({m, n + 1}) > e && energy_formula_c3({m + 1, n}) > e;
    }
  verdict(ok, 8, "deltaU-and-monotonicity", "exact increments, all positive, energy increasing");
}

// 9: strong vertex deletion can raise the energy (6-vertex counterexample)
void criterion9() {
  Hypergraph h = fixtures::hstar();
  double e_before = seidel_energy(h);
  bool ok = std::abs(e_before - 16.886) < 5e-3;
  ok = ok && multiset_close(seidel_spectrum(h).values,
                            {-7.808, -0.635, 1, 1, 1, 5.443}, 5e-4);
  // same-order comparison: edges stripped, vertex kept isolated
  Hypergraph stripped = strip_incident_edges(h, 3);
  double e_after = seidel_energy(stripped);
  ok = ok && std::abs(e_after - 18.336) < 5e-3;
  ok = ok && multiset_close(seidel_spectrum(stripped).values,
                            {-7.168, -1, -1, 0.574, 3, 5.594}, 5e-4);
  ok = ok && e_after > e_before;
  // removing the vertex outright also raises the energy
  double e_removed = seidel_energy(strong_delete_vertex(h, 3));
  ok = ok && e_removed > e_before;
  char buf[96];
  std::snprintf(buf, sizeof buf, "E 16.886 -> 18.336 (kept order) / %.3f (removed)", e_removed);
  verdict(ok, 9, "strong-deletion-counterexample", buf);
}

// 10: property suites; the weak-deletion comparison is reported only
void criterion10() {
  bool ok = true;
  for (uint64_t seed = 1; seed <= 200; ++seed)
    ok = ok && seidel_matrix(random_hypergraph(seed)).trace() == 0;

  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Hypergraph h = random_hypergraph(seed);
    int n = h.num_vertices();
    std::vector<Edge> rotated;
    for (const Edge& e : h.edges()) {
      Edge mapped;
      for (int v : e) mapped.push_back((v + 1) % n);
      rotated.push_back(mapped);
    }
    ok = ok && multiset_close(seidel_spectrum(h).values,
                              seidel_spectrum(Hypergraph(n, rotated)).values, 1e-9);
  }

  // quotient spectrum containment on every equitable partition we construct
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n) {
      auto [h, labels] = gen_complete_bipartite(3, m, n);
      ok = ok && quotient_spectrum_subset(SeidelMatrix(h),
                                          canonical_partition({m, n}, DeletionCase::Intact), 1e-7);
      if (n >= 3) {
        Hypergraph hd = delete_hyperedge(h, canonical_edge({m, n}, DeletionCase::TypeI));
        ok = ok && quotient_spectrum_subset(SeidelMatrix(hd),
                                            canonical_partition({m, n}, DeletionCase::TypeI), 1e-7);
      }
      if (m >= 3) {
        Hypergraph hd = delete_hyperedge(h, canonical_edge({m, n}, DeletionCase::TypeII));
        ok = ok && quotient_spectrum_subset(SeidelMatrix(hd),
                                            canonical_partition({m, n}, DeletionCase::TypeII), 1e-7);
      }
    }
  verdict(ok, 10, "property-suites", "trace x200, relabeling x20, quotient containment");

  VerificationReport weak = run_suite("weak-deletion-energy", {});
  int increased = 0;
  for (const auto& r : weak.rows)
    if (r.actual.find("energy increased") != std::string::npos) ++increased;
  char buf[96];
  std::snprintf(buf, sizeof buf, "weak deletion raised energy in %d/100 samples", increased);
  line("REPORT", 10, "weak-deletion-energy", buf);
}

// 11: reported checks only; never fails the build
void criterion11() {
  int zero = 0, cells = 0;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n) {
      if (check_factorization_claim({m, n}).holds()) ++zero;
      ++cells;
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "xi1(2m-3) = 0 in %d/%d cells on [3,8]^2", zero, cells);
  line("REPORT", 11, "factorization-claim", buf);

  // printed 9-point spectra for the two deletion types at (m,n) = (3,6)
  auto count_close = [](std::vector<double> got, std::vector<double> printed) {
    int hits = 0;
    for (double p : printed) {
      auto best = got.end();
      for (auto it = got.begin(); it != got.end(); ++it)
        if (std::abs(*it - p) < 5e-3 && (best == got.end() ||
                                         std::abs(*it - p) < std::abs(*best - p)))
          best = it;
      if (best != got.end()) {
        ++hits;
        got.erase(best);
      }
    }
    return hits;
  };
  auto [h, labels] = gen_complete_bipartite(3, 3, 6);
  auto s1 = seidel_spectrum(delete_hyperedge(h, {0, 1, 3})).values;  // two from V1
  auto s2 = seidel_spectrum(delete_hyperedge(h, {0, 3, 4})).values;  // one from V1
  int hit1 = count_close(s1, {-80.291, 10.252, 28.040, 5, 5, 5, 5, 9, 13});
  int hit2 = count_close(s2, {-80.634, 27.076, 13.297, 10.463, 5.994, 2.805, 5, 5, 11});
  std::snprintf(buf, sizeof buf,
                "printed 9-point spectra: %d/9 and %d/9 values reproduced (tol 5e-3)", hit1, hit2);
  line("REPORT", 11, "printed-spectra-comparison", buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("%d criterion failure(s)\n", failed);
  return failed == 0 ? 0 : 1;
}
