#include "hyperseidel/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace hyperseidel {

int VerificationReport::failures() const {
  int f = 0;
  for (const auto& r : rows)
    if (r.status == "fail") ++f;
  return f;
}

void VerificationReport::write_jsonl(std::ostream& out) const {
  for (const auto& r : rows) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["cell"] = r.cell;
    j["status"] = r.status;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["tolerance"] = r.tolerance;
    j["runtime_s"] = r.runtime_seconds;
    out << j.dump() << "\n";
  }
}

void VerificationReport::write_csv(std::ostream& out) const {
  out << "suite,cell,status,expected,actual,tolerance,runtime_s\n";
  for (const auto& r : rows)
    out << r.suite << "," << r.cell << "," << r.status << "," << r.expected << ","
        << r.actual << "," << r.tolerance << "," << r.runtime_seconds << "\n";
}

namespace {

std::string fmt_values(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(10);
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << "]";
  return os.str();
}

bool multiset_match(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::string cell_mn(int m, int n, const char* extra = nullptr) {
  std::ostringstream os;
  os << "m=" << m << ";n=" << n;
  if (extra) os << ";" << extra;
  return os.str();
}

using Task = std::function<ReportRow()>;

// Expected full spectrum of C^3_{m,n} - e from the closed forms.
std::vector<double> closed_deleted_spectrum(const C3Params& p, DeletionCase c) {
  ClosedSpectrum s;
  if (c == DeletionCase::TypeI) {
    s.trivial_values = {{2.0 * p.n - 1, p.m - 2}, {2.0 * p.m - 1, p.n - 3}};
    s.quotient_roots = real_roots(xi1(p));
  } else {
    s.trivial_values = {{2.0 * p.n - 1, p.m - 3}, {2.0 * p.m - 1, p.n - 2}};
    s.quotient_roots = real_roots(xi2(p));
  }
  return s.full();
}

std::vector<double> brute_deleted_spectrum(const C3Params& p, DeletionCase c) {
  auto [h, labels] = gen_complete_bipartite(3, p.m, p.n);
  Hypergraph hd = delete_hyperedge(h, canonical_edge(p, c));
  return seidel_spectrum(hd).values;
}

Task make_t4_task(int m, int n, double tol) {
  return [=]() {
    C3Params p{m, n};
    auto closed = spectrum_c3(p).full();
    auto brute = seidel_spectrum(gen_complete_bipartite(3, m, n).first).values;
    ReportRow row{"t4-spectrum", cell_mn(m, n),
                  multiset_match(closed, brute, tol) ? "pass" : "fail",
                  fmt_values(closed), fmt_values(brute), tol, 0};
    return row;
  };
}

Task make_t7t9_task(const char* suite, int m, int n, DeletionCase c, double tol) {
  return [=]() {
    C3Params p{m, n};
    auto closed = closed_deleted_spectrum(p, c);
    auto brute = brute_deleted_spectrum(p, c);
    ReportRow row{suite, cell_mn(m, n), multiset_match(closed, brute, tol) ? "pass" : "fail",
                  fmt_values(closed), fmt_values(brute), tol, 0};
    return row;
  };
}

Task make_xi_exact_task(int m, int n, DeletionCase c) {
  return [=]() {
    C3Params p{m, n};
    const char* tag = c == DeletionCase::TypeI ? "edge=I" : "edge=II";
    IntPolynomial xi = c == DeletionCase::TypeI ? xi1(p) : xi2(p);
    IntMatrix closed_q = c == DeletionCase::TypeI ? quotient_type1(p) : quotient_type2(p);

    // Oracle: quotient built from the generated hypergraph, then the exact
    // characteristic polynomial. xi has leading coefficient -1, det(xI - Q)
    // is monic, so compare against the negated char poly.
    auto [h, labels] = gen_complete_bipartite(3, m, n);
    Hypergraph hd = delete_hyperedge(h, canonical_edge(p, c));
    SeidelMatrix s(hd);
    IntMatrix constructed_q = quotient_matrix(s, canonical_partition(p, c));

    bool quotients_equal = closed_q == constructed_q;
    IntPolynomial oracle = char_poly_exact(constructed_q).negated();
    bool polys_equal = xi == oracle;
    ReportRow row{"xi-exact", cell_mn(m, n, tag),
                  (quotients_equal && polys_equal) ? "pass" : "fail",
                  oracle.to_string("x"), xi.to_string("x"), 0, 0};
    if (!quotients_equal) row.actual += " (quotient matrices differ)";
    return row;
  };
}

Task make_inertia_task(int m, int n, DeletionCase c, double tol) {
  return [=]() {
    C3Params p{m, n};
    const char* tag = c == DeletionCase::TypeI ? "edge=I" : "edge=II";
    auto [h, labels] = gen_complete_bipartite(3, m, n);
    Hypergraph hd = delete_hyperedge(h, canonical_edge(p, c));
    Spectrum spec = seidel_spectrum(hd);
    SymmetricMatrix sm = seidel_matrix(hd).real_view();
    Inertia in = inertia_of(spec, 1e-8 * sm.frobenius_norm());
    IntPolynomial xi = c == DeletionCase::TypeI ? xi1(p) : xi2(p);
    int variations = sign_variations(negate_variable(xi));
    bool ok = in == Inertia{m + n - 1, 0, 1} && variations == 1;
    std::ostringstream expected, actual;
    expected << "inertia=(" << m + n - 1 << ",0,1) variations=1";
    actual << "inertia=(" << in.n_pos << "," << in.n_zero << "," << in.n_neg
           << ") variations=" << variations;
    return ReportRow{"inertia-ttt", cell_mn(m, n, tag), ok ? "pass" : "fail",
                     expected.str(), actual.str(), tol, 0};
  };
}

Task make_energy_decrease_task(int m, int n, DeletionCase c, double margin) {
  return [=]() {
    C3Params p{m, n};
    const char* tag = c == DeletionCase::TypeI ? "edge=I" : "edge=II";
    auto [h, labels] = gen_complete_bipartite(3, m, n);
    double delta = energy_delta_on_edge_deletion(h, canonical_edge(p, c));
    std::ostringstream actual;
    actual.precision(10);
    actual << delta;
    return ReportRow{"energy-decrease-E", cell_mn(m, n, tag),
                     (-delta > margin) ? "pass" : "fail", "delta < -1e-06", actual.str(),
                     margin, 0};
  };
}

Task make_mono_task(int m, int n) {
  return [=]() {
    double e = energy_formula_c3({m, n});
    double en = energy_formula_c3({m, n + 1});
    double em = energy_formula_c3({m + 1, n});
    bool ok = en > e && em > e;
    std::ostringstream actual;
    actual.precision(10);
    actual << "E(m,n)=" << e << " E(m,n+1)=" << en << " E(m+1,n)=" << em;
    return ReportRow{"mono-thm", cell_mn(m, n), ok ? "pass" : "fail",
                     "strictly increasing in m and n", actual.str(), 0, 0};
  };
}

Task make_deltau_task(int m, int n) {
  return [=]() {
    mpz_class du = delta_u({m, n});
    mpz_class diff = u_of({m, n + 1}) - u_of({m, n});
    bool ok = du == diff && du > 0;
    return ReportRow{"deltaU", cell_mn(m, n), ok ? "pass" : "fail",
                     diff.get_str() + " (>0)", du.get_str(), 0, 0};
  };
}

Task make_eigvec_task(int m, int n, DeletionCase c) {
  return [=]() {
    const char* tag = c == DeletionCase::Intact  ? "case=intact"
                      : c == DeletionCase::TypeI ? "case=I"
                                                 : "case=II";
    bool ok = verify_trivial_eigenvectors({m, n}, c);
    return ReportRow{"eigvec-families", cell_mn(m, n, tag), ok ? "pass" : "fail",
                     "exact S*v = lambda*v", ok ? "verified" : "violated", 0, 0};
  };
}

Task make_factorization_task(int m, int n) {
  return [=]() {
    FactorizationReport rep = check_factorization_claim({m, n});
    std::ostringstream cellos;
    return ReportRow{"factorization-claim", cell_mn(m, n), "reported",
                     "xi1(2m-3) = 0 (claimed)",
                     "xi1(" + std::to_string(2 * m - 3) + ") = " + rep.residual.get_str(),
                     0, 0};
  };
}

Task make_weak_deletion_task(uint64_t seed) {
  return [=]() {
    Hypergraph h = random_hypergraph(seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int v = static_cast<int>(rng() % h.num_vertices());
    double before = seidel_energy(h);
    WeakDeletionResult after = weak_delete_vertex(h, v);
    double delta;
    if (after.hypergraph.num_vertices() < 1)
      delta = -before;
    else
      delta = seidel_energy(after.hypergraph) - before;
    std::ostringstream cell, actual;
    cell << "seed=" << seed << ";n=" << h.num_vertices() << ";v=" << v;
    actual.precision(10);
    actual << "delta=" << delta << (delta > 1e-9 ? " (energy increased)" : "");
    return ReportRow{"weak-deletion-energy", cell.str(), "reported",
                     "delta <= 0 (cited lemma)", actual.str(), 1e-9, 0};
  };
}

}  // namespace

Hypergraph random_hypergraph(uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 4 + static_cast<int>(rng() % 7);           // 4..10 vertices
  int target_edges = 2 + static_cast<int>(rng() % 7);  // 2..8 edges
  std::set<Edge> edges;
  int attempts = 0;
  while (static_cast<int>(edges.size()) < target_edges && attempts < 200) {
    ++attempts;
    int k = 2 + static_cast<int>(rng() % 3);  // edge size 2..4
    if (k > n) continue;
    std::set<int> verts;
    while (static_cast<int>(verts.size()) < k) verts.insert(static_cast<int>(rng() % n));
    edges.emplace(verts.begin(), verts.end());
  }
  return Hypergraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<std::string> suite_names() {
  return {"t4-spectrum",     "t7-spectrum",       "t9-spectrum",
          "xi-exact",        "inertia-ttt",       "energy-decrease-E",
          "mono-thm",        "deltaU",            "eigvec-families",
          "factorization-claim", "weak-deletion-energy"};
}

VerificationReport run_suite(const std::string& name, const GridRange& grid, double tol,
                             int jobs) {
  std::vector<Task> tasks;
  auto for_grid = [&](int m_min, int n_min, auto&& make) {
    for (int m = std::max(grid.m_lo, m_min); m <= grid.m_hi; ++m)
      for (int n = std::max(grid.n_lo, n_min); n <= grid.n_hi; ++n) tasks.push_back(make(m, n));
  };

  if (name == "t4-spectrum") {
    for_grid(2, 2, [&](int m, int n) { return make_t4_task(m, n, tol); });
  } else if (name == "t7-spectrum") {
    for_grid(2, 3, [&](int m, int n) {
      return make_t7t9_task("t7-spectrum", m, n, DeletionCase::TypeI, tol);
    });
  } else if (name == "t9-spectrum") {
    for_grid(3, 2, [&](int m, int n) {
      return make_t7t9_task("t9-spectrum", m, n, DeletionCase::TypeII, tol);
    });
  } else if (name == "xi-exact") {
    for_grid(2, 3, [&](int m, int n) { return make_xi_exact_task(m, n, DeletionCase::TypeI); });
    for_grid(3, 2, [&](int m, int n) { return make_xi_exact_task(m, n, DeletionCase::TypeII); });
  } else if (name == "inertia-ttt") {
    for_grid(3, 3, [&](int m, int n) { return make_inertia_task(m, n, DeletionCase::TypeI, tol); });
    for_grid(3, 3, [&](int m, int n) { return make_inertia_task(m, n, DeletionCase::TypeII, tol); });
  } else if (name == "energy-decrease-E") {
    for_grid(3, 3, [&](int m, int n) {
      return make_energy_decrease_task(m, n, DeletionCase::TypeI, 1e-6);
    });
    for_grid(3, 3, [&](int m, int n) {
      return make_energy_decrease_task(m, n, DeletionCase::TypeII, 1e-6);
    });
  } else if (name == "mono-thm") {
    for_grid(2, 2, [&](int m, int n) { return make_mono_task(m, n); });
  } else if (name == "deltaU") {
    for_grid(2, 2, [&](int m, int n) { return make_deltau_task(m, n); });
  } else if (name == "eigvec-families") {
    for_grid(2, 2, [&](int m, int n) { return make_eigvec_task(m, n, DeletionCase::Intact); });
    for_grid(2, 3, [&](int m, int n) { return make_eigvec_task(m, n, DeletionCase::TypeI); });
    for_grid(3, 2, [&](int m, int n) { return make_eigvec_task(m, n, DeletionCase::TypeII); });
  } else if (name == "factorization-claim") {
    for_grid(3, 3, [&](int m, int n) { return make_factorization_task(m, n); });
  } else if (name == "weak-deletion-energy") {
    for (uint64_t seed = 1; seed <= 100; ++seed) tasks.push_back(make_weak_deletion_task(seed));
  } else {
    throw InvalidParams("unknown suite: " + name);
  }

  VerificationReport report;
  report.rows.resize(tasks.size());
  auto run_one = [&](size_t i) {
    auto start = std::chrono::steady_clock::now();
    report.rows[i] = tasks[i]();
    report.rows[i].runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace hyperseidel
