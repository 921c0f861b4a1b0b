#ifndef HYPERSEIDEL_VERIFY_HPP
#define HYPERSEIDEL_VERIFY_HPP

#include <cstdint>
#include <iosfwd>

#include "hyperseidel/closedform.hpp"

namespace hyperseidel {

/// One verification outcome. "pass"/"fail" rows check a theorem's
/// conclusion; "reported" rows surface cited claims we test but do not
/// treat as ground truth (they never fail a run).
struct ReportRow {
  std::string suite;
  std::string cell;      // reproduction parameters, e.g. "m=3,n=6,edge=I"
  std::string status;    // "pass" | "fail" | "reported"
  std::string expected;
  std::string actual;
  double tolerance = 0;
  double runtime_seconds = 0;  // excluded from deterministic output comparison
};

struct VerificationReport {
  std::vector<ReportRow> rows;

  int failures() const;
  void write_jsonl(std::ostream& out) const;
  void write_csv(std::ostream& out) const;
};

struct GridRange {
  int m_lo = 3, m_hi = 8;
  int n_lo = 3, n_hi = 8;
};

/// Known suites: t4-spectrum, t7-spectrum, t9-spectrum, xi-exact,
/// inertia-ttt, energy-decrease-E, mono-thm, deltaU, eigvec-families,
/// factorization-claim, weak-deletion-energy. Throws InvalidParams for an
/// unknown name. jobs > 1 evaluates grid cells concurrently.
VerificationReport run_suite(const std::string& name, const GridRange& grid,
                             double tol = 1e-7, int jobs = 1);

std::vector<std::string> suite_names();

/// Deterministic pseudo-random simple-ish hypergraph used by the property
/// suites (seeded; identical across runs).
Hypergraph random_hypergraph(uint64_t seed);

}  // namespace hyperseidel

#endif
