// Command-line surface: generation, spectra, energies, deletions, quotient
// inspection, and the verification/sweep harness.
//
// Exit codes: 0 ok, 2 usage/input error, 3 eigensolver non-convergence,
// 4 partition not equitable.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperseidel/closedform.hpp"
#include "hyperseidel/fixtures.hpp"
#include "hyperseidel/io.hpp"
#include "hyperseidel/verify.hpp"

namespace hs = hyperseidel;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNotEquitable = 4;

double default_tol() {
  if (const char* env = std::getenv("SEIDEL_TOL")) {
    try {
      double t = std::stod(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SEIDEL_TOL\n";
  }
  return 1e-12;
}

hs::Edge parse_edge_1based(const std::string& s) {
  hs::Edge e;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) e.push_back(std::stoi(item) - 1);
  return e;
}

void parse_range(const std::string& s, int& lo, int& hi) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw hs::InvalidParams("range must be LO:HI, got " + s);
  lo = std::stoi(s.substr(0, colon));
  hi = std::stoi(s.substr(colon + 1));
  if (lo > hi) throw hs::InvalidParams("empty range " + s);
}

// Shared input selection: positional file or --fixture name.
struct InputOpts {
  std::string file;
  std::string fixture;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "hypergraph JSON file");
    cmd->add_option("--fixture", fixture, "bundled fixture name instead of a file");
  }

  hs::Hypergraph load() const {
    if (!fixture.empty()) return hs::fixtures::by_name(fixture);
    if (file.empty()) throw hs::IoError("no input: give a file or --fixture");
    return hs::read_hypergraph_file(file);
  }
};

void print_spectrum(const hs::Hypergraph& h, double tol, bool as_json) {
  hs::SeidelMatrix s = hs::seidel_matrix(h);
  hs::Spectrum spec = hs::eig_symmetric(s.real_view(), tol);
  double trace_residual = 0;
  for (double v : spec.values) trace_residual += v;
  hs::Inertia in = hs::inertia_of(spec, 1e-8 * std::max(1.0, s.real_view().frobenius_norm()));
  if (as_json) {
    std::cout << "{\"eigenvalues\":[";
    for (size_t i = 0; i < spec.values.size(); ++i)
      std::cout << (i ? "," : "") << std::setprecision(12) << spec.values[i];
    std::cout << "],\"trace_residual\":" << trace_residual << ",\"inertia\":[" << in.n_pos
              << "," << in.n_zero << "," << in.n_neg << "]}\n";
    return;
  }
  std::cout << "eigenvalue      multiplicity\n";
  for (auto [v, mult] : spec.clusters())
    std::cout << std::setw(14) << std::setprecision(7) << std::fixed << v << "  " << mult
              << "\n";
  std::cout.unsetf(std::ios::fixed);
  std::cout << "trace residual: " << std::setprecision(3) << std::scientific << trace_residual
            << "\n";
  std::cout.unsetf(std::ios::scientific);
  std::cout << "inertia (+,0,-): (" << in.n_pos << "," << in.n_zero << "," << in.n_neg
            << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel matrices, spectra and energies of uniform hypergraphs"};
  app.require_subcommand(1);
  double tol = default_tol();

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  gen->require_subcommand(1);
  std::string gen_out;

  auto* gen_cb = gen->add_subcommand("complete-bipartite", "complete k-uniform bipartite");
  int cb_k = 3, cb_m = 0, cb_n = 0;
  gen_cb->add_option("--k", cb_k, "edge size")->required();
  gen_cb->add_option("--m", cb_m, "|V1|")->required();
  gen_cb->add_option("--n", cb_n, "|V2|")->required();
  gen_cb->add_option("--out", gen_out, "output file (stdout if omitted)");

  auto* gen_tu = gen->add_subcommand("turan", "Turan hypergraph T(n,k,r)");
  int tu_n = 0, tu_k = 3, tu_r = 2;
  bool tu_strict = false;
  gen_tu->add_option("--n", tu_n)->required();
  gen_tu->add_option("--k", tu_k)->required();
  gen_tu->add_option("--r", tu_r)->required();
  gen_tu->add_flag("--strict", tu_strict, "require pairwise different parts");
  gen_tu->add_option("--out", gen_out, "output file (stdout if omitted)");

  auto* gen_fx = gen->add_subcommand("fixture", "bundled example hypergraph");
  std::string fx_name;
  gen_fx->add_option("--name", fx_name)->required();
  gen_fx->add_option("--out", gen_out, "output file (stdout if omitted)");

  // --- spectrum ----------------------------------------------------------
  auto* sp = app.add_subcommand("spectrum", "Seidel spectrum of a hypergraph");
  InputOpts sp_in;
  sp_in.attach(sp);
  std::string sp_edge, sp_mode = "strong";
  int sp_vertex = 0;
  bool sp_json = false;
  sp->add_option("--delete-edge", sp_edge, "delete edge first (1-based, e.g. 1,2,4)");
  sp->add_option("--delete-vertex", sp_vertex, "delete vertex first (1-based)");
  sp->add_option("--mode", sp_mode, "vertex deletion mode: strong|weak");
  sp->add_option("--tol", tol, "eigensolver tolerance");
  sp->add_flag("--json", sp_json, "JSON output");

  // --- energy ------------------------------------------------------------
  auto* en = app.add_subcommand("energy", "Seidel energy of a hypergraph");
  InputOpts en_in;
  en_in.attach(en);
  en->add_option("--tol", tol, "eigensolver tolerance");

  // --- delete ------------------------------------------------------------
  auto* del = app.add_subcommand("delete", "delete a hyperedge or vertex");
  InputOpts del_in;
  del_in.attach(del);
  std::string del_edge, del_mode = "strong", del_out;
  int del_vertex = 0;
  del->add_option("--edge", del_edge, "edge to delete (1-based, e.g. 1,2,4)");
  del->add_option("--vertex", del_vertex, "vertex to delete (1-based)");
  del->add_option("--mode", del_mode, "strong|weak");
  del->add_option("--out", del_out, "output file (stdout if omitted)");

  // --- quotient ----------------------------------------------------------
  auto* quo = app.add_subcommand("quotient", "equitable-partition quotient matrix");
  InputOpts quo_in;
  quo_in.attach(quo);
  std::string quo_partition;
  quo->add_option("--partition", quo_partition, "blocks, e.g. \"1|2,3|4-9\"")->required();
  quo->add_option("--tol", tol, "eigensolver tolerance");

  // --- verify ------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run a verification suite over a grid");
  std::string ver_suite, ver_m_range, ver_n_range, ver_out, ver_format = "jsonl";
  double ver_tol = 1e-7;
  int ver_jobs = 1;
  ver->add_option("--suite", ver_suite, "suite name (see --list)");
  bool ver_list = false;
  ver->add_flag("--list", ver_list, "list suite names");
  ver->add_option("--m-range", ver_m_range, "grid rows, LO:HI");
  ver->add_option("--n-range", ver_n_range, "grid columns, LO:HI");
  ver->add_option("--tol", ver_tol, "numeric comparison tolerance");
  ver->add_option("--jobs", ver_jobs, "parallel grid cells");
  ver->add_option("--format", ver_format, "jsonl|csv");
  ver->add_option("--out", ver_out, "report file (stdout if omitted)");

  // --- sweep -------------------------------------------------------------
  auto* sw = app.add_subcommand("sweep", "closed-form vs brute-force sweep as CSV");
  std::string sw_quantity = "energy", sw_family = "c3", sw_m_range = "2:8", sw_n_range = "2:8",
              sw_out;
  sw->add_option("--quantity", sw_quantity, "energy|spectrum");
  sw->add_option("--family", sw_family, "hypergraph family (c3)");
  sw->add_option("--m-range", sw_m_range, "LO:HI");
  sw->add_option("--n-range", sw_n_range, "LO:HI");
  sw->add_option("--out", sw_out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      hs::Hypergraph h;
      if (gen_cb->parsed()) {
        h = hs::gen_complete_bipartite(cb_k, cb_m, cb_n).first;
      } else if (gen_tu->parsed()) {
        h = hs::gen_turan(tu_n, tu_k, tu_r, tu_strict).first;
      } else {
        h = hs::fixtures::by_name(fx_name);
      }
      if (gen_out.empty()) {
        std::cout << hs::to_hypergraph_json(h);
      } else {
        hs::write_hypergraph_file(h, gen_out);
        std::cout << "edges: " << h.num_edges() << "\n";
      }
      return 0;
    }

    if (sp->parsed()) {
      hs::Hypergraph h = sp_in.load();
      if (!sp_edge.empty()) h = hs::delete_hyperedge(h, parse_edge_1based(sp_edge));
      if (sp->count("--delete-vertex")) {
        // Strong deletion here strips the incident edges but keeps the
        // vertex, so the spectrum stays comparable with the intact one.
        if (sp_mode == "strong")
          h = hs::strip_incident_edges(h, sp_vertex - 1);
        else if (sp_mode == "weak")
          h = hs::weak_delete_vertex(h, sp_vertex - 1).hypergraph;
        else
          throw hs::InvalidParams("--mode must be strong or weak");
      }
      print_spectrum(h, tol, sp_json);
      return 0;
    }

    if (en->parsed()) {
      hs::Hypergraph h = en_in.load();
      std::cout << std::fixed << std::setprecision(7) << hs::seidel_energy(h, tol) << "\n";
      return 0;
    }

    if (del->parsed()) {
      hs::Hypergraph h = del_in.load();
      hs::Hypergraph out;
      std::ostringstream summary;
      if (!del_edge.empty()) {
        out = hs::delete_hyperedge(h, parse_edge_1based(del_edge));
        summary << "removed 1 edge";
      } else if (del->count("--vertex")) {
        if (del_mode == "strong") {
          out = hs::strong_delete_vertex(h, del_vertex - 1);
          summary << "removed vertex and " << h.num_edges() - out.num_edges()
                  << " incident edges";
        } else if (del_mode == "weak") {
          hs::WeakDeletionResult r = hs::weak_delete_vertex(h, del_vertex - 1);
          out = r.hypergraph;
          summary << "shrunk edges; dropped " << r.dropped_small << " small, merged "
                  << r.merged_duplicates << " duplicates, " << r.containments
                  << " containments kept";
        } else {
          throw hs::InvalidParams("--mode must be strong or weak");
        }
      } else {
        throw hs::InvalidParams("delete needs --edge or --vertex");
      }
      if (del_out.empty()) {
        std::cout << hs::to_hypergraph_json(out);
        std::cerr << summary.str() << "\n";
      } else {
        hs::write_hypergraph_file(out, del_out);
        std::cout << summary.str() << "; edges: " << out.num_edges() << "\n";
      }
      return 0;
    }

    if (quo->parsed()) {
      hs::Hypergraph h = quo_in.load();
      hs::SeidelMatrix s = hs::seidel_matrix(h);
      hs::VertexPartition part = hs::parse_partition(quo_partition);
      hs::EquitableCheck check = hs::check_equitable(s, part);
      if (!check.equitable) {
        const auto& w = *check.witness;
        std::cout << "not equitable: rows " << w.row_i + 1 << " and " << w.row_i2 + 1
                  << " of block " << w.block_r + 1 << " have sums " << w.sum_i << " vs "
                  << w.sum_i2 << " over block " << w.block_s + 1 << "\n";
        return kExitNotEquitable;
      }
      std::cout << "equitable: yes\n";
      hs::IntMatrix q = hs::quotient_matrix(s, part);
      std::cout << "quotient matrix:\n";
      for (int i = 0; i < q.order(); ++i) {
        for (int j = 0; j < q.order(); ++j)
          std::cout << (j ? " " : "  ") << q(i, j).get_str();
        std::cout << "\n";
      }
      hs::IntPolynomial cp = hs::char_poly_exact(q);
      std::cout << "characteristic polynomial: " << cp.to_string() << "\n";
      std::cout << "real roots:";
      for (double r : hs::real_roots(cp)) std::cout << " " << std::setprecision(10) << r;
      std::cout << "\n";
      std::cout << "roots within full spectrum: "
                << (hs::quotient_spectrum_subset(s, part, 1e-7) ? "yes" : "no") << "\n";
      return 0;
    }

    if (ver->parsed()) {
      if (ver_list) {
        for (const auto& n : hs::suite_names()) std::cout << n << "\n";
        return 0;
      }
      if (ver_suite.empty()) throw hs::InvalidParams("verify needs --suite or --list");
      hs::GridRange grid;
      if (!ver_m_range.empty()) parse_range(ver_m_range, grid.m_lo, grid.m_hi);
      if (!ver_n_range.empty()) parse_range(ver_n_range, grid.n_lo, grid.n_hi);
      hs::VerificationReport report = hs::run_suite(ver_suite, grid, ver_tol, ver_jobs);
      auto emit = [&](std::ostream& os) {
        if (ver_format == "csv")
          report.write_csv(os);
        else
          report.write_jsonl(os);
      };
      if (ver_out.empty()) {
        emit(std::cout);
      } else {
        std::ofstream out(ver_out);
        if (!out) throw hs::IoError("cannot open " + ver_out);
        emit(out);
      }
      int fails = report.failures();
      std::cerr << report.rows.size() << " cells, " << fails << " failures\n";
      return fails == 0 ? 0 : 1;
    }

    if (sw->parsed()) {
      if (sw_family != "c3") throw hs::InvalidParams("unknown family: " + sw_family);
      if (sw_quantity != "energy" && sw_quantity != "spectrum")
        throw hs::InvalidParams("unknown quantity: " + sw_quantity);
      hs::GridRange grid{2, 8, 2, 8};
      parse_range(sw_m_range, grid.m_lo, grid.m_hi);
      parse_range(sw_n_range, grid.n_lo, grid.n_hi);
      std::ostringstream csv;
      csv << "m,n,L,U,closed_form_energy,brute_force_energy,difference\n";
      csv.precision(12);
      for (int m = std::max(2, grid.m_lo); m <= grid.m_hi; ++m)
        for (int n = std::max(2, grid.n_lo); n <= grid.n_hi; ++n) {
          hs::C3Params p{m, n};
          double closed = hs::energy_formula_c3(p);
          double brute = hs::seidel_energy(hs::gen_complete_bipartite(3, m, n).first);
          csv << m << "," << n << "," << hs::l_of(p) << "," << hs::u_of(p).get_str() << ","
              << closed << "," << brute << "," << closed - brute << "\n";
        }
      if (sw_out.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(sw_out);
        if (!out) throw hs::IoError("cannot open " + sw_out);
        out << csv.str();
      }
      return 0;
    }
  } catch (const hs::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const hs::NotEquitable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotEquitable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
