#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "cyhodge/suite.hpp"

namespace {

using namespace cyhodge;

ReportFormat parse_format(const std::string& f) {
  if (f == "text") return ReportFormat::text;
  if (f == "json") return ReportFormat::json;
  throw CLI::ValidationError("--format must be text or json");
}

Json hodge_table_json() {
  Json rows = Json::array();
  for (long k = 0; k <= 6; ++k) {
    HodgeNumberReport r = cy3_hodge_numbers(k);
    FixedLocusData fl = fixed_locus_from_k(k);
    Json breakdown = Json::array();
    for (const auto& [label, v] : r.breakdown)
      breakdown.push_back(Json{{"term", label}, {"contribution", v}});
    rows.push_back(Json{{"k", k},
                        {"r", fl.r},
                        {"n", fl.n},
                        {"h21", r.h21},
                        {"h11", r.h11},
                        {"b3", r.b3},
                        {"breakdown", breakdown}});
  }
  return Json{{"schema", "1"}, {"command", "hodge-table"}, {"table", rows}};
}

std::string hodge_table_text() {
  std::ostringstream os;
  os << "k   r   h21  h11  b3   n\n";
  os << "--------------------------\n";
  for (long k = 0; k <= 6; ++k) {
    HodgeNumberReport r = cy3_hodge_numbers(k);
    FixedLocusData fl = fixed_locus_from_k(k);
    os << "k=" << k << "  r=" << fl.r << "  h21=" << r.h21 << "  h11=" << r.h11
       << "  b3=" << r.b3 << "  n=" << fl.n << "\n";
  }
  return os.str();
}

int cmd_hodge_table(const std::string& format) {
  if (parse_format(format) == ReportFormat::json)
    std::cout << hodge_table_json().dump(2) << "\n";
  else
    std::cout << hodge_table_text();
  return 0;
}

int cmd_classify(const std::string& matrix_file, long m_max, long order_bound,
                 const std::string& format) {
  if (matrix_file.empty()) {
    std::vector<long> allowed = allowed_maximal_orders(m_max);
    if (parse_format(format) == ReportFormat::json) {
      Json primes = Json::object();
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        PrimeOrderVerdict v = prime_order_test(p, 4);
        primes[std::to_string(p)] =
            v == PrimeOrderVerdict::allowed
                ? "allowed"
                : (v == PrimeOrderVerdict::scalar_only ? "scalar_only" : "excluded");
      }
      Json j{{"schema", "1"},
             {"command", "classify"},
             {"m_max", m_max},
             {"allowed_orders", allowed},
             {"prime_order_test_b3_4", primes}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::ostringstream os;
    os << "maximal cohomology actions: allowed orders up to " << m_max << "\n";
    auto f9 = cyclotomic_factorization(9);
    os << "x^9 - 1 = ";
    for (auto it = f9.rbegin(); it != f9.rend(); ++it)
      os << "(" << it->second.to_string() << ")";
    os << "\n";
    os << "order 9: phi(9) = 6 primitive eigenvalues in one Galois orbit -> excluded\n";
    os << "orders 8 and 12: phi(8) = phi(12) = 4 primitive roots -> excluded\n";
    os << "odd prime orders: b3/2 = b3/(p-1) forces p = 3\n";
    os << "intermediate: only the prime divisors 2 and 3 can occur\n";
    os << "allowed maximal orders: ";
    for (size_t i = 0; i < allowed.size(); ++i) os << (i ? ", " : "") << allowed[i];
    os << "\n";
    std::cout << os.str();
    return 0;
  }
  RatMat a = ratmat_from_json(load_json_file(matrix_file));
  OrderAnalysis res = analyze_action(a, /*assume_maximal=*/true, order_bound);
  Json dims = Json::object();
  for (const auto& [d, ad] : res.eigenvalue_orbit_dims) dims[std::to_string(d)] = ad;
  Json j{{"schema", "1"},
         {"command", "classify"},
         {"order", res.order},
         {"dim", res.dim},
         {"eigenvalue_orbit_dims", dims},
         {"maximal_compatible", res.maximal_compatible},
         {"reason", maximal_reason_name(res.reason)},
         {"galois_dims_verified", res.galois_dims_verified},
         {"no_example_in_paper", res.no_example_in_paper}};
  if (parse_format(format) == ReportFormat::json)
    std::cout << j.dump(2) << "\n";
  else {
    std::ostringstream os;
    os << "order " << res.order << " on dimension " << res.dim << "\n";
    os << "orbit dims:";
    for (const auto& [d, ad] : res.eigenvalue_orbit_dims)
      os << "  a_" << d << " = " << ad;
    os << "\nmaximal_compatible: " << (res.maximal_compatible ? "yes" : "no")
       << " (" << maximal_reason_name(res.reason) << ")\n";
    std::cout << os.str();
  }
  return res.maximal_compatible ? 0 : 1;
}

int cmd_verify_isometry(const std::string& lattice_spec,
                        const std::string& matrix_file, long order_bound,
                        const std::string& format) {
  Lattice l;
  IntMat m;
  Json jm = load_json_file(matrix_file);
  if (jm.is_object() && jm.contains("lattice") && lattice_spec.empty()) {
    IsometryFile f = isometry_file_from_json(jm);
    l = f.lattice;
    m = f.matrix;
  } else {
    if (lattice_spec.empty())
      throw ParseError("need --lattice, or a matrix file with a \"lattice\" field");
    l = load_lattice_spec(lattice_spec);
    m = jm.is_object() && jm.contains("matrix") ? intmat_from_json(jm.at("matrix"))
                                                : intmat_from_json(jm);
  }
  LatticeIsometry iso = LatticeIsometry::validate(l, m, order_bound);
  auto mult = cyclotomic_multiplicities(iso);
  Json dims = Json::object();
  for (const auto& [d, ad] : mult) dims[std::to_string(d)] = ad;
  Json sigs = Json::object();
  std::ostringstream text;
  text << "order: " << iso.order() << "\nmultiplicities:";
  for (const auto& [d, ad] : mult) text << "  a_" << d << " = " << ad;
  text << "\n";
  if (!iso.lattice().alternating) {
    for (const auto& [d, ad] : mult) {
      long j = 1;
      while (std::gcd(j, d) != 1) ++j;
      Signature s = hermitian_signature(eigenspace_hermitian_form(iso, d, j));
      sigs[std::to_string(d)] = Json{{"positive", s.positive},
                                     {"negative", s.negative},
                                     {"zero", s.zero}};
      text << "eigenspace d=" << d << " (zeta_" << d << "^" << j << "): signature ("
           << s.positive << "," << s.negative << "," << s.zero << ")\n";
    }
  }
  if (parse_format(format) == ReportFormat::json) {
    Json j{{"schema", "1"},
           {"command", "verify-isometry"},
           {"order", iso.order()},
           {"multiplicities", dims},
           {"eigenspace_signatures", sigs}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

int cmd_check_monodromy(const std::string& f2_file,
                        const std::vector<std::string>& gen_files,
                        int word_length, const std::string& format) {
  CycMat f2 = cycmat_from_json(load_json_file(f2_file));
  std::vector<RatMat> gens;
  for (const auto& f : gen_files) gens.push_back(ratmat_from_json(load_json_file(f)));
  MumReport mr = mum_obstruction(gens, f2, word_length);
  bool blocks = mr.verdict == MumReport::Verdict::MUM_IMPOSSIBLE;
  Json j{{"schema", "1"},
         {"command", "check-monodromy"},
         {"blocks", blocks},
         {"even_dims", mr.w0_dims},
         {"mum_impossible", blocks},
         {"proof", mr.proof_line}};
  if (mr.blocker)
    j["witness_column"] = mr.blocker->witness_col;
  if (parse_format(format) == ReportFormat::json)
    std::cout << j.dump(2) << "\n";
  else {
    std::cout << "blocks: " << (blocks ? "yes" : "no") << "\n";
    if (blocks) {
      std::cout << "dim Im(N^3) over unipotent words:";
      for (long d : mr.w0_dims) std::cout << " " << d;
      std::cout << "\nverdict: MUM_IMPOSSIBLE (" << mr.proof_line << ")\n";
    } else {
      std::cout << "verdict: NOT_APPLICABLE (" << mr.proof_line << ")\n";
    }
  }
  return 0;
}

int cmd_pipeline(int r, const std::string& omega_file, const std::string& format) {
  std::optional<CycMat> omega;
  if (!omega_file.empty()) omega = cycmat_from_json(load_json_file(omega_file));
  PipelineRun run = run_pipeline(r, omega);
  const HodgeStructure& x = run.cy3;
  Json dims = Json::object();
  for (const auto& [pq, basis] : x.pieces)
    dims[std::to_string(pq.first) + "," + std::to_string(pq.second)] = basis.cols();
  Json filt = Json::array();
  for (long p = 3; p >= 1; --p) filt.push_back(x.filtration(p).cols());
  Json j{{"schema", "1"},
         {"command", "pipeline"},
         {"r", r},
         {"piece_dims", dims},
         {"filtration_dims_f3_f2_f1", filt},
         {"b3", x.dim},
         {"eta_on_h30", cycnum_to_json(run.eta)},
         {"f2_check", run.f2_check == F2Check::holds
                          ? "holds"
                          : (run.f2_check == F2Check::fails ? "fails"
                                                            : "alpha_is_real_scalar")},
         {"hermitian_sign_flipped", run.h_f2.flipped},
         {"cm_with_order3_action",
          run.cm == CmVerdict::cm_certified ? "cm_certified" : "not_certified"},
         {"consistency_with_quotient_k", run.consistency}};
  if (parse_format(format) == ReportFormat::json)
    std::cout << j.dump(2) << "\n";
  else {
    std::ostringstream os;
    os << "pipeline r=" << r << " (k=" << 6 - r << ")\n";
    os << "piece dims: (3,0)=" << x.piece_dim(3, 0) << " (2,1)=" << x.piece_dim(2, 1)
       << " (1,2)=" << x.piece_dim(1, 2) << " (0,3)=" << x.piece_dim(0, 3)
       << "  b3=" << x.dim << "\n";
    os << "eta on H^{3,0}: " << run.eta.to_string() << "\n";
    os << "F^2 eigenspace check: "
       << (run.f2_check == F2Check::holds ? "holds" : "fails") << "\n";
    os << "CM (order-3 action only): "
       << (run.cm == CmVerdict::cm_certified ? "cm_certified" : "not_certified")
       << "\n";
    std::cout << os.str();
  }
  bool ok = run.f2_check == F2Check::holds && run.consistency;
  return ok ? 0 : 1;
}

int cmd_paper_suite(std::uint64_t seed, const std::string& format) {
  SuiteConfig cfg;
  cfg.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  Report rep = run_paper_suite(cfg);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << emit_report(rep, parse_format(format));
  std::cerr << "paper-suite wall time: "
            << std::chrono::duration<double>(t1 - t0).count() << " s\n";
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for order-3 lattice isometries, "
               "quotient Hodge numbers, block monodromy and cohomology actions"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->capture_default_str();

  auto* tbl = app.add_subcommand("hodge-table", "quotient Hodge numbers for k = 0..6");

  std::string classify_matrix;
  long m_max = 60, order_bound = 60;
  auto* cls = app.add_subcommand("classify", "allowed orders of maximal actions");
  cls->add_option("--matrix", classify_matrix, "rational matrix JSON to analyze");
  cls->add_option("--m-max", m_max, "order scan bound")->capture_default_str();
  cls->add_option("--order-bound", order_bound, "matrix order bound")
      ->capture_default_str();

  std::string vi_lattice, vi_matrix;
  auto* vi = app.add_subcommand("verify-isometry",
                                "validate a lattice isometry and report eigendata");
  vi->add_option("--lattice", vi_lattice, "standard name (U, A2, E8_minus, K3, "
                                          "elliptic_H1) or lattice JSON file");
  vi->add_option("--matrix", vi_matrix, "integer matrix JSON file")->required();
  vi->add_option("--order-bound", order_bound, "")->capture_default_str();

  std::string mono_f2;
  std::vector<std::string> mono_gens;
  int word_length = 3;
  auto* mono = app.add_subcommand("check-monodromy",
                                  "block structure and the MUM obstruction");
  mono->add_option("--f2", mono_f2, "F^2 basis file (CycNum matrix JSON)")->required();
  mono->add_option("--gens", mono_gens, "generator matrix files")->required();
  mono->add_option("--word-length", word_length, "")->capture_default_str();

  int pipe_r = 1;
  std::string omega_file;
  auto* pipe = app.add_subcommand("pipeline",
                                  "period point to weight-3 structure, end to end");
  pipe->add_option("--r", pipe_r, "catalog parameter: 1, 3 or 5")->required();
  pipe->add_option("--omega", omega_file, "period point file (CycNum column JSON)");

  std::uint64_t seed = 0;
  auto* suite = app.add_subcommand("paper-suite", "run every reproduction check");
  suite->add_option("--seed", seed, "seed for the property suites")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tbl->parsed()) return cmd_hodge_table(format);
    if (cls->parsed()) return cmd_classify(classify_matrix, m_max, order_bound, format);
    if (vi->parsed()) return cmd_verify_isometry(vi_lattice, vi_matrix, order_bound, format);
    if (mono->parsed()) return cmd_check_monodromy(mono_f2, mono_gens, word_length, format);
    if (pipe->parsed()) return cmd_pipeline(pipe_r, omega_file, format);
    if (suite->parsed()) return cmd_paper_suite(seed, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
