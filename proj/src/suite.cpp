#include "cyhodge/suite.hpp"

#include <chrono>
#include <sstream>

namespace cyhodge {

void Report::add(const std::string& name, const std::string& expected,
                 const std::string& actual, bool pass) {
  results.push_back({name, expected, actual, pass ? "PASS" : "FAIL"});
}

bool Report::all_pass() const {
  for (const auto& r : results)
    if (r.verdict == "FAIL") return false;
  return true;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json j;
    j["schema"] = "1";
    j["command"] = r.command;
    j["seed"] = r.seed;
    Json results = Json::array();
    for (const auto& c : r.results)
      results.push_back(Json{{"name", c.name},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"verdict", c.verdict}});
    j["results"] = results;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
  }
  size_t wn = 4, we = 8, wa = 6;
  for (const auto& c : r.results) {
    wn = std::max(wn, c.name.size());
    we = std::max(we, c.expected.size());
    wa = std::max(wa, c.actual.size());
  }
  std::ostringstream os;
  os << "command: " << r.command << "   seed: " << r.seed << "\n";
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("name", wn) << "  " << pad("expected", we) << "  " << pad("actual", wa)
     << "  verdict\n";
  os << std::string(wn + we + wa + 13, '-') << "\n";
  for (const auto& c : r.results)
    os << pad(c.name, wn) << "  " << pad(c.expected, we) << "  " << pad(c.actual, wa)
       << "  " << c.verdict << "\n";
  os << (r.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

namespace {

std::string sig_str(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return os.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

RatMat companion_of(const RatPoly& p) {
  long n = p.degree();
  RatMat c(n, n);
  for (long i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (long i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

}  // namespace

Signature descartes_hermitian_signature(const CycMat& h) {
  if (h.rows() != h.cols() || conj_transpose(h) != h)
    throw std::invalid_argument("descartes oracle: not Hermitian");
  long n = h.rows();
  std::vector<CycNum> cp = charpoly(h);
  // coefficients must be real (eigenvalues are real)
  for (const CycNum& c : cp)
    if (!c.is_real()) throw std::logic_error("descartes oracle: non-real coefficient");
  Signature sig;
  long z = 0;
  while (z <= n && cp[z].is_zero()) ++z;
  sig.zero = z;
  // strip x^z, then count sign changes of the remaining sequence
  int prev = 0;
  long changes = 0;
  for (long i = z; i <= n; ++i) {
    if (cp[i].is_zero()) continue;
    int s = cp[i].certified_sign();
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  sig.positive = changes;
  sig.negative = n - sig.zero - sig.positive;
  return sig;
}

CycMat random_hermitian_q12(long size, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-3, 3);
  CycMat m(size, size);
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j) {
      CycNum v(Rat(small(rng)));
      for (int k = 1; k <= 3; ++k)
        v = v + CycNum::root_of_unity(12, k) * CycNum(Rat(small(rng)));
      m(i, j) = v;
    }
  return m + conj_transpose(m);
}

PipelineRun run_pipeline(int r, const std::optional<CycMat>& omega_override) {
  PipelineRun run;
  run.r = r;
  const LatticeIsometry& iso = catalog_order3(r);
  CycMat h = eigenspace_hermitian_form(iso, 3, 2);
  run.omega = omega_override ? *omega_override : pick_positive_period(h);
  run.k3 = k3_from_period(iso, run.omega);
  run.elliptic = elliptic_fermat_hs();
  run.cy3 = cy3_tensor_hs(run.k3, run.elliptic);
  run.h_f2 = weight3_hermitian(run.cy3);
  run.f2_check = f2_eigenspace_check(run.cy3, *run.cy3.action);
  auto eta = hk0_eigenvalue(run.cy3, *run.cy3.action);
  if (!eta) throw std::logic_error("pipeline: H^{3,0} not preserved");
  run.eta = *eta;
  run.cm = cm_sufficient_check(run.cy3, *run.cy3.action);
  run.consistency = consistency_with_tensor(6 - r, run.cy3);
  return run;
}

namespace {

// ---- the acceptance criteria, one function each --------------------------

void check_hodge_table(Report& rep) {
  bool ok = true;
  std::ostringstream actual;
  for (long k = 0; k <= 6; ++k) {
    HodgeNumberReport r = cy3_hodge_numbers(k);
    long sum = 0;
    for (const auto& [label, v] : r.breakdown) sum += v;
    bool row = r.h21 == 6 - k && r.h11 == 18 + 11 * k && r.b3 == 2 * (r.h21 + 1) &&
               sum == r.h11;
    ok = ok && row;
  }
  // the two closed forms agree as polynomials in k
  RatPoly k_poly({Rat(0), Rat(1)});
  RatPoly lhs = RatPoly::constant(Rat(9)) + k_poly * Rat(2)   // 21 - 2(6-k)
                + k_poly * Rat(6)                             // curve blow-ups
                + k_poly * Rat(3) + RatPoly::constant(Rat(9));  // 3(k+3)
  RatPoly rhs = RatPoly::constant(Rat(18)) + k_poly * Rat(11);
  bool sym = (lhs == rhs);
  ok = ok && sym;
  actual << (ok ? "all rows match" : "mismatch") << ", symbolic identity "
         << (sym ? "holds" : "fails");
  rep.add("hodge-number-table", "(h21,h11)=(6-k,18+11k), identity holds",
          actual.str(), ok);
}

void check_k3_lattice(Report& rep) {
  Lattice k3 = make_standard(StandardLattice::K3);
  Signature s = signature_of(k3);
  EvenUnimodular eu = is_even_unimodular(k3);
  bool ok = s == Signature{3, 19, 0} && eu.even && eu.unimodular;
  std::ostringstream actual;
  actual << sig_str(s) << (eu.even ? ", even" : ", odd")
         << (eu.unimodular ? ", |det|=1" : ", |det|!=1");
  rep.add("k3-lattice", "(3,19,0), even, |det|=1", actual.str(), ok);
}

void check_catalog(Report& rep) {
  bool ok = true;
  std::ostringstream actual;
  for (int r : {1, 3, 5}) {
    const LatticeIsometry& iso = catalog_order3(r);
    auto mult = cyclotomic_multiplicities(iso);
    Signature es = hermitian_signature(eigenspace_hermitian_form(iso, 3, 2));
    // fixed part, exactly
    IntMat fixed = integer_kernel(iso.matrix() - IntMat::identity(22));
    Signature fs = signature_of(to_rat(fixed.transpose() * iso.lattice().gram * fixed));
    bool additive = fs.positive + 2 * es.positive == 3 &&
                    fs.negative + 2 * es.negative == 19 && fs.zero == 0 && es.zero == 0;
    bool row = iso.order() == 3 && mult.at(3) == r + 1 &&
               es == Signature{1, r, 0} && additive;
    ok = ok && row;
    actual << "r=" << r << ":a3=" << mult.at(3) << ",sig=" << sig_str(es)
           << (additive ? "+fixed=(3,19)" : "+fixed mismatch") << " ";
  }
  rep.add("catalog-isometries", "order 3, a3=r+1, sig (1,r,0), additivity",
          actual.str(), ok);
}

void check_isotropy(Report& rep, const SuiteConfig& cfg) {
  long violations = 0;
  int cases = 0;
  std::uniform_int_distribution<long> small(-3, 3);
  CycNum xi = CycNum::root_of_unity(3);
  int idx = 0;
  while (cases < cfg.isotropy_cases) {
    for (int r : {1, 3, 5}) {
      for (long j : {1L, 2L}) {
        if (cases >= cfg.isotropy_cases) break;
        std::mt19937_64 rng(split_seed(cfg.seed, 4000 + idx++));
        const LatticeIsometry& iso = catalog_order3(r);
        CycMat b = eigenspace_basis(iso, 3, j);
        CycMat v(b.rows(), 1);
        bool nonzero = false;
        while (!nonzero) {
          CycMat coeff(b.cols(), 1);
          for (long i = 0; i < b.cols(); ++i) {
            coeff(i, 0) = CycNum(Rat(small(rng))) + xi * CycNum(Rat(small(rng)));
            if (!coeff(i, 0).is_zero()) nonzero = true;
          }
          if (nonzero) v = b * coeff;
        }
        CycMat q = v.transpose() * to_cyc(iso.lattice().gram) * v;
        if (!q(0, 0).is_zero()) ++violations;
        ++cases;
      }
    }
  }
  std::ostringstream actual;
  actual << violations << " violations in " << cases << " eigenvectors";
  rep.add("isotropy", "Q(w,w)=0, zero violations", actual.str(), violations == 0);
}

void check_pipelines(Report& rep, std::map<int, PipelineRun>& pipelines) {
  bool ok = true;
  std::ostringstream actual;
  CycNum xi = CycNum::root_of_unity(3);
  for (auto& [k, r] : std::map<int, int>{{5, 1}, {3, 3}}) {
    PipelineRun& run = pipelines.at(r);
    const HodgeStructure& x = run.cy3;
    bool dims = x.piece_dim(3, 0) == 1 && x.piece_dim(2, 1) == r &&
                x.piece_dim(1, 2) == r && x.piece_dim(0, 3) == 1 &&
                x.dim == 2 * r + 2;
    bool filt = x.filtration(3).cols() == 1 && x.filtration(2).cols() == 1 + r &&
                x.filtration(1).cols() == 1 + 2 * r;
    bool holds = run.f2_check == F2Check::holds && run.eta == xi;
    bool cons = consistency_with_tensor(k, x);
    bool hsig = hermitian_signature(run.h_f2.h) == Signature{1, r, 0};
    ok = ok && dims && filt && holds && cons && hsig;
    actual << "k=" << k << ":dims(1," << x.piece_dim(2, 1) << ","
           << x.piece_dim(1, 2) << ",1),b3=" << x.dim << ","
           << (holds ? "F2=Eig(a,xi)" : "F2 check fails") << " ";
  }
  rep.add("tensor-pipelines", "dims (1,r,r,1), b3=2r+2, F2 check holds with eta=xi",
          actual.str(), ok);
}

void check_mum(Report& rep, const SuiteConfig& cfg,
               std::map<int, PipelineRun>& pipelines) {
  long violations = 0;
  std::vector<long> dims_seen;
  int cases = 0;
  const int rs[3] = {1, 3, 5};
  for (int i = 0; i < cfg.mum_cases; ++i) {
    std::mt19937_64 rng(split_seed(cfg.seed, 6000 + i));
    const PipelineRun& run = pipelines.at(rs[i % 3]);
    CycMat f2 = f2_basis(run.cy3);
    RatMat g = random_block_unipotent(f2, rng);
    RatMat n = nilpotent_log(g);
    long d = weight_w0_dim(n);
    if (d % 2 != 0) ++violations;
    if (i < 12) dims_seen.push_back(d);
    MumReport mr = mum_obstruction({g}, f2, 2);
    if (mr.verdict != MumReport::Verdict::MUM_IMPOSSIBLE) ++violations;
    ++cases;
  }
  // a non-block generator must be rejected as NotApplicable
  {
    std::mt19937_64 rng(split_seed(cfg.seed, 6999));
    const PipelineRun& run = pipelines.at(1);
    CycMat f2 = f2_basis(run.cy3);
    RatMat q = to_rat(run.cy3.form.gram);
    bool got_na = false;
    for (int tries = 0; tries < 16 && !got_na; ++tries) {
      RatMat t = random_symplectic_transvection(q, rng);
      MumReport mr = mum_obstruction({t}, f2, 1);
      got_na = mr.verdict == MumReport::Verdict::NOT_APPLICABLE;
    }
    if (!got_na) ++violations;
  }
  std::ostringstream actual;
  actual << violations << " violations in " << cases
         << " cases; first dims " << join_longs(dims_seen);
  rep.add("block-even-mum", "dim Im(N^3) even, MUM_IMPOSSIBLE, zero violations",
          actual.str(), violations == 0);
}

void check_centralizer(Report& rep, const SuiteConfig& cfg,
                       std::map<int, PipelineRun>& pipelines) {
  const PipelineRun& run = pipelines.at(1);
  CycMat f2 = f2_basis(run.cy3);
  const CycMat& h = run.h_f2.h;
  RatMat q = to_rat(run.cy3.form.gram);
  const RatMat& alpha = *run.cy3.action;
  long violations = 0;
  int commuting = 0, non_commuting = 0;
  for (int i = 0; i < cfg.centralizer_cases; ++i) {
    std::mt19937_64 rng(split_seed(cfg.seed, 7000 + i));
    RatMat g = (i % 2 == 0) ? random_h_unitary_real(f2, h, rng)
                            : random_symplectic_transvection(q, rng);
    bool lhs = centralizer_membership(g, alpha, f2, q);
    bool rhs = block_is_h_unitary(g, f2, h);
    if (lhs != rhs) ++violations;
    (lhs ? commuting : non_commuting)++;
  }
  // an eigenspace swap, when the small search finds one, must land on the
  // non-commuting side with a failing block test
  if (auto swap = find_eigenspace_swap(alpha, q, f2)) {
    bool lhs = centralizer_membership(*swap, alpha, f2, q);
    bool rhs = block_is_h_unitary(*swap, f2, h);
    if (lhs || rhs) ++violations;
  }
  std::ostringstream actual;
  actual << violations << " violations (" << commuting << " commuting, "
         << non_commuting << " not)";
  rep.add("centralizer-equivalence",
          "commuting <=> block-diagonal and H-unitary, zero violations",
          actual.str(), violations == 0);
}

void check_classification(Report& rep, const SuiteConfig& cfg) {
  bool ok = true;
  std::vector<long> allowed = allowed_maximal_orders(cfg.m_max);
  ok = ok && allowed == std::vector<long>{1, 2, 3, 4, 6};
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    PrimeOrderVerdict v = prime_order_test(p, 8);
    ok = ok && (v == (p == 3 ? PrimeOrderVerdict::allowed : PrimeOrderVerdict::excluded));
  }
  ok = ok && prime_order_test(2, 8) == PrimeOrderVerdict::scalar_only;
  OrderAnalysis a9 = analyze_action(companion_of(cyclotomic_poly(9)), true, cfg.order_bound);
  ok = ok && a9.order == 9 && a9.reason == MaximalReason::TOO_MANY_ORBITS &&
       euler_phi(9) == 6;
  OrderAnalysis a8 = analyze_action(companion_of(cyclotomic_poly(8)), true, cfg.order_bound);
  OrderAnalysis a12 = analyze_action(companion_of(cyclotomic_poly(12)), true, cfg.order_bound);
  ok = ok && a8.reason == MaximalReason::TOO_MANY_ORBITS && euler_phi(8) == 4;
  ok = ok && a12.reason == MaximalReason::TOO_MANY_ORBITS && euler_phi(12) == 4;
  std::ostringstream actual;
  actual << "allowed={" << join_longs(allowed) << "}, m=9: " << maximal_reason_name(a9.reason)
         << " (6 primitive roots), phi(8)=phi(12)=4 excluded";
  rep.add("classification", "{1,2,3,4,6}; p=3 only; 9, 8, 12 excluded",
          actual.str(), ok);
}

void check_galois(Report& rep, const SuiteConfig& cfg) {
  long violations = 0;
  const std::vector<long> ds = {1, 2, 3, 4, 6, 8, 12};
  for (int i = 0; i < cfg.galois_cases; ++i) {
    std::mt19937_64 rng(split_seed(cfg.seed, 9000 + i));
    // random cyclotomic companion blocks, total dim <= 8
    std::vector<long> picks;
    long dim = 0;
    std::uniform_int_distribution<size_t> pick(0, ds.size() - 1);
    while (true) {
      long d = ds[pick(rng)];
      if (dim + euler_phi(d) > 8) break;
      picks.push_back(d);
      dim += euler_phi(d);
      if (dim >= 6) break;
    }
    if (picks.empty()) picks.push_back(3), dim = 2;
    RatMat a(dim, dim);
    long off = 0;
    std::map<long, long> expect;
    for (long d : picks) {
      RatMat c = companion_of(cyclotomic_poly(d));
      for (long r = 0; r < c.rows(); ++r)
        for (long s = 0; s < c.cols(); ++s) a(off + r, off + s) = c(r, s);
      off += c.rows();
      expect[d] += 1;
    }
    IntMat t = random_unimodular(dim, rng);
    RatMat tr = to_rat(t);
    a = tr * a * *inverse_of(tr);

    OrderAnalysis res = analyze_action(a, false, cfg.order_bound);
    if (res.eigenvalue_orbit_dims != expect || !res.galois_dims_verified) ++violations;
  }
  std::ostringstream actual;
  actual << violations << " violations in " << cfg.galois_cases << " matrices";
  rep.add("galois-multiplicities",
          "equal eigenspace dims across each primitive orbit, zero violations",
          actual.str(), violations == 0);
}

void check_signature_oracle(Report& rep, const SuiteConfig& cfg) {
  long disagreements = 0;
  for (int i = 0; i < cfg.signature_cases; ++i) {
    std::mt19937_64 rng(split_seed(cfg.seed, 10000 + i));
    long size = 1 + (i % 6);
    CycMat h = random_hermitian_q12(size, rng);
    Signature ldl = hermitian_signature(h);
    Signature des = descartes_hermitian_signature(h);
    if (!(ldl == des)) ++disagreements;
  }
  std::ostringstream actual;
  actual << disagreements << " disagreements in " << cfg.signature_cases
         << " Hermitian matrices over Q(zeta_12)";
  rep.add("signature-oracle", "LDL* equals certified Descartes count",
          actual.str(), disagreements == 0);
}

void check_cm(Report& rep, const SuiteConfig& cfg,
              std::map<int, PipelineRun>& pipelines) {
  bool ok = true;
  HodgeStructure e = elliptic_fermat_hs();
  RatMat r = *e.action;
  ok = ok && cm_sufficient_check(e, r) == CmVerdict::cm_certified;
  // stability under rational basis changes
  for (int i = 0; i < cfg.cm_basis_changes; ++i) {
    std::mt19937_64 rng(split_seed(cfg.seed, 11000 + i));
    IntMat t = random_unimodular(2, rng);
    RatMat tr = to_rat(t);
    RatMat tinv = *inverse_of(tr);
    HodgeStructure moved;
    moved.weight = e.weight;
    moved.dim = e.dim;
    for (const auto& [pq, basis] : e.pieces)
      moved.pieces[pq] = to_cyc(tinv) * basis;
    moved.form = Lattice(t.transpose() * e.form.gram * t, true);
    moved.action = tinv * r * tr;
    validate_hodge_structure(moved);
    ok = ok && cm_sufficient_check(moved, *moved.action) == CmVerdict::cm_certified;
  }
  // identity endomorphism certifies nothing
  ok = ok && cm_sufficient_check(e, RatMat::identity(2)) == CmVerdict::not_certified;
  // generic r=1 CY structure: the order-3 action alone is not enough
  const PipelineRun& run = pipelines.at(1);
  ok = ok && run.cm == CmVerdict::not_certified;
  rep.add("cm-sufficient",
          "elliptic certified (stable under basis change); r=1 CY not certified",
          ok ? "as expected" : "mismatch", ok);
}

void check_fixtures(Report& rep) {
  HodgeNumberReport bv = borcea_voisin_z2_example();
  bool ok = bv.h11 == 61 && bv.h21 == 1 && bv.b3 == 4 && bv.fixture_not_computed;
  for (long k = 0; k <= 6; ++k) {
    FixedLocusData fl = fixed_locus_from_k(k);
    ok = ok && fl.k == k && fl.n == k + 3 && fl.r == 6 - k;
  }
  bool rejected = false;
  try {
    fixed_locus_from_k(7);
  } catch (const std::out_of_range&) {
    rejected = true;
  }
  ok = ok && rejected;
  std::ostringstream actual;
  actual << "BV=(" << bv.h11 << "," << bv.h21 << "), b3=" << bv.b3
         << ", locus table ok, k=7 rejected";
  rep.add("stored-fixtures", "BV=(61,1), n=k+3, r=6-k, k=7 rejected",
          actual.str(), ok);
}

}  // namespace

Report run_paper_suite(const SuiteConfig& config) {
  Report rep;
  rep.command = "paper-suite";
  rep.seed = config.seed;
  rep.timings_seconds.clear();

  std::map<int, PipelineRun> pipelines;
  for (int r : {1, 3, 5}) pipelines.emplace(r, run_pipeline(r, std::nullopt));

  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    size_t before = rep.results.size();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    while (rep.timings_seconds.size() < rep.results.size())
      rep.timings_seconds.push_back(sec);
    (void)before;
  };

  timed([&] { check_hodge_table(rep); });
  timed([&] { check_k3_lattice(rep); });
  timed([&] { check_catalog(rep); });
  timed([&] { check_isotropy(rep, config); });
  timed([&] { check_pipelines(rep, pipelines); });
  timed([&] { check_mum(rep, config, pipelines); });
  timed([&] { check_centralizer(rep, config, pipelines); });
  timed([&] { check_classification(rep, config); });
  timed([&] { check_galois(rep, config); });
  timed([&] { check_signature_oracle(rep, config); });
  timed([&] { check_cm(rep, config, pipelines); });
  timed([&] { check_fixtures(rep); });
  return rep;
}

}  // namespace cyhodge
