#pragma once

#include "cyhodge/classify.hpp"
#include "cyhodge/monodromy.hpp"
#include "cyhodge/quotient.hpp"
#include "cyhodge/serialize.hpp"

namespace cyhodge {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  std::string verdict;  // PASS / FAIL / N/A
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;
  // wall-clock per result row; never serialized (reports must be
  // byte-identical for identical inputs and seed)
  std::vector<double> timings_seconds;

  void add(const std::string& name, const std::string& expected,
           const std::string& actual, bool pass);
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
};

enum class ReportFormat { text, json };
// Identical data in both formats; JSON is stable-key-order and depends only
// on inputs and seed (timing goes to stderr, never into the report).
std::string emit_report(const Report& r, ReportFormat format);

struct SuiteConfig {
  std::uint64_t seed = 0;
  long m_max = 60;
  long order_bound = 60;
  int isotropy_cases = 100;
  int mum_cases = 200;
  int centralizer_cases = 100;
  int galois_cases = 100;
  int signature_cases = 100;
  int cm_basis_changes = 20;
};

// Every acceptance criterion, in order: Hodge table, K3 lattice, catalog
// isometries, isotropy, the two pipelines, block=>even monodromy suite,
// centralizer equivalence, classification, Galois multiplicities, the
// signature cross-oracle, the CM checks, and the stored fixtures.
Report run_paper_suite(const SuiteConfig& config);

// One end-to-end run of the construction for a catalog parameter r: period
// point, K3 structure, elliptic factor, the weight-3 tensor structure and
// its checks.
struct PipelineRun {
  int r = 0;
  CycMat omega;
  HodgeStructure k3;
  HodgeStructure elliptic;
  HodgeStructure cy3;
  W3Hermitian h_f2;
  F2Check f2_check = F2Check::fails;
  CycNum eta;
  CmVerdict cm = CmVerdict::not_certified;
  bool consistency = false;
};
PipelineRun run_pipeline(int r, const std::optional<CycMat>& omega_override);

// Test-side signature oracle, independent of the LDL^* path: for a Hermitian
// matrix the characteristic polynomial has real coefficients and all-real
// roots, so certified coefficient signs count eigenvalues exactly
// (Descartes' rule is sharp for real-rooted polynomials).
Signature descartes_hermitian_signature(const CycMat& h);

// Random Hermitian matrix over Q(zeta_12) of the given size (M + M^*).
CycMat random_hermitian_q12(long size, std::mt19937_64& rng);

}  // namespace cyhodge
