#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyhodge/suite.hpp"

namespace py = pybind11;
using namespace cyhodge;

namespace {

Rat rat_from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat(h.cast<long>());
  if (py::isinstance<py::str>(h)) return parse_rat(h.cast<std::string>());
  throw py::type_error("expected int or 'p/q' string");
}

RatMat ratmat_from_py(const py::object& rows) {
  std::vector<std::vector<Rat>> data;
  for (const py::handle& row : rows) {
    std::vector<Rat> r;
    for (const py::handle& e : row) r.push_back(rat_from_py(e));
    data.push_back(std::move(r));
  }
  return RatMat::from_rows(data);
}

IntMat intmat_from_py(const py::object& rows) {
  RatMat r = ratmat_from_py(rows);
  IntMat m(r.rows(), r.cols());
  for (long i = 0; i < r.rows(); ++i)
    for (long j = 0; j < r.cols(); ++j) {
      if (r(i, j).get_den() != 1) throw py::value_error("expected integer entries");
      m(i, j) = r(i, j).get_num();
    }
  return m;
}

py::list ratmat_to_py(const RatMat& m) {
  py::list rows;
  for (long i = 0; i < m.rows(); ++i) {
    py::list row;
    for (long j = 0; j < m.cols(); ++j) row.append(rat_to_string(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list intmat_to_py(const IntMat& m) {
  py::list rows;
  for (long i = 0; i < m.rows(); ++i) {
    py::list row;
    for (long j = 0; j < m.cols(); ++j) row.append(py::int_(m(i, j).get_si()));
    rows.append(row);
  }
  return rows;
}

py::tuple sig_to_py(const Signature& s) {
  return py::make_tuple(s.positive, s.negative, s.zero);
}

Lattice lattice_from_name(const std::string& name) {
  auto s = standard_lattice_by_name(name);
  if (!s) throw py::value_error("unknown standard lattice: " + name);
  return make_standard(*s);
}

py::dict hodge_report_to_py(const HodgeNumberReport& r) {
  py::dict d;
  d["h11"] = r.h11;
  d["h21"] = r.h21;
  d["b3"] = r.b3;
  py::list breakdown;
  for (const auto& [label, v] : r.breakdown)
    breakdown.append(py::make_tuple(label, v));
  d["breakdown"] = breakdown;
  if (r.fixture_not_computed) d["fixture_not_computed"] = true;
  return d;
}

py::dict pipeline_to_py(const PipelineRun& run) {
  py::dict d;
  d["r"] = run.r;
  d["b3"] = run.cy3.dim;
  py::dict dims;
  for (const auto& [pq, basis] : run.cy3.pieces)
    dims[py::str(std::to_string(pq.first) + "," + std::to_string(pq.second))] =
        basis.cols();
  d["piece_dims"] = dims;
  d["eta_on_h30"] = run.eta.to_string();
  d["f2_check"] = run.f2_check == F2Check::holds
                      ? "holds"
                      : (run.f2_check == F2Check::fails ? "fails"
                                                        : "alpha_is_real_scalar");
  d["cm_with_order3_action"] =
      run.cm == CmVerdict::cm_certified ? "cm_certified" : "not_certified";
  d["consistency_with_quotient_k"] = run.consistency;
  d["hermitian_sign_flipped"] = run.h_f2.flipped;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cyhodge, m) {
  m.doc() = "exact cyclotomic lattice isometries, quotient Hodge numbers, "
            "block monodromy and cohomology-action classification";

  py::class_<CycNum>(m, "CycNum")
      .def(py::init([](long v) { return CycNum(v); }))
      .def(py::init([](const std::string& s) { return CycNum(parse_rat(s)); }))
      .def_static("root_of_unity", &CycNum::root_of_unity, py::arg("n"),
                  py::arg("k") = 1, py::arg("conductor_bound") = kDefaultConductorBound)
      .def_static("from_coeffs",
                  [](const py::object& coeffs, long n) {
                    std::vector<Rat> c;
                    for (const py::handle& h : coeffs) c.push_back(rat_from_py(h));
                    return CycNum::from_coeffs(std::move(c), n);
                  })
      .def_property_readonly("conductor", &CycNum::conductor)
      .def_property_readonly("coeffs",
                             [](const CycNum& a) {
                               py::list out;
                               for (const Rat& c : a.coeffs())
                                 out.append(rat_to_string(c));
                               return out;
                             })
      .def("is_zero", &CycNum::is_zero)
      .def("is_rational", &CycNum::is_rational)
      .def("is_real", &CycNum::is_real)
      .def("conj", &CycNum::conj)
      .def("galois", &CycNum::galois)
      .def("pow", &CycNum::pow)
      .def("inverse", &CycNum::inverse)
      .def("certified_sign", &CycNum::certified_sign, py::arg("start_bits") = 0)
      .def("embed",
           [](const CycNum& a, long bits) {
             SignedInterval iv = a.embed(bits);
             py::dict d;
             d["real_lo"] = rat_to_string(iv.real_lo);
             d["real_hi"] = rat_to_string(iv.real_hi);
             d["imag_lo"] = rat_to_string(iv.imag_lo);
             d["imag_hi"] = rat_to_string(iv.imag_hi);
             d["real_mid"] = iv.real_mid().get_d();
             d["imag_mid"] = iv.imag_mid().get_d();
             return d;
           },
           py::arg("precision_bits") = 64)
      .def("__add__", [](const CycNum& a, const CycNum& b) { return a + b; })
      .def("__sub__", [](const CycNum& a, const CycNum& b) { return a - b; })
      .def("__mul__", [](const CycNum& a, const CycNum& b) { return a * b; })
      .def("__truediv__", [](const CycNum& a, const CycNum& b) { return a / b; })
      .def("__neg__", [](const CycNum& a) { return -a; })
      .def("__eq__", [](const CycNum& a, const CycNum& b) { return a == b; })
      .def("__repr__", &CycNum::to_string);

  py::class_<Lattice>(m, "Lattice")
      .def(py::init([](const py::object& gram, bool alternating) {
             return Lattice(intmat_from_py(gram), alternating);
           }),
           py::arg("gram"), py::arg("alternating") = false)
      .def_static("standard", &lattice_from_name)
      .def_property_readonly("rank", [](const Lattice& l) { return l.rank; })
      .def_property_readonly("alternating",
                             [](const Lattice& l) { return l.alternating; })
      .def_property_readonly("gram", [](const Lattice& l) { return intmat_to_py(l.gram); })
      .def("signature", [](const Lattice& l) { return sig_to_py(signature_of(l)); })
      .def("is_even_unimodular",
           [](const Lattice& l) {
             EvenUnimodular eu = is_even_unimodular(l);
             return py::make_tuple(eu.even, eu.unimodular);
           })
      .def("det", [](const Lattice& l) { return lattice_det(l).get_si(); })
      .def("direct_sum",
           [](const Lattice& a, const Lattice& b) { return direct_sum(a, b); })
      .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; });

  py::class_<LatticeIsometry>(m, "LatticeIsometry")
      .def_property_readonly("order", &LatticeIsometry::order)
      .def_property_readonly("matrix",
                             [](const LatticeIsometry& i) { return intmat_to_py(i.matrix()); })
      .def("multiplicities",
           [](const LatticeIsometry& i) {
             py::dict d;
             for (const auto& [k, v] : cyclotomic_multiplicities(i))
               d[py::int_(k)] = v;
             return d;
           })
      .def("eigenspace_dim",
           [](const LatticeIsometry& i, long d, long j) {
             return eigenspace_basis(i, d, j).cols();
           })
      .def("eigenspace_signature", [](const LatticeIsometry& i, long d, long j) {
        return sig_to_py(hermitian_signature(eigenspace_hermitian_form(i, d, j)));
      });

  m.def("validate_isometry",
        [](const Lattice& l, const py::object& matrix, long order_bound) {
          return LatticeIsometry::validate(l, intmat_from_py(matrix), order_bound);
        },
        py::arg("lattice"), py::arg("matrix"), py::arg("order_bound") = 60);
  m.def("catalog_order3",
        [](int r) { return catalog_order3(r); },
        py::arg("r"), py::return_value_policy::reference);

  m.def("fixed_locus_from_k", [](long k) {
    FixedLocusData f = fixed_locus_from_k(k);
    return py::make_tuple(f.k, f.n, f.r);
  });
  m.def("invariant_h11_product", &invariant_h11_product);
  m.def("cy3_hodge_numbers",
        [](long k) { return hodge_report_to_py(cy3_hodge_numbers(k)); });
  m.def("borcea_voisin_z2_example",
        []() { return hodge_report_to_py(borcea_voisin_z2_example()); });

  m.def("run_pipeline",
        [](int r) { return pipeline_to_py(run_pipeline(r, std::nullopt)); },
        py::arg("r"));

  m.def("allowed_maximal_orders", &allowed_maximal_orders, py::arg("m_max") = 60);
  m.def("prime_order_test", [](long p, long b3) {
    switch (prime_order_test(p, b3)) {
      case PrimeOrderVerdict::allowed: return "allowed";
      case PrimeOrderVerdict::scalar_only: return "scalar_only";
      default: return "excluded";
    }
  });
  m.def("cyclotomic_factorization", [](long m) {
    py::list out;
    for (const auto& [d, phi] : cyclotomic_factorization(m))
      out.append(py::make_tuple(d, phi.to_string()));
    return out;
  });
  m.def("analyze_action",
        [](const py::object& matrix, bool assume_maximal, long order_bound) {
          OrderAnalysis a = analyze_action(ratmat_from_py(matrix), assume_maximal,
                                           order_bound);
          py::dict d;
          d["order"] = a.order;
          d["dim"] = a.dim;
          py::dict dims;
          for (const auto& [k, v] : a.eigenvalue_orbit_dims) dims[py::int_(k)] = v;
          d["eigenvalue_orbit_dims"] = dims;
          d["maximal_compatible"] = a.maximal_compatible;
          d["reason"] = maximal_reason_name(a.reason);
          d["no_example_in_paper"] = a.no_example_in_paper;
          return d;
        },
        py::arg("matrix"), py::arg("assume_maximal") = true,
        py::arg("order_bound") = 60);

  m.def("nilpotent_log",
        [](const py::object& t) { return ratmat_to_py(nilpotent_log(ratmat_from_py(t))); });
  m.def("weight_w0_dim",
        [](const py::object& n) { return weight_w0_dim(ratmat_from_py(n)); });
  m.def("mum_obstruction_json",
        [](const std::string& f2_json, const std::vector<std::string>& gens_json,
           int word_length) {
          CycMat f2 = cycmat_from_json(Json::parse(f2_json));
          std::vector<RatMat> gens;
          for (const auto& g : gens_json)
            gens.push_back(ratmat_from_json(Json::parse(g)));
          MumReport mr = mum_obstruction(gens, f2, word_length);
          py::dict d;
          bool blocks = mr.verdict == MumReport::Verdict::MUM_IMPOSSIBLE;
          d["blocks"] = blocks;
          d["mum_impossible"] = blocks;
          d["even_dims"] = mr.w0_dims;
          d["proof"] = mr.proof_line;
          return d;
        },
        py::arg("f2_json"), py::arg("gens_json"), py::arg("word_length") = 3);

  m.def("paper_suite",
        [](std::uint64_t seed) {
          SuiteConfig cfg;
          cfg.seed = seed;
          Report rep = run_paper_suite(cfg);
          py::list results;
          for (const auto& c : rep.results) {
            py::dict d;
            d["name"] = c.name;
            d["expected"] = c.expected;
            d["actual"] = c.actual;
            d["verdict"] = c.verdict;
            results.append(d);
          }
          py::dict out;
          out["seed"] = rep.seed;
          out["results"] = results;
          out["all_pass"] = rep.all_pass();
          return out;
        },
        py::arg("seed") = 0);
}
