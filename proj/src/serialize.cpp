#include "cyhodge/serialize.hpp"

#include <fstream>

namespace cyhodge {

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num_mpz_t()))
    return Json(q.get_num().get_si());
  return Json(rat_to_string(q));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected a rational (integer or \"p/q\" string)");
}

Json cycnum_to_json(const CycNum& a) {
  Json coeffs = Json::array();
  for (const Rat& c : a.coeffs()) coeffs.push_back(rat_to_string(c));
  return Json{{"n", a.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return CycNum(rat_from_json(j));
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
    throw ParseError("expected a CycNum object {\"n\", \"coeffs\"}");
  long n = j.at("n").get<long>();
  std::vector<Rat> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
  return CycNum::from_coeffs(std::move(coeffs), n);
}

Json lattice_to_json(const Lattice& l) {
  return Json{{"rank", l.rank},
              {"gram", intmat_to_json(l.gram)},
              {"alternating", l.alternating}};
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram"))
    throw ParseError("expected a lattice object with a \"gram\" field");
  IntMat g = intmat_from_json(j.at("gram"));
  bool alt = j.value("alternating", false);
  Lattice l(g, alt);
  if (j.contains("rank") && j.at("rank").get<long>() != l.rank)
    throw ParseError("lattice rank field disagrees with the Gram matrix");
  return l;
}

Json intmat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
      if (mpz_fits_slong_p(m(i, j).get_mpz_t()))
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {
template <typename T, typename Fn>
Matrix<T> matrix_from_json(const Json& j, Fn entry) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<std::vector<T>> rows;
  for (const Json& jr : j) {
    if (!jr.is_array()) throw ParseError("expected a matrix row (array)");
    std::vector<T> row;
    for (const Json& je : jr) row.push_back(entry(je));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix<T>(0, 0);
  size_t w = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != w) throw ParseError("ragged matrix rows");
  return Matrix<T>::from_rows(rows);
}
}  // namespace

IntMat intmat_from_json(const Json& j) {
  return matrix_from_json<Int>(j, [](const Json& e) {
    if (e.is_number_integer()) return Int(static_cast<long>(e.get<long long>()));
    if (e.is_string()) {
      Rat q = parse_rat(e.get<std::string>());
      if (q.get_den() != 1) throw ParseError("expected an integer entry");
      return Int(q.get_num());
    }
    throw ParseError("expected an integer matrix entry");
  });
}

Json ratmat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMat ratmat_from_json(const Json& j) {
  return matrix_from_json<Rat>(j, rat_from_json);
}

Json cycmat_to_json(const CycMat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(cycnum_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

CycMat cycmat_from_json(const Json& j) {
  return matrix_from_json<CycNum>(j, cycnum_from_json);
}

IsometryFile isometry_file_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice") || !j.contains("matrix"))
    throw ParseError("expected an isometry object {\"lattice\", \"matrix\"}");
  IsometryFile f;
  const Json& jl = j.at("lattice");
  if (jl.is_string()) {
    auto std_name = standard_lattice_by_name(jl.get<std::string>());
    if (!std_name) throw ParseError("unknown standard lattice name");
    f.lattice = make_standard(*std_name);
  } else {
    f.lattice = lattice_from_json(jl);
  }
  f.matrix = intmat_from_json(j.at("matrix"));
  return f;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Lattice load_lattice_spec(const std::string& file_or_name) {
  if (auto std_name = standard_lattice_by_name(file_or_name))
    return make_standard(*std_name);
  return lattice_from_json(load_json_file(file_or_name));
}

}  // namespace cyhodge
