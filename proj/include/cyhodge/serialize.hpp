#pragma once

#include <json.hpp>

#include "cyhodge/hodge.hpp"
#include "cyhodge/isometry.hpp"

namespace cyhodge {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rationals are fraction strings ("p/q", or "p" when integral)
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);  // accepts integers and strings

// CycNum: {"n": conductor, "coeffs": ["p/q", ...]}
Json cycnum_to_json(const CycNum& a);
CycNum cycnum_from_json(const Json& j);  // also accepts bare rationals

// Lattice: {"rank": int, "gram": [[int, ...], ...], "alternating": bool}
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);
Json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const Json& j);
// CycNum matrices: rows of entries, each entry a CycNum object or rational
Json cycmat_to_json(const CycMat& m);
CycMat cycmat_from_json(const Json& j);

// Isometry file: {"lattice": <name string | lattice object>, "matrix": [[int]]}
struct IsometryFile {
  Lattice lattice;
  IntMat matrix;
};
IsometryFile isometry_file_from_json(const Json& j);

Json load_json_file(const std::string& path);  // ParseError with file/position
// A standard lattice name, or a path to a lattice JSON file.
Lattice load_lattice_spec(const std::string& file_or_name);

}  // namespace cyhodge
