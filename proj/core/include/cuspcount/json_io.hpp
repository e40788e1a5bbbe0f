#pragma once

#include <string>

#include "cuspcount/classsum.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/lefschetz.hpp"
#include "cuspcount/motive.hpp"

namespace cuspcount {

// Every parser throws ParseError on malformed input.

// {"SL":3}, {"Res":[2,{"U":1}]}, {"Product":[{"Sp":4},{"U":1}]}
GroupSpec group_spec_from_json(const std::string& text);
std::string group_spec_to_json(const GroupSpec& spec);

// {"q": 2, "weil_numerator": [1, -1, 2], "s_degrees": [1,1], "t_degrees": []}
// weil_numerator defaults to [1]; coefficients may be numbers or strings.
CurveDatum curve_from_json(const std::string& text);
std::string curve_to_json(const CurveDatum& c);

// "SL:4", "Sp:6", "GL:3", "U:2", "SO:5"
GroupSpec parse_group_option(const std::string& text);

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
std::string load_json_argument(const std::string& arg);

std::string certificate_to_json(const SymbolicCertificate& cert);
std::string lefschetz_to_json(const LefschetzFunction& f);
std::string sym_poly_to_json(const SymPoly& p);

}  // namespace cuspcount
