#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superpoisson/bundle.hpp"
#include "superpoisson/pre_poisson.hpp"

namespace spo {

// Algebra files are JSON objects:
//
//   { "schema": 1, "name": "...", "field": {"degree": 1, "modulus": "0x3"},
//     "basis": [{"name": "e", "parity": 0}, ...],
//     "product": {"e,f": "f", ...}, "bracket": {...}, "squaring": {"f": "e"},
//     "unit": "e", "metadata": {...} }
//
// Table keys "a,b" must have a before b in basis order; the other half is
// filled in by symmetry. Setting "noncommutative_product": true allows every
// ordered pair for the product instead. Values are linear combinations such as
// "e + 3*f" with hexadecimal coefficients. A missing table means the
// structure is absent; an empty one means it is zero. A bracket without a
// squaring gets the zero squaring.

// Parses a linear combination over the basis of s.
Vec parse_combination(const Field& f, const SuperSpace& s, const std::string& text, const std::string& where);

AlgebraBundle algebra_from_json(const nlohmann::json& j, const std::string& source = "<input>");
AlgebraBundle parse_algebra(const std::string& text, const std::string& source = "<input>");
AlgebraBundle load_algebra(const std::string& path);

nlohmann::ordered_json algebra_to_json(const AlgebraBundle& a);
std::string serialize_algebra(const AlgebraBundle& a);

// Two-product files share the field and basis keys and carry full "star" and
// "triangle" tables over all ordered pairs.
TwoProductBundle parse_two_product(const std::string& text, const std::string& source = "<input>");
TwoProductBundle load_two_product(const std::string& path);
std::string serialize_two_product(const TwoProductBundle& b);

// Layer files: {"layers": [{"phi(e,f)->e": "1", ...}, ...]} with keys taken
// from the coordinate names of the degree-2 adjoint cochain space.
std::vector<Vec> parse_layers(const std::string& text, const std::vector<std::string>& coordinate_names,
                              const Field& f, const std::string& source = "<input>");

nlohmann::ordered_json report_to_json(const Report& r);

std::string read_file(const std::string& path);

}  // namespace spo
