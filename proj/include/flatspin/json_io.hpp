#pragma once

#include <string>

#include "flatspin/complexes.hpp"
#include "flatspin/equivalence.hpp"
#include "flatspin/surface.hpp"

namespace flatspin {

// Canonical surface JSON (bit-exact interchange):
// {"field_order": M, "polygons": [[{"order":M,"coeffs":["p/q",...]},...],...],
//  "gluings": [[[p,e],[q,f]],...]}
std::string surface_to_json(const TranslationSurface& s);

// Parses and validates; validation failures surface as flatspin::Error,
// malformed JSON as std::runtime_error from the parser.
TranslationSurface surface_from_json(const std::string& text);

std::string complex_to_json(const CellComplex& x);

// Equivalence witness for audit: the factor plus the cell bijection.
std::string matching_to_json(const Cyclo& factor, const CellMatching& matching);

} // namespace flatspin
