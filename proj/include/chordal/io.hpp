#ifndef CHORDAL_IO_HPP
#define CHORDAL_IO_HPP

#include <string>
#include <string_view>

#include "chordal/betti.hpp"
#include "chordal/chordality.hpp"
#include "chordal/complex.hpp"
#include "chordal/ideal.hpp"
#include "json.hpp"

namespace chordal {

using Json = nlohmann::ordered_json;

// Complex JSON: {"n": 5, "facets": [[2,5],[1,4,5],[1,2,3,4]]}.
// VOID is "facets": null and {∅} is "facets": [[]]. A complex whose ground
// set is not [n] also carries "vertices": [...].
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

// Certificate JSON: {"kind": "simplicial_order" | "collapse", "d": 2,
// "faces": [[1,5],[1,2]]}.
Json to_json(const FreeSequence& sequence);
FreeSequence sequence_from_json(const Json& j);

// {"field": "gf2", "entries": [{"i": 0, "j": 2, "beta": 6}, ...]}, where j
// is the internal degree.
Json to_json(const BettiTable& table);

Json face_to_json(Face f);
Face face_from_json(const Json& j, int n);

/// Ideal text: one monomial per line ("x3 x5" or "x3*x5"), '#' comments,
/// optional header "n=5" (otherwise n is the largest index used). A line
/// "1" is the unit monomial. Repeated variables and exponents are rejected.
SquarefreeIdeal parse_squarefree_ideal(std::string_view text);

/// Same format, additionally accepting exponents such as "x1^2*x3".
MonomialIdeal parse_monomial_ideal(std::string_view text);

/// Writes the ideal in the text format above (header included).
std::string format_ideal(const SquarefreeIdeal& ideal);

}  // namespace chordal

#endif  // CHORDAL_IO_HPP
