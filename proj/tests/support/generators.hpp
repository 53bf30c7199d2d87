#ifndef CHORDAL_TESTS_GENERATORS_HPP
#define CHORDAL_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/ideal.hpp"
#include "chordal/special_classes.hpp"

namespace chordal::testing {

using Rng = std::mt19937_64;

/// Fixed seeds of the property suites.
inline constexpr std::uint64_t kSeedComplexes = 0x5eed0001;
inline constexpr std::uint64_t kSeedClosures = 0x5eed0002;
inline constexpr std::uint64_t kSeedIdeals = 0x5eed0003;
inline constexpr std::uint64_t kSeedFreeFaces = 0x5eed0004;
inline constexpr std::uint64_t kSeedFamilies = 0x5eed0005;
inline constexpr std::uint64_t kSeedSigma = 0x5eed0006;
inline constexpr std::uint64_t kSeedGraphs = 0x5eed0007;

int uniform(Rng& rng, int lo, int hi);

/// Each vertex of [n] independently with probability p.
Face random_subset(Rng& rng, int n, double p = 0.5);

/// 1..max_facets random subsets of [n]; never VOID.
SimplicialComplex random_complex(Rng& rng, int n, int max_facets = 0);

/// Each k-subset of [n] is a facet with probability p (at least one facet).
SimplicialComplex random_pure_complex(Rng& rng, int n, int k, double p);

/// random_complex or, two times in three, a pure complex of dimension 1 or 2.
SimplicialComplex random_mixed_complex(Rng& rng, int n);

/// Nonzero ideal with 1..max_gens random nonempty generators.
SquarefreeIdeal random_ideal(Rng& rng, int n, int max_gens = 0);

/// Random generators closed under x_i (u / x_{m(u)}) exchanges.
SquarefreeIdeal random_stable_ideal(Rng& rng, int n);

/// Random faces closed under (F - i) ∪ j for j > i.
SimplicialComplex random_shifted_complex(Rng& rng, int n);

/// A random nested-block decomposition with disjoint supports in [n].
GotzmannDecomposition random_gotzmann_form(Rng& rng, int n);

/// Random monomials of degree 1..maxdeg in n variables, closed under the
/// strongly stable exchange x_i (u / x_j), i < j.
MonomialIdeal random_strongly_stable(Rng& rng, int n, int maxdeg);

/// Graph on [n] as a complex: edges plus isolated vertices as facets.
SimplicialComplex graph_complex(int n, const std::vector<Face>& edges);

/// One representative per isomorphism class of graphs on [n], as edge lists.
std::vector<std::vector<Face>> graphs_up_to_isomorphism(int n);

}  // namespace chordal::testing

#endif  // CHORDAL_TESTS_GENERATORS_HPP
