#ifndef CHORDAL_TESTS_FIXTURES_HPP
#define CHORDAL_TESTS_FIXTURES_HPP

#include <vector>

#include "chordal/complex.hpp"

namespace chordal::testing {

inline Face F(std::initializer_list<int> v) { return Face::of(v); }

inline SimplicialComplex C(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<Face> faces;
    for (auto f : facets) faces.push_back(Face::of(f));
    return SimplicialComplex::from_facets(n, std::move(faces));
}

/// Γ = ⟨{2,5},{1,4,5},{1,2,3,4}⟩ on [5].
inline SimplicialComplex basic_complex() { return C(5, {{2, 5}, {1, 4, 5}, {1, 2, 3, 4}}); }

/// Boundary of the tetrahedron on [4].
inline SimplicialComplex hollow_tetrahedron() {
    return C(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

/// 8-vertex, 17-triangle triangulation of the dunce hat.
inline SimplicialComplex dunce_hat() {
    return C(8, {{1, 5, 6}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}, {1, 2, 4}, {1, 3, 4},
                 {3, 4, 8}, {2, 3, 8}, {1, 2, 8}, {1, 7, 8}, {1, 2, 7}, {2, 3, 7},
                 {3, 6, 7}, {1, 3, 6}, {4, 5, 6}, {4, 6, 8}, {6, 7, 8}});
}

/// 7-vertex, 13-triangle complex whose 2-closure has {1,2} as its only
/// non-facet simplicial face.
inline SimplicialComplex thirteen_triangle_complex() {
    return C(7, {{2, 3, 4}, {2, 4, 7}, {2, 3, 7}, {1, 3, 7}, {1, 6, 7}, {1, 3, 6}, {4, 6, 7},
                 {1, 3, 4}, {1, 4, 5}, {4, 5, 6}, {1, 2, 5}, {2, 5, 6}, {2, 3, 6}});
}

/// The 4-cycle 1-2-3-4-1.
inline SimplicialComplex four_cycle() { return C(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace chordal::testing

#endif  // CHORDAL_TESTS_FIXTURES_HPP
