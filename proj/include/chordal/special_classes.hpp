#ifndef CHORDAL_SPECIAL_CLASSES_HPP
#define CHORDAL_SPECIAL_CLASSES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/ideal.hpp"

namespace chordal {

/// Exchange x_i (u / x_{m(u)}) ∈ I for i < m(u), x_i ∤ u, checked on the
/// minimal generators. PreconditionError for the zero ideal.
bool is_squarefree_stable(const SquarefreeIdeal& ideal);

/// Exchange x_i (u / x_j) ∈ I for every x_j | u and i < j with x_i ∤ u.
bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal);

/// (F - {i}) ∪ {j} ∈ Γ for every face F, i ∈ F and j > i in the ground set.
bool is_shifted(const SimplicialComplex& complex);

/// Vertices v of Γ such that no face of link(v) is a facet of Γ \ {v}.
/// PreconditionError if Γ has no vertices.
std::vector<int> shedding_vertices(const SimplicialComplex& complex);

/// Recursive definition with a memo table; simplices, {∅} and VOID are
/// vertex decomposable.
bool is_vertex_decomposable(const SimplicialComplex& complex);

/// One block m_k (z_{k,1}, ..., z_{k,r_k}) of the nested form
///   m_1 (Z_1) + m_1 m_2 (Z_2) + ... + m_1 ... m_s (Z_s).
/// An empty `z` in the final block stands for the principal generator
/// m_1 ... m_s.
struct GotzmannBlock {
    Face m;
    std::vector<int> z;

    friend bool operator==(const GotzmannBlock&, const GotzmannBlock&) = default;
};

struct GotzmannDecomposition {
    /// I = (x_v): the one case outside the nested form's side conditions.
    bool single_variable = false;
    std::vector<GotzmannBlock> blocks;

    friend bool operator==(const GotzmannDecomposition&, const GotzmannDecomposition&) = default;
};

/// Factorizes I into the nested form, taking m_k as the common support of
/// the remaining generators. Absent when the side conditions fail.
/// PreconditionError for the zero ideal.
std::optional<GotzmannDecomposition> gotzmann_decomposition(const SquarefreeIdeal& ideal);

/// Rebuilds the ideal generated by a decomposition.
SquarefreeIdeal ideal_from_gotzmann(int n, const GotzmannDecomposition& decomposition);

/// x_i (u / x_j) ∈ J for every generator u, x_j | u and i < j.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// (J^σ, N(J^σ)). PreconditionError unless J is strongly stable.
std::pair<SquarefreeIdeal, SimplicialComplex> sigma_pipeline(const MonomialIdeal& ideal);

}  // namespace chordal

#endif  // CHORDAL_SPECIAL_CLASSES_HPP
