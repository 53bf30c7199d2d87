#ifndef CHORDAL_COMPLEX_HPP
#define CHORDAL_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chordal/face.hpp"

namespace chordal {

/// An immutable simplicial complex stored as its facet antichain.
///
/// Every complex lives on a ground set of vertices (usually [n]). Induced
/// subcomplexes and links keep their original labels and shrink the ground
/// set instead of relabelling. Two degenerate values are distinct:
///
///  - the VOID complex has no faces at all (empty facet list);
///  - the empty complex {∅} has the single facet ∅.
class SimplicialComplex {
public:
    /// VOID complex on [0].
    SimplicialComplex() = default;

    /// Complex on [n] generated by `faces`; dominated and duplicate faces are
    /// dropped. Throws InputError if n > 64 or a label lies outside 1..n.
    static SimplicialComplex from_facets(int n, std::vector<Face> faces);

    /// Same, with an explicit ground set (faces must lie inside it). The
    /// label bound n defaults to the largest ground vertex.
    static SimplicialComplex on_ground(Face ground, std::vector<Face> faces);
    static SimplicialComplex on_ground(int n, Face ground, std::vector<Face> faces);

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);
    /// The full simplex ⟨[n]⟩.
    static SimplicialComplex simplex(int n);

    Face ground() const { return ground_; }
    /// Largest label the ground set may use; the "n" of serialization.
    int n() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
    bool is_simplex() const { return facets_.size() == 1; }

    /// -1 for {∅} and for VOID.
    int dim() const;
    /// Vertices appearing in some face.
    Face vertex_support() const;

    bool is_face(Face f) const;
    bool is_facet(Face f) const;
    /// Number of facets containing f.
    std::size_t facets_containing(Face f) const;

    /// All faces, ascending by mask. Exponential in facet size.
    std::vector<Face> faces() const;
    /// All faces of the given dimension, ascending by mask.
    std::vector<Face> faces_of_dim(int k) const;
    /// f-vector indexed by dimension + 1 (entry 0 counts the empty face).
    std::vector<std::uint64_t> f_vector() const;

    /// Same faces on a different ground set.
    SimplicialComplex with_ground(Face ground) const;

    /// Same ground set and same faces; the label bound is not compared.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(int n, Face ground, std::vector<Face> facets)
        : n_(n), ground_(ground), facets_(std::move(facets)) {}

    int n_ = 0;
    Face ground_{};
    std::vector<Face> facets_;
};

struct ComplexHash {
    std::size_t operator()(const SimplicialComplex& c) const noexcept;
};

/// Hash of a sorted facet list; used for memo tables.
std::size_t hash_facets(std::span<const Face> facets) noexcept;

/// Γ^{[i]}: the complex generated by all i-faces. Throws PreconditionError
/// unless 0 <= i <= dim Γ.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i);

/// Γ_W, re-grounded on W.
SimplicialComplex induced(const SimplicialComplex& complex, Face w);

/// link_Γ(F) on the ground set minus F. Throws PreconditionError if F ∉ Γ.
SimplicialComplex link(const SimplicialComplex& complex, Face f);

/// Γ \ E: removes every face containing E (E included).
SimplicialComplex delete_all(const SimplicialComplex& complex, Face e);

/// Removes every face strictly containing E but keeps E. Returns Γ
/// unchanged when E ∉ Γ.
SimplicialComplex face_deletion(const SimplicialComplex& complex, Face e);

/// Γ^∨ = {F ⊆ V : V - F ∉ Γ} over the ground set V.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Inclusion-minimal non-faces inside the ground set, ascending by mask.
/// Throws PreconditionError for the VOID complex.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

}  // namespace chordal

#endif  // CHORDAL_COMPLEX_HPP
