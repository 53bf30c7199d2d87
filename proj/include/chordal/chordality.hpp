#ifndef CHORDAL_CHORDALITY_HPP
#define CHORDAL_CHORDALITY_HPP

#include <optional>
#include <vector>

#include "chordal/complex.hpp"

namespace chordal {

/// A replayable certificate: a sequence of faces together with the kind of
/// elementary move each one stands for.
struct FreeSequence {
    enum class Kind {
        /// Each step deletes every face containing a free face of dim < d.
        Collapse,
        /// Each step is a face deletion of a non-facet simplicial
        /// (d-1)-face of a d-closure.
        SimplicialOrder,
    };

    Kind kind = Kind::SimplicialOrder;
    int d = 1;
    std::vector<Face> faces;

    friend bool operator==(const FreeSequence&, const FreeSequence&) = default;
};

/// Limits and switches for the exhaustive searches.
struct SearchOptions {
    /// Maximum number of search states expanded before giving up with
    /// BudgetExhausted.
    long long node_budget = 10'000'000;
    /// Collapse search: remove a facet of dimension < d as a forced move,
    /// otherwise branch only on maximal free faces of dimension < d.
    /// Turning this off explores every free face (for differential tests).
    bool prune_maximal_free_faces = true;
    /// Worker threads for is_chordal's loop over d (1 = sequential).
    unsigned workers = 1;
};

/// Δ_d(Γ): same d-faces as Γ, every subset of size <= d, and a larger set
/// exactly when all of its (d+1)-subsets are faces of Γ.
/// Throws PreconditionError for d < 1 or a VOID complex.
SimplicialComplex d_closure(const SimplicialComplex& complex, int d);

bool is_d_closure(const SimplicialComplex& complex, int d);

/// Faces lying in exactly one facet, with dim <= max_dim, ascending by
/// mask. Facets themselves are free.
std::vector<Face> free_faces(const SimplicialComplex& complex, int max_dim);

/// Simp(Δ): free faces of dimension d-1. Requires Δ to be a d-closure.
std::vector<Face> simplicial_faces(const SimplicialComplex& closure, int d);

/// True iff Δ equals ⟨V⟩^{[d-1]}, i.e. it has no face of dimension >= d.
bool is_full_skeleton(const SimplicialComplex& closure, int d);

/// Exhaustive backtracking for a simplicial order of a d-closure, trying
/// candidates in ascending mask order. Returns an empty sequence when Δ is
/// already ⟨V⟩^{[d-1]}.
std::optional<FreeSequence> find_simplicial_order(const SimplicialComplex& closure, int d,
                                                  const SearchOptions& options = {});

/// d-chordal: Δ_d(Γ) admits a simplicial order. The certificate refers to
/// Δ_d(Γ).
std::optional<FreeSequence> d_chordal_certificate(const SimplicialComplex& complex, int d,
                                                  const SearchOptions& options = {});
bool is_d_chordal(const SimplicialComplex& complex, int d, const SearchOptions& options = {});

/// Range of d that decides chordality, from the minimal non-faces.
struct ChordalityRange {
    int lo = 1;
    int hi = 0;  ///< empty range when hi < lo
};
ChordalityRange chordality_range(const SimplicialComplex& complex);

struct ChordalityReport {
    bool chordal = true;
    /// d values decided, ascending; stops at the first failing d.
    std::vector<int> checked_d;
    std::optional<int> failed_d;
    /// One simplicial order of Δ_d(Γ) per passing d in checked_d.
    std::vector<FreeSequence> certificates;
};

/// Chordality decided over t <= d <= min(r, s) (t, s the smallest and
/// largest dimension of a minimal non-face, r = dim Γ). ⟨V⟩ is chordal.
ChordalityReport chordality(const SimplicialComplex& complex, const SearchOptions& options = {});
bool is_chordal(const SimplicialComplex& complex, const SearchOptions& options = {});

/// A free sequence of faces of dim < d collapsing Γ to VOID, if one exists.
std::optional<FreeSequence> find_d_collapse(const SimplicialComplex& complex, int d,
                                            const SearchOptions& options = {});
bool is_d_collapsible(const SimplicialComplex& complex, int d, const SearchOptions& options = {});

/// Replays a certificate against Γ; true iff every step is legal and the
/// final complex is the required terminal one.
bool verify_sequence(const SimplicialComplex& complex, const FreeSequence& sequence);

}  // namespace chordal

#endif  // CHORDAL_CHORDALITY_HPP
