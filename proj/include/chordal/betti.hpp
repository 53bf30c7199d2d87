#ifndef CHORDAL_BETTI_HPP
#define CHORDAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/ideal.hpp"
#include "chordal/linalg.hpp"

namespace chordal {

/// dim H̃_k(Γ; K) for k = -1..dim Γ; entry 0 is degree -1.
/// VOID gives a single zero, {∅} gives {1}.
std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex, Field field);

/// Graded Betti numbers β_{i,j}, keyed by homological index i and internal
/// degree j. Zero entries are never stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    BettiTable() = default;
    explicit BettiTable(Field field) : field_(field) {}

    Field field() const { return field_; }
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// β_{i,j}; 0 when absent.
    std::uint64_t at(int i, int j) const;
    void add(int i, int j, std::uint64_t value);

    /// Largest i with a nonzero entry (-1 if empty).
    int projective_dimension() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    Field field_{};
    std::map<Key, std::uint64_t> entries_;
};

/// Hochster's formula: β_{i,|W|}(I) = Σ_W dim H̃_{|W|-i-2}(N(I)_W).
/// The 2^n induced subcomplexes are split across `workers` threads.
/// Throws PreconditionError for the zero ideal.
BettiTable betti_table(const SquarefreeIdeal& ideal, Field field = {}, unsigned workers = 1);

/// max (j - i) over the entries. Throws PreconditionError on an empty table.
int regularity(const BettiTable& table);

/// All entries lie on j = i + d for the common generator degree d.
/// Throws PreconditionError unless I is nonzero and equigenerated.
bool has_linear_resolution(const SquarefreeIdeal& ideal, Field field = {}, unsigned workers = 1);

/// Every nonzero square-free component I_[j], min degree <= j <= n, has a
/// j-linear resolution. Throws PreconditionError for the zero ideal.
bool is_componentwise_linear(const SquarefreeIdeal& ideal, Field field = {}, unsigned workers = 1);

/// Grid with columns i and rows j - i:
///
///            0 1
///     total: 3 2
///         2: 3 2
std::string format_betti_table(const BettiTable& table);

}  // namespace chordal

#endif  // CHORDAL_BETTI_HPP
