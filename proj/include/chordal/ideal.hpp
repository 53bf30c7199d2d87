#ifndef CHORDAL_IDEAL_HPP
#define CHORDAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/complex.hpp"
#include "chordal/face.hpp"

namespace chordal {

/// A square-free monomial ideal in K[x_1..x_n], stored as the supports of
/// its minimal generators (an antichain, ascending by mask). The empty
/// support stands for the unit monomial 1.
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;

    /// Ideal generated by x_F for F in `supports`; non-minimal generators are
    /// dropped. Throws InputError if a support leaves [n] or n > 64.
    SquarefreeIdeal(int n, std::vector<Face> supports);

    static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }

    int n() const { return n_; }
    const std::vector<Face>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// x_F ∈ I.
    bool contains(Face f) const;
    int min_degree() const;
    int max_degree() const;
    /// All minimal generators share one degree (the zero ideal does not).
    bool is_equigenerated() const;

    std::string to_string() const;

    friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Face> gens_;
};

/// Exponent vector of a monomial in n variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    int n() const { return static_cast<int>(exps_.size()); }
    std::uint32_t degree() const;
    /// Largest variable index dividing the monomial (1-based), 0 for 1.
    int max_index() const;
    bool divides(const Monomial& other) const;
    bool is_squarefree() const;
    Face support() const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// General monomial ideal given by a divisibility antichain of generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Drops non-minimal generators; all must have exactly n exponents.
    MonomialIdeal(int n, std::vector<Monomial> gens);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool contains(const Monomial& m) const;
    std::uint32_t max_degree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// N(Γ): generated by the minimal non-faces. PreconditionError for VOID.
SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// N(I) = {F ⊆ [n] : x_F ∉ I} on the ground set [n].
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal);

/// I_[j]: all square-free degree-j monomials of I. Requires j >= 1.
SquarefreeIdeal degree_component(const SquarefreeIdeal& ideal, int j);

/// I_{<=k}: the minimal generators of degree at most k.
SquarefreeIdeal truncation_leq(const SquarefreeIdeal& ideal, int k);

/// I + (x_E).
SquarefreeIdeal add_generator(const SquarefreeIdeal& ideal, Face e);
SquarefreeIdeal add_generators(const SquarefreeIdeal& ideal, const std::vector<Face>& extra);

/// u^σ = x_{i_1} x_{i_2+1} ... x_{i_t+t-1} for i_1 <= ... <= i_t.
Monomial squarefree_shift(const Monomial& u);

/// J^σ on n + (max generator degree) - 1 variables.
SquarefreeIdeal squarefree_operator(const MonomialIdeal& ideal);

/// Embeds a square-free ideal as a general monomial ideal.
MonomialIdeal as_monomial_ideal(const SquarefreeIdeal& ideal);

}  // namespace chordal

#endif  // CHORDAL_IDEAL_HPP
