#include "chordal/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace chordal {

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<Face> supports) : n_(n) {
    const Face ground = Face::range(n);
    for (Face f : supports) {
        if (!ground.contains(f))
            throw InputError("monomial x_" + f.to_string() + " uses a variable outside x1..x" +
                             std::to_string(n));
    }
    gens_ = minimal_elements(std::move(supports));
}

bool SquarefreeIdeal::contains(Face f) const {
    return std::any_of(gens_.begin(), gens_.end(), [f](Face g) { return f.contains(g); });
}

int SquarefreeIdeal::min_degree() const {
    int d = 0;
    bool first = true;
    for (Face g : gens_) {
        d = first ? g.size() : std::min(d, g.size());
        first = false;
    }
    return d;
}

int SquarefreeIdeal::max_degree() const {
    int d = 0;
    for (Face g : gens_) d = std::max(d, g.size());
    return d;
}

bool SquarefreeIdeal::is_equigenerated() const {
    return !gens_.empty() && min_degree() == max_degree();
}

std::string SquarefreeIdeal::to_string() const {
    std::string s = "(";
    bool first = true;
    for (Face g : gens_) {
        if (!first) s += ", ";
        first = false;
        if (g.empty()) {
            s += "1";
            continue;
        }
        bool inner = true;
        for (int v : g.vertices()) {
            if (!inner) s += "*";
            s += "x" + std::to_string(v);
            inner = false;
        }
    }
    return s + ")";
}

std::uint32_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

int Monomial::max_index() const {
    for (int i = n(); i >= 1; --i)
        if (exps_[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
}

Face Monomial::support() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) m |= std::uint64_t{1} << i;
    return Face::from_mask(m);
}

std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
    if (n < 0) throw InputError("negative variable count");
    for (const Monomial& g : gens)
        if (g.n() != n)
            throw InputError("monomial " + g.to_string() + " has " + std::to_string(g.n()) +
                             " exponents, expected " + std::to_string(n));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Monomial& g : gens) {
        bool dominated = std::any_of(gens.begin(), gens.end(), [&](const Monomial& h) {
            return h != g && h.divides(g);
        });
        if (!dominated) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::uint32_t MonomialIdeal::max_degree() const {
    std::uint32_t d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw PreconditionError("the Stanley-Reisner ideal of the VOID complex is the unit ideal");
    // Non-faces outside the ground set are not representable; callers pass
    // complexes on [n].
    return SquarefreeIdeal(complex.n(), minimal_nonfaces(complex.with_ground(Face::range(complex.n()))));
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal) {
    // F is a face iff [n] - F meets every generator; facets are the
    // complements of the minimal transversals.
    const Face ground = Face::range(ideal.n());
    std::vector<Face> facets;
    for (Face t : minimal_transversals(ideal.generators())) facets.push_back(ground - t);
    return SimplicialComplex::from_facets(ideal.n(), std::move(facets));
}

SquarefreeIdeal degree_component(const SquarefreeIdeal& ideal, int j) {
    if (j < 1) throw PreconditionError("degree component requires j >= 1");
    std::vector<Face> gens;
    for_each_k_subset(Face::range(ideal.n()), j, [&](Face f) {
        if (ideal.contains(f)) gens.push_back(f);
    });
    return SquarefreeIdeal(ideal.n(), std::move(gens));
}

SquarefreeIdeal truncation_leq(const SquarefreeIdeal& ideal, int k) {
    std::vector<Face> gens;
    for (Face g : ideal.generators())
        if (g.size() <= k) gens.push_back(g);
    return SquarefreeIdeal(ideal.n(), std::move(gens));
}

SquarefreeIdeal add_generator(const SquarefreeIdeal& ideal, Face e) {
    return add_generators(ideal, {e});
}

SquarefreeIdeal add_generators(const SquarefreeIdeal& ideal, const std::vector<Face>& extra) {
    std::vector<Face> gens = ideal.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return SquarefreeIdeal(ideal.n(), std::move(gens));
}

Monomial squarefree_shift(const Monomial& u) {
    std::vector<int> indices;
    for (int i = 1; i <= u.n(); ++i)
        for (std::uint32_t e = 0; e < u.exponents()[static_cast<std::size_t>(i - 1)]; ++e)
            indices.push_back(i);
    const int width = u.n() + std::max<int>(static_cast<int>(indices.size()) - 1, 0);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(width), 0);
    for (std::size_t t = 0; t < indices.size(); ++t)
        out[static_cast<std::size_t>(indices[t] - 1) + t] = 1;
    return Monomial(std::move(out));
}

SquarefreeIdeal squarefree_operator(const MonomialIdeal& ideal) {
    const int maxdeg = static_cast<int>(ideal.max_degree());
    const int width = ideal.n() + std::max(maxdeg - 1, 0);
    if (width > kMaxVertices)
        throw InputError("square-free operator needs " + std::to_string(width) +
                         " variables, more than " + std::to_string(kMaxVertices));
    std::vector<Face> gens;
    for (const Monomial& u : ideal.generators()) gens.push_back(squarefree_shift(u).support());
    return SquarefreeIdeal(width, std::move(gens));
}

MonomialIdeal as_monomial_ideal(const SquarefreeIdeal& ideal) {
    std::vector<Monomial> gens;
    for (Face g : ideal.generators()) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(ideal.n()), 0);
        for (int v : g.vertices()) e[static_cast<std::size_t>(v - 1)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.n(), std::move(gens));
}

}  // namespace chordal
