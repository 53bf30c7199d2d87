#include "chordal/special_classes.hpp"

#include <algorithm>
#include <unordered_map>

#include "chordal/error.hpp"

namespace chordal {

namespace {

void require_nonzero(const SquarefreeIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw PreconditionError(std::string(what) + " of the zero ideal");
}

bool exchange_holds(const SquarefreeIdeal& ideal, Face u, int j) {
    const Face rest = u.without(j);
    for (int i = 1; i < j; ++i) {
        if (u.contains(i)) continue;
        if (!ideal.contains(rest.with(i))) return false;
    }
    return true;
}

bool shedding(const SimplicialComplex& complex, int v) {
    // A face of the link that is a facet G of the deletion means G ∪ {v} ∈ Γ.
    const SimplicialComplex deletion = delete_all(complex, Face::of({v}));
    return std::none_of(deletion.facets().begin(), deletion.facets().end(),
                        [&](Face g) { return complex.is_face(g.with(v)); });
}

struct FacetListHash {
    std::size_t operator()(const std::vector<Face>& v) const noexcept { return hash_facets(v); }
};

class VertexDecomposability {
public:
    bool run(const SimplicialComplex& complex) {
        if (complex.facets().size() <= 1) return true;
        if (auto it = memo_.find(complex.facets()); it != memo_.end()) return it->second;
        bool result = false;
        for (int v : complex.vertex_support().vertices()) {
            if (!shedding(complex, v)) continue;
            const Face fv = Face::of({v});
            if (run(delete_all(complex, fv)) && run(link(complex, fv))) {
                result = true;
                break;
            }
        }
        memo_.emplace(complex.facets(), result);
        return result;
    }

private:
    std::unordered_map<std::vector<Face>, bool, FacetListHash> memo_;
};

}  // namespace

bool is_squarefree_stable(const SquarefreeIdeal& ideal) {
    require_nonzero(ideal, "stability test");
    return std::all_of(ideal.generators().begin(), ideal.generators().end(), [&](Face u) {
        return u.empty() || exchange_holds(ideal, u, u.max_vertex());
    });
}

bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal) {
    require_nonzero(ideal, "strong stability test");
    for (Face u : ideal.generators())
        for (int j : u.vertices())
            if (!exchange_holds(ideal, u, j)) return false;
    return true;
}

bool is_shifted(const SimplicialComplex& complex) {
    // The exchange on a subset of a facet G lands in a subset of G or of an
    // exchange of G, so facets suffice.
    const Face ground = complex.ground();
    for (Face g : complex.facets()) {
        for (int i : g.vertices()) {
            for (int j : (ground - g).vertices()) {
                if (j > i && !complex.is_face(g.without(i).with(j))) return false;
            }
        }
    }
    return true;
}

std::vector<int> shedding_vertices(const SimplicialComplex& complex) {
    const Face support = complex.vertex_support();
    if (support.empty()) throw PreconditionError("shedding vertices of a complex without vertices");
    std::vector<int> out;
    for (int v : support.vertices())
        if (shedding(complex, v)) out.push_back(v);
    return out;
}

bool is_vertex_decomposable(const SimplicialComplex& complex) {
    VertexDecomposability search;
    return search.run(complex);
}

std::optional<GotzmannDecomposition> gotzmann_decomposition(const SquarefreeIdeal& ideal) {
    require_nonzero(ideal, "Gotzmann decomposition");
    const auto& gens = ideal.generators();
    if (gens.size() == 1 && gens.front().size() == 1)
        return GotzmannDecomposition{true, {GotzmannBlock{Face{}, {gens.front().min_vertex()}}}};

    GotzmannDecomposition out;
    std::vector<Face> remaining = gens;
    Face prefix;
    Face used;
    for (int k = 1; !remaining.empty(); ++k) {
        Face common = remaining.front();
        for (Face g : remaining) common = common & g;
        const Face m = common - prefix;
        if (k > 1 && m.empty()) return std::nullopt;
        if (m.intersects(used)) return std::nullopt;
        const Face q = prefix | m;

        if (remaining.size() == 1 && remaining.front() == q) {
            if (m.size() < 2) return std::nullopt;
            out.blocks.push_back({m, {}});
            return out;
        }

        GotzmannBlock block{m, {}};
        std::vector<Face> rest;
        for (Face g : remaining) {
            if (g.size() == q.size() + 1)
                block.z.push_back((g - q).min_vertex());
            else
                rest.push_back(g);
        }
        for (int z : block.z)
            if (used.contains(z)) return std::nullopt;
        if (!rest.empty() && block.z.empty()) return std::nullopt;
        if (rest.empty() && block.z.size() == 1) return std::nullopt;

        used = used | m;
        for (int z : block.z) used = used.with(z);
        prefix = q;
        out.blocks.push_back(std::move(block));
        remaining = std::move(rest);
    }
    return out;
}

SquarefreeIdeal ideal_from_gotzmann(int n, const GotzmannDecomposition& decomposition) {
    std::vector<Face> gens;
    Face prefix;
    for (const GotzmannBlock& b : decomposition.blocks) {
        prefix = prefix | b.m;
        if (b.z.empty()) gens.push_back(prefix);
        for (int z : b.z) gens.push_back(prefix.with(z));
    }
    return SquarefreeIdeal(n, std::move(gens));
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const Monomial& u : ideal.generators()) {
        for (int j = 2; j <= u.n(); ++j) {
            if (u.exponents()[static_cast<std::size_t>(j - 1)] == 0) continue;
            for (int i = 1; i < j; ++i) {
                std::vector<std::uint32_t> e = u.exponents();
                --e[static_cast<std::size_t>(j - 1)];
                ++e[static_cast<std::size_t>(i - 1)];
                if (!ideal.contains(Monomial(std::move(e)))) return false;
            }
        }
    }
    return true;
}

std::pair<SquarefreeIdeal, SimplicialComplex> sigma_pipeline(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal))
        throw PreconditionError("the square-free operator pipeline needs a strongly stable ideal");
    SquarefreeIdeal image = squarefree_operator(ideal);
    SimplicialComplex nerve = stanley_reisner_complex(image);
    return {std::move(image), std::move(nerve)};
}

}  // namespace chordal
