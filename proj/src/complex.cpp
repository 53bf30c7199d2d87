#include "chordal/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace chordal {

namespace {

void check_inside(Face ground, std::span<const Face> faces) {
    for (Face f : faces) {
        if (!ground.contains(f)) {
            throw InputError("face " + f.to_string() + " is not contained in the vertex set " +
                             ground.to_string());
        }
    }
}

// Replaces every facet G ⊇ e by the faces G - {v}, v ∈ e.
std::vector<Face> split_facets_containing(std::span<const Face> facets, Face e) {
    std::vector<Face> out;
    out.reserve(facets.size());
    for (Face g : facets) {
        if (!g.contains(e)) {
            out.push_back(g);
            continue;
        }
        for (int v : e.vertices()) out.push_back(g.without(v));
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> faces) {
    if (n < 0 || n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
    const Face ground = Face::range(n);
    check_inside(ground, faces);
    return SimplicialComplex(n, ground, maximal_elements(std::move(faces)));
}

SimplicialComplex SimplicialComplex::on_ground(Face ground, std::vector<Face> faces) {
    return on_ground(ground.max_vertex(), ground, std::move(faces));
}

SimplicialComplex SimplicialComplex::on_ground(int n, Face ground, std::vector<Face> faces) {
    if (n < ground.max_vertex() || n > kMaxVertices)
        throw InputError("label bound " + std::to_string(n) + " does not cover the vertex set " +
                         ground.to_string());
    check_inside(ground, faces);
    return SimplicialComplex(n, ground, maximal_elements(std::move(faces)));
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets(n, {}); }

SimplicialComplex SimplicialComplex::empty_complex(int n) { return from_facets(n, {Face{}}); }

SimplicialComplex SimplicialComplex::simplex(int n) { return from_facets(n, {Face::range(n)}); }

int SimplicialComplex::dim() const {
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.dim());
    return d;
}

Face SimplicialComplex::vertex_support() const {
    Face s;
    for (Face f : facets_) s = s | f;
    return s;
}

bool SimplicialComplex::is_face(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); });
}

bool SimplicialComplex::is_facet(Face f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::size_t SimplicialComplex::facets_containing(Face f) const {
    return static_cast<std::size_t>(
        std::count_if(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); }));
}

std::vector<Face> SimplicialComplex::faces() const {
    std::unordered_set<Face, FaceHash> seen;
    for (Face g : facets_) for_each_subset(g, [&](Face s) { seen.insert(s); });
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
    std::unordered_set<Face, FaceHash> seen;
    for (Face g : facets_) for_each_k_subset(g, k + 1, [&](Face s) { seen.insert(s); });
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dim() + 2), 0);
    if (is_void()) return {0};
    for (Face s : faces()) ++f[static_cast<std::size_t>(s.size())];
    return f;
}

SimplicialComplex SimplicialComplex::with_ground(Face ground) const {
    return on_ground(std::max(n_, ground.max_vertex()), ground, facets_);
}

std::size_t hash_facets(std::span<const Face> facets) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ facets.size();
    for (Face f : facets) {
        h ^= f.mask() + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

std::size_t ComplexHash::operator()(const SimplicialComplex& c) const noexcept {
    return hash_facets(c.facets()) ^ FaceHash{}(c.ground());
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i) {
    if (complex.is_void() || i < 0 || i > complex.dim()) {
        throw PreconditionError("pure skeleton dimension " + std::to_string(i) +
                                " outside 0..dim = " + std::to_string(complex.dim()));
    }
    return SimplicialComplex::on_ground(complex.n(), complex.ground(), complex.faces_of_dim(i));
}

SimplicialComplex induced(const SimplicialComplex& complex, Face w) {
    std::vector<Face> cut;
    cut.reserve(complex.facets().size());
    for (Face g : complex.facets()) cut.push_back(g & w);
    return SimplicialComplex::on_ground(std::max(complex.n(), w.max_vertex()), w, std::move(cut));
}

SimplicialComplex link(const SimplicialComplex& complex, Face f) {
    if (!complex.is_face(f))
        throw PreconditionError("link: " + f.to_string() + " is not a face");
    std::vector<Face> parts;
    for (Face g : complex.facets())
        if (g.contains(f)) parts.push_back(g - f);
    return SimplicialComplex::on_ground(complex.n(), complex.ground() - f, std::move(parts));
}

SimplicialComplex delete_all(const SimplicialComplex& complex, Face e) {
    return SimplicialComplex::on_ground(complex.n(), complex.ground(),
                                        split_facets_containing(complex.facets(), e));
}

SimplicialComplex face_deletion(const SimplicialComplex& complex, Face e) {
    if (!complex.is_face(e)) return complex;
    std::vector<Face> parts = split_facets_containing(complex.facets(), e);
    parts.push_back(e);
    return SimplicialComplex::on_ground(complex.n(), complex.ground(), std::move(parts));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
    if (complex.is_void()) throw PreconditionError("minimal non-faces of the VOID complex");
    // N is a non-face iff it meets the complement of every facet.
    std::vector<Face> complements;
    complements.reserve(complex.facets().size());
    for (Face g : complex.facets()) complements.push_back(complex.ground() - g);
    return minimal_transversals(complements);
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    const Face v = complex.ground();
    if (complex.is_void()) return SimplicialComplex::on_ground(complex.n(), v, {v});
    std::vector<Face> facets;
    for (Face nf : minimal_nonfaces(complex)) facets.push_back(v - nf);
    return SimplicialComplex::on_ground(complex.n(), v, std::move(facets));
}

}  // namespace chordal
