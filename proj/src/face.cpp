#include "chordal/face.hpp"

#include <algorithm>

namespace chordal {

Face Face::of(std::initializer_list<int> vertices) {
    return of(std::span<const int>(vertices.begin(), vertices.size()));
}

Face Face::of(std::span<const int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices)
            throw InputError("vertex label " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxVertices));
        m |= bit(v);
    }
    return Face(m);
}

Face Face::range(int n) {
    if (n < 0 || n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
    return Face(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t t = bits_; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

std::string Face::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::vector<Face> maximal_elements(std::vector<Face> faces) {
    // Larger faces first, so each face only needs checking against kept ones.
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [f](Face g) { return g.contains(f); });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Face> minimal_elements(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [f](Face g) { return f.contains(g); });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Berge's incremental algorithm.
std::vector<Face> minimal_transversals(std::span<const Face> edges) {
    std::vector<Face> current{Face{}};
    for (Face e : edges) {
        std::vector<Face> next;
        for (Face t : current) {
            if (t.intersects(e)) {
                next.push_back(t);
                continue;
            }
            for (int v : e.vertices()) next.push_back(t.with(v));
        }
        current = minimal_elements(std::move(next));
        if (current.empty()) break;
    }
    return current;
}

}  // namespace chordal
