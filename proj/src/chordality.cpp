#include "chordal/chordality.hpp"

#include <algorithm>
#include <future>
#include <unordered_set>

namespace chordal {

namespace {

struct FacetListHash {
    std::size_t operator()(const std::vector<Face>& v) const noexcept { return hash_facets(v); }
};

using StateSet = std::unordered_set<std::vector<Face>, FacetListHash>;

// (k-1)-faces lying in exactly one facet, taken from facets with more than
// k vertices (so none of them is itself a facet).
std::vector<Face> free_non_facet_faces_of_size(const SimplicialComplex& c, int k) {
    std::vector<Face> out;
    for (Face g : c.facets()) {
        if (g.size() <= k) continue;
        for_each_k_subset(g, k, [&](Face s) {
            if (c.facets_containing(s) == 1) out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class SimplicialOrderSearch {
public:
    SimplicialOrderSearch(int d, const SearchOptions& options) : d_(d), options_(options) {}

    bool run(const SimplicialComplex& state, std::vector<Face>& path) {
        if (is_full_skeleton(state, d_)) return true;
        if (failed_.contains(state.facets())) return false;
        if (++nodes_ > options_.node_budget)
            throw BudgetExhausted("simplicial order search (d=" + std::to_string(d_) + ")",
                                  options_.node_budget);
        for (Face e : free_non_facet_faces_of_size(state, d_)) {
            path.push_back(e);
            if (run(face_deletion(state, e), path)) return true;
            path.pop_back();
        }
        failed_.insert(state.facets());
        return false;
    }

private:
    int d_;
    const SearchOptions& options_;
    long long nodes_ = 0;
    StateSet failed_;
};

class CollapseSearch {
public:
    CollapseSearch(int d, const SearchOptions& options) : d_(d), options_(options) {}

    bool run(const SimplicialComplex& state, std::vector<Face>& path) {
        if (state.is_void()) return true;
        if (failed_.contains(state.facets())) return false;
        if (++nodes_ > options_.node_budget)
            throw BudgetExhausted("d-collapse search (d=" + std::to_string(d_) + ")",
                                  options_.node_budget);
        for (Face e : candidates(state)) {
            path.push_back(e);
            if (run(delete_all(state, e), path)) return true;
            path.pop_back();
        }
        failed_.insert(state.facets());
        return false;
    }

private:
    std::vector<Face> candidates(const SimplicialComplex& state) const {
        if (options_.prune_maximal_free_faces) {
            for (Face g : state.facets())
                if (g.size() <= d_) return {g};
            return free_non_facet_faces_of_size(state, d_);
        }
        return free_faces(state, d_ - 1);
    }

    int d_;
    const SearchOptions& options_;
    long long nodes_ = 0;
    StateSet failed_;
};

void require_d(int d) {
    if (d < 1) throw PreconditionError("d must be a positive integer, got " + std::to_string(d));
}

}  // namespace

SimplicialComplex d_closure(const SimplicialComplex& complex, int d) {
    require_d(d);
    if (complex.is_void()) throw PreconditionError("d-closure of the VOID complex");
    const Face ground = complex.ground();
    if (ground.size() <= d) return SimplicialComplex::on_ground(complex.n(), ground, {ground});

    // Level k holds the faces of size k above the d-skeleton. A set of size
    // k+1 > d+1 qualifies iff all its k-subsets do.
    std::vector<Face> facets;
    std::unordered_set<Face, FaceHash> level;
    for (Face f : complex.faces_of_dim(d)) level.insert(f);

    // d-subsets of the ground set in no d-face are facets.
    for_each_k_subset(ground, d, [&](Face s) {
        for (int v : (ground - s).vertices())
            if (level.contains(s.with(v))) return;
        facets.push_back(s);
    });

    while (!level.empty()) {
        std::unordered_set<Face, FaceHash> next;
        for (Face s : level) {
            const int top = s.max_vertex();
            for (int v : (ground - s).vertices()) {
                if (v < top) continue;
                const Face t = s.with(v);
                bool all = true;
                for (int u : s.vertices()) {
                    if (!level.contains(t.without(u))) {
                        all = false;
                        break;
                    }
                }
                if (all) next.insert(t);
            }
        }
        for (Face s : level) {
            bool maximal = true;
            for (int v : (ground - s).vertices()) {
                if (next.contains(s.with(v))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) facets.push_back(s);
        }
        level = std::move(next);
    }
    return SimplicialComplex::on_ground(complex.n(), ground, std::move(facets));
}

bool is_d_closure(const SimplicialComplex& complex, int d) {
    if (d < 1 || complex.is_void()) return false;
    return d_closure(complex, d) == complex;
}

std::vector<Face> free_faces(const SimplicialComplex& complex, int max_dim) {
    std::vector<Face> out;
    for (Face g : complex.facets()) {
        for (int k = 0; k <= std::min(max_dim + 1, g.size()); ++k) {
            for_each_k_subset(g, k, [&](Face s) {
                if (complex.facets_containing(s) == 1) out.push_back(s);
            });
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Face> simplicial_faces(const SimplicialComplex& closure, int d) {
    if (!is_d_closure(closure, d))
        throw PreconditionError("simplicial faces requested for a complex that is not a " +
                                std::to_string(d) + "-closure");
    std::vector<Face> out;
    for (Face f : free_faces(closure, d - 1))
        if (f.size() == d) out.push_back(f);
    return out;
}

bool is_full_skeleton(const SimplicialComplex& closure, int d) {
    return closure.dim() <= d - 1;
}

std::optional<FreeSequence> find_simplicial_order(const SimplicialComplex& closure, int d,
                                                  const SearchOptions& options) {
    if (!is_d_closure(closure, d))
        throw PreconditionError("simplicial order search needs a " + std::to_string(d) +
                                "-closure");
    std::vector<Face> path;
    SimplicialOrderSearch search(d, options);
    if (!search.run(closure, path)) return std::nullopt;
    return FreeSequence{FreeSequence::Kind::SimplicialOrder, d, std::move(path)};
}

std::optional<FreeSequence> d_chordal_certificate(const SimplicialComplex& complex, int d,
                                                  const SearchOptions& options) {
    return find_simplicial_order(d_closure(complex, d), d, options);
}

bool is_d_chordal(const SimplicialComplex& complex, int d, const SearchOptions& options) {
    return d_chordal_certificate(complex, d, options).has_value();
}

ChordalityRange chordality_range(const SimplicialComplex& complex) {
    const std::vector<Face> nonfaces = minimal_nonfaces(complex);
    if (nonfaces.empty()) return {1, 0};
    int t = nonfaces.front().dim();
    int s = t;
    for (Face f : nonfaces) {
        t = std::min(t, f.dim());
        s = std::max(s, f.dim());
    }
    return {std::max(1, t), std::min(complex.dim(), s)};
}

ChordalityReport chordality(const SimplicialComplex& complex, const SearchOptions& options) {
    if (complex.is_void()) throw PreconditionError("chordality of the VOID complex");
    const ChordalityRange range = chordality_range(complex);
    ChordalityReport report;
    if (range.hi < range.lo) return report;

    std::vector<std::optional<FreeSequence>> results;
    const int count = range.hi - range.lo + 1;
    if (options.workers > 1 && count > 1) {
        std::vector<std::future<std::optional<FreeSequence>>> jobs;
        for (int d = range.lo; d <= range.hi; ++d) {
            jobs.push_back(std::async(std::launch::async, [&complex, &options, d] {
                return d_chordal_certificate(complex, d, options);
            }));
        }
        for (auto& j : jobs) results.push_back(j.get());
    } else {
        for (int d = range.lo; d <= range.hi; ++d) {
            results.push_back(d_chordal_certificate(complex, d, options));
            if (!results.back()) break;
        }
    }

    for (std::size_t k = 0; k < results.size(); ++k) {
        const int d = range.lo + static_cast<int>(k);
        report.checked_d.push_back(d);
        if (!results[k]) {
            report.chordal = false;
            report.failed_d = d;
            break;
        }
        report.certificates.push_back(*results[k]);
    }
    return report;
}

bool is_chordal(const SimplicialComplex& complex, const SearchOptions& options) {
    return chordality(complex, options).chordal;
}

std::optional<FreeSequence> find_d_collapse(const SimplicialComplex& complex, int d,
                                            const SearchOptions& options) {
    require_d(d);
    std::vector<Face> path;
    CollapseSearch search(d, options);
    if (!search.run(complex, path)) return std::nullopt;
    return FreeSequence{FreeSequence::Kind::Collapse, d, std::move(path)};
}

bool is_d_collapsible(const SimplicialComplex& complex, int d, const SearchOptions& options) {
    return find_d_collapse(complex, d, options).has_value();
}

bool verify_sequence(const SimplicialComplex& complex, const FreeSequence& sequence) {
    const int d = sequence.d;
    if (d < 1) return false;
    SimplicialComplex current = complex;
    if (sequence.kind == FreeSequence::Kind::SimplicialOrder) {
        if (!is_d_closure(current, d)) return false;
        for (Face e : sequence.faces) {
            if (e.size() != d || !current.is_face(e) || current.is_facet(e) ||
                current.facets_containing(e) != 1)
                return false;
            current = face_deletion(current, e);
        }
        return is_full_skeleton(current, d);
    }
    for (Face e : sequence.faces) {
        if (e.size() > d || !current.is_face(e) || current.facets_containing(e) != 1) return false;
        current = delete_all(current, e);
    }
    return current.is_void();
}

}  // namespace chordal
