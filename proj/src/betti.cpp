#include "chordal/betti.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "chordal/error.hpp"

namespace chordal {

namespace {

// Boundary map C_k -> C_{k-1} with the usual alternating signs, rows indexed
// by (k-1)-faces and columns by k-faces.
IntMatrix boundary(const std::vector<Face>& lower, const std::vector<Face>& upper) {
    std::unordered_map<std::uint64_t, std::size_t> row;
    row.reserve(lower.size());
    for (std::size_t r = 0; r < lower.size(); ++r) row.emplace(lower[r].mask(), r);
    IntMatrix m(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
        int pos = 0;
        for (int v : upper[c].vertices()) {
            m(row.at(upper[c].without(v).mask()), c) = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

void accumulate(const SimplicialComplex& nerve, std::uint64_t w_mask, Field field, BettiTable& out) {
    const Face w = Face::from_mask(w_mask);
    const SimplicialComplex sub = induced(nerve, w);
    // A cone on a nonempty facet is acyclic; VOID contributes nothing.
    if (sub.is_void() || (sub.is_simplex() && !sub.facets().front().empty())) return;
    const std::vector<std::uint64_t> h = reduced_homology_dims(sub, field);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (h[idx] == 0) continue;
        const int k = static_cast<int>(idx) - 1;
        const int i = w.size() - k - 2;
        if (i >= 0) out.add(i, w.size(), h[idx]);
    }
}

void require_nonzero(const SquarefreeIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw PreconditionError(std::string(what) + " of the zero ideal");
}

}  // namespace

std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplex& complex, Field field) {
    if (complex.is_void()) return std::vector<std::uint64_t>(1, 0);
    const int top = complex.dim();
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
    for (Face f : complex.faces()) by_dim[static_cast<std::size_t>(f.size())].push_back(f);

    // ranks[k+1] = rank of ∂_k : C_k -> C_{k-1}, for k = 0..top.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
    for (int k = 0; k <= top; ++k) {
        const auto& upper = by_dim[static_cast<std::size_t>(k + 1)];
        const auto& lower = by_dim[static_cast<std::size_t>(k)];
        ranks[static_cast<std::size_t>(k + 1)] = rank(boundary(lower, upper), field);
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(top + 2), 0);
    for (int k = -1; k <= top; ++k) {
        const std::size_t f = by_dim[static_cast<std::size_t>(k + 1)].size();
        const std::size_t in = ranks[static_cast<std::size_t>(k + 1)];   // rank ∂_k (0 for k = -1)
        const std::size_t out_rank = ranks[static_cast<std::size_t>(k + 2)];  // rank ∂_{k+1}
        out[static_cast<std::size_t>(k + 1)] = f - in - out_rank;
    }
    return out;
}

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value != 0) entries_[{i, j}] += value;
}

int BettiTable::projective_dimension() const {
    int p = -1;
    for (const auto& [key, value] : entries_) p = std::max(p, key.first);
    return p;
}

BettiTable betti_table(const SquarefreeIdeal& ideal, Field field, unsigned workers) {
    require_nonzero(ideal, "Betti table");
    const SimplicialComplex nerve = stanley_reisner_complex(ideal);
    const int n = ideal.n();
    const std::uint64_t count = n == 64 ? 0 : (std::uint64_t{1} << n);
    if (n == 64) throw PreconditionError("Betti table over 64 variables is out of reach");

    BettiTable table(field);
    if (workers <= 1 || count < 64) {
        for (std::uint64_t w = 1; w < count; ++w) accumulate(nerve, w, field, table);
        return table;
    }
    std::vector<BettiTable> partial(workers, BettiTable(field));
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (std::uint64_t w = 1 + t; w < count; w += workers) accumulate(nerve, w, field, partial[t]);
        });
    }
    for (auto& th : threads) th.join();
    for (const BettiTable& p : partial)
        for (const auto& [key, value] : p.entries()) table.add(key.first, key.second, value);
    return table;
}

int regularity(const BettiTable& table) {
    if (table.empty()) throw PreconditionError("regularity of an empty Betti table");
    int reg = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries()) {
        reg = first ? key.second - key.first : std::max(reg, key.second - key.first);
        first = false;
    }
    return reg;
}

bool has_linear_resolution(const SquarefreeIdeal& ideal, Field field, unsigned workers) {
    require_nonzero(ideal, "linear resolution test");
    if (!ideal.is_equigenerated())
        throw PreconditionError("linear resolution test needs an equigenerated ideal, got " +
                                ideal.to_string());
    const int d = ideal.min_degree();
    const BettiTable table = betti_table(ideal, field, workers);
    return std::all_of(table.entries().begin(), table.entries().end(),
                       [d](const auto& e) { return e.first.second == e.first.first + d; });
}

bool is_componentwise_linear(const SquarefreeIdeal& ideal, Field field, unsigned workers) {
    require_nonzero(ideal, "componentwise linearity test");
    for (int j = std::max(ideal.min_degree(), 1); j <= ideal.n(); ++j) {
        const SquarefreeIdeal component = degree_component(ideal, j);
        if (component.is_zero()) continue;
        if (!has_linear_resolution(component, field, workers)) return false;
    }
    return true;
}

std::string format_betti_table(const BettiTable& table) {
    std::ostringstream os;
    os << "field: " << table.field().name() << "\n";
    if (table.empty()) return os.str();
    const int pd = table.projective_dimension();
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries()) {
        const int r = key.second - key.first;
        lo = first ? r : std::min(lo, r);
        hi = first ? r : std::max(hi, r);
        first = false;
    }
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [key, value] : table.entries()) totals[static_cast<std::size_t>(key.first)] += value;

    std::size_t width = 1;
    for (std::uint64_t t : totals) width = std::max(width, std::to_string(t).size());
    width = std::max(width, std::to_string(pd).size());
    const std::string label_pad(7, ' ');
    auto cell = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };

    os << label_pad;
    for (int i = 0; i <= pd; ++i) os << cell(std::to_string(i));
    os << "\ntotal:";
    os << ' ';
    for (std::uint64_t t : totals) os << cell(std::to_string(t));
    os << "\n";
    for (int r = lo; r <= hi; ++r) {
        std::string label = std::to_string(r) + ":";
        os << std::string(label_pad.size() - label.size(), ' ') << label;
        for (int i = 0; i <= pd; ++i) {
            const std::uint64_t v = table.at(i, i + r);
            os << cell(v == 0 ? "." : std::to_string(v));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace chordal
