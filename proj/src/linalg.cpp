#include "chordal/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

#include "chordal/error.hpp"

namespace chordal {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// One Bareiss step on a row-major working copy. Returns false on int64
// overflow of the exact quotient.
bool bareiss_update(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e,
                    std::int64_t prev, std::int64_t& out) {
    const __int128 num = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
    const __int128 q = num / prev;
    if (q > INT64_MAX || q < INT64_MIN) return false;
    out = static_cast<std::int64_t>(q);
    return true;
}

template <class T>
struct Dense {
    std::size_t rows, cols;
    std::vector<T> a;
    T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

// Fraction-free elimination; every intermediate entry is a minor of the
// input, and divisions by the previous pivot are exact.
std::optional<std::size_t> bareiss_rank_int64(Dense<std::int64_t> m) {
    std::size_t rank = 0;
    std::int64_t prev = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        const std::int64_t p = m.at(rank, col);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            const std::int64_t f = m.at(r, col);
            for (std::size_t c = col + 1; c < m.cols; ++c) {
                if (!bareiss_update(m.at(r, c), p, f, m.at(rank, c), prev, m.at(r, c)))
                    return std::nullopt;
            }
            m.at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank_big(Dense<boost::multiprecision::cpp_int> m) {
    using Big = boost::multiprecision::cpp_int;
    std::size_t rank = 0;
    Big prev = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        const Big p = m.at(rank, col);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            const Big f = m.at(r, col);
            for (std::size_t c = col + 1; c < m.cols; ++c)
                m.at(r, c) = (m.at(r, c) * p - f * m.at(rank, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace

Field Field::gfp(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) +
                         " is not a prime below 2^31");
    return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
    if (p_ == 0) return "char0";
    return "gf" + std::to_string(p_);
}

std::size_t rank(const IntMatrix& m, Field field) {
    if (field.characteristic() == 0) return rank_rational(m);
    if (field.characteristic() == 2) return rank_gf2(m);
    return rank_mod_p(m, field.characteristic());
}

std::size_t rank_gf2(const IntMatrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) & 1) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (!(rows[r][w] & bit)) continue;
            for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
    const std::uint64_t mod = p;
    Dense<std::uint64_t> a{m.rows(), m.cols(), std::vector<std::uint64_t>(m.rows() * m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::int64_t v = m(r, c) % static_cast<std::int64_t>(mod);
            a.at(r, c) = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(mod) : v);
        }
    }
    auto inverse = [mod](std::uint64_t x) {
        std::uint64_t result = 1, e = mod - 2;
        while (e) {
            if (e & 1) result = result * x % mod;
            x = x * x % mod;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
        std::size_t piv = rank;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(piv, c), a.at(rank, c));
        const std::uint64_t inv = inverse(a.at(rank, col));
        for (std::size_t r = rank + 1; r < a.rows; ++r) {
            if (a.at(r, col) == 0) continue;
            const std::uint64_t f = a.at(r, col) * inv % mod;
            for (std::size_t c = col; c < a.cols; ++c)
                a.at(r, c) = (a.at(r, c) + (mod - f) * a.at(rank, c)) % mod;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
    Dense<std::int64_t> small{m.rows(), m.cols(), std::vector<std::int64_t>(m.rows() * m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) small.at(r, c) = m(r, c);
    if (auto r = bareiss_rank_int64(small)) return *r;

    Dense<boost::multiprecision::cpp_int> big{m.rows(), m.cols(), {}};
    big.a.resize(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) big.at(r, c) = m(r, c);
    return bareiss_rank_big(std::move(big));
}

}  // namespace chordal
