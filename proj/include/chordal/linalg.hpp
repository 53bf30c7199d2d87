#ifndef CHORDAL_LINALG_HPP
#define CHORDAL_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chordal {

/// Coefficient field: characteristic 0 (exact rationals) or GF(p).
class Field {
public:
    /// GF(2).
    constexpr Field() = default;

    static constexpr Field gf2() { return Field(2); }
    static constexpr Field char0() { return Field(0); }
    /// Throws InputError unless p is a prime below 2^31.
    static Field gfp(std::uint64_t p);

    constexpr std::uint32_t characteristic() const { return p_; }
    /// "gf2", "char0", "gf3", ...
    std::string name() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    constexpr explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 2;
};

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> a_;
};

/// Exact rank over the given field. Characteristic 0 uses fraction-free
/// (Bareiss) elimination, switching to arbitrary precision on overflow.
std::size_t rank(const IntMatrix& m, Field field);

std::size_t rank_gf2(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);
std::size_t rank_rational(const IntMatrix& m);

}  // namespace chordal

#endif  // CHORDAL_LINALG_HPP
