#ifndef CHORDAL_FACE_HPP
#define CHORDAL_FACE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chordal/error.hpp"

namespace chordal {

/// Largest supported vertex label; faces are 64-bit vertex masks.
inline constexpr int kMaxVertices = 64;

/// A finite set of vertices drawn from 1..64, stored as a bitmask
/// (vertex v occupies bit v-1). Ordering is by raw mask value.
class Face {
public:
    constexpr Face() = default;

    static constexpr Face from_mask(std::uint64_t mask) { return Face(mask); }

    /// Throws InputError for labels outside 1..64.
    static Face of(std::initializer_list<int> vertices);
    static Face of(std::span<const int> vertices);

    /// The full vertex set [n].
    static Face range(int n);

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    constexpr bool contains(Face other) const { return (other.bits_ & ~bits_) == 0; }
    constexpr bool subset_of(Face other) const { return other.contains(*this); }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    constexpr Face with(int v) const { return Face(bits_ | bit(v)); }
    constexpr Face without(int v) const { return Face(bits_ & ~bit(v)); }

    /// Smallest / largest vertex label; 0 for the empty face.
    constexpr int min_vertex() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    constexpr int max_vertex() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

    std::vector<int> vertices() const;
    std::string to_string() const;

    friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face, Face) = default;
    friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }

    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

private:
    constexpr explicit Face(std::uint64_t mask) : bits_(mask) {}
    std::uint64_t bits_ = 0;
};

struct FaceHash {
    std::size_t operator()(Face f) const noexcept {
        std::uint64_t x = f.mask() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

/// Calls fn(Face) for every subset of `set` with exactly k elements, in
/// increasing mask order.
template <class Fn>
void for_each_k_subset(Face set, int k, Fn&& fn) {
    const std::vector<int> verts = set.vertices();
    const int m = static_cast<int>(verts.size());
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(Face{});
        return;
    }
    // Gosper's hack over the compressed index space, then expand.
    const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
    std::uint64_t c = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    while (true) {
        std::uint64_t out = 0;
        for (std::uint64_t t = c; t; t &= t - 1)
            out |= Face::bit(verts[std::countr_zero(t)]);
        fn(Face::from_mask(out));
        const std::uint64_t u = c & -c;
        const std::uint64_t v = c + u;
        if (v == 0) break;
        c = v + (((v ^ c) / u) >> 2);
        if (limit != 0 && c >= limit) break;
    }
}

/// Calls fn(Face) for every subset of `set` (including the empty set and
/// `set` itself).
template <class Fn>
void for_each_subset(Face set, Fn&& fn) {
    const std::uint64_t m = set.mask();
    std::uint64_t s = 0;
    while (true) {
        fn(Face::from_mask(s));
        if (s == m) break;
        s = (s - m) & m;
    }
}

/// Sorts and keeps only the inclusion-maximal faces.
std::vector<Face> maximal_elements(std::vector<Face> faces);

/// Sorts and keeps only the inclusion-minimal faces.
std::vector<Face> minimal_elements(std::vector<Face> faces);

/// Minimal transversals (hitting sets) of a family of edges, in ascending
/// mask order. The empty family has the single transversal {}; a family
/// containing the empty edge has none.
std::vector<Face> minimal_transversals(std::span<const Face> edges);

}  // namespace chordal

#endif  // CHORDAL_FACE_HPP
