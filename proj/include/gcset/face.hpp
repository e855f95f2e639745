#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcset {

/// Largest supported vertex index + 1. Faces are stored as 64-bit masks so
/// subset tests are O(1); every instance of interest lives on far fewer
/// vertices.
inline constexpr int kMaxVertices = 64;

/// A face of a simplicial complex: a set of vertex indices, stored as a bit
/// mask. Doubles as the support of a squarefree monomial. The empty face is
/// legal (dimension -1).
class Face {
public:
    Face() = default;

    static Face from_mask(std::uint64_t mask) { return Face(mask); }

    /// Indices must be in [0, 64) and pairwise distinct.
    static Face from_indices(std::span<const int> indices) {
        std::uint64_t mask = 0;
        for (int v : indices) {
            if (v < 0 || v >= kMaxVertices)
                throw std::invalid_argument("Face: vertex index " + std::to_string(v) +
                                            " out of range");
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (mask & bit)
                throw std::invalid_argument("Face: repeated vertex index " + std::to_string(v));
            mask |= bit;
        }
        return Face(mask);
    }
    static Face from_indices(std::initializer_list<int> indices) {
        return from_indices(std::span<const int>(indices.begin(), indices.size()));
    }

    std::uint64_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    int dimension() const { return size() - 1; }
    bool empty() const { return mask_ == 0; }

    bool contains(int v) const { return (mask_ >> v) & 1u; }
    bool contains(const Face& other) const { return (mask_ & other.mask_) == other.mask_; }
    bool intersects(const Face& other) const { return (mask_ & other.mask_) != 0; }

    Face united(const Face& o) const { return Face(mask_ | o.mask_); }
    Face intersected(const Face& o) const { return Face(mask_ & o.mask_); }
    Face minus(const Face& o) const { return Face(mask_ & ~o.mask_); }
    Face with(int v) const { return Face(mask_ | (std::uint64_t{1} << v)); }
    Face without(int v) const { return Face(mask_ & ~(std::uint64_t{1} << v)); }

    /// Complement within the first `vertex_count` vertices.
    Face complement(int vertex_count) const {
        const std::uint64_t full = vertex_count == 64
                                       ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << vertex_count) - 1;
        return Face(full & ~mask_);
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    int min_vertex() const { return empty() ? -1 : std::countr_zero(mask_); }
    int max_vertex() const { return empty() ? -1 : 63 - std::countl_zero(mask_); }

    friend bool operator==(const Face&, const Face&) = default;

private:
    explicit Face(std::uint64_t mask) : mask_(mask) {}
    std::uint64_t mask_ = 0;
};

/// Lexicographic order on the increasing index sequences: {0,3} < {1,2},
/// {0,1} < {0,1,2}. This is the canonical order for generators, components
/// and witnesses.
inline bool lex_less(const Face& a, const Face& b) {
    const std::uint64_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    // Elements below the lowest differing index v are shared. If v is in a,
    // a wins unless b has nothing at or beyond v (then b is a proper prefix);
    // symmetrically when v is in b.
    const std::uint64_t low = diff & -diff;
    const std::uint64_t at_or_beyond = ~(low - 1);
    if (a.mask() & low) return (b.mask() & at_or_beyond) != 0;
    return (a.mask() & at_or_beyond) == 0;
}

/// (size, lex) order; the ambient enumeration order for faces of a complex.
inline bool size_lex_less(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        return std::hash<std::uint64_t>{}(f.mask());
    }
};

inline std::ostream& operator<<(std::ostream& os, const Face& f) {
    os << '{';
    bool first = true;
    for (int v : f.indices()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

/// C(n, k) as a 64-bit integer; exact for n <= 64.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::int64_t>(acc);
}

/// Calls fn(face) for every k-subset of {0,...,ground-1} in lex order.
template <typename Fn>
void for_each_subset(int ground, int k, Fn&& fn) {
    if (k < 0 || k > ground) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(Face::from_indices(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == ground - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All k-subsets of {0,...,ground-1} in lex order.
inline std::vector<Face> subsets_of_size(int ground, int k) {
    std::vector<Face> out;
    if (k >= 0 && k <= ground) out.reserve(static_cast<std::size_t>(binomial(ground, k)));
    for_each_subset(ground, k, [&](const Face& f) { out.push_back(f); });
    return out;
}

}  // namespace gcset
