#pragma once

// Brute-force reference implementations used only by the tests. They share
// no algorithmic path with the library: homology ranks come from naive
// Gaussian elimination over rationals on independently built boundary
// matrices, decompositions from a minimal-transversal search, witnesses from
// the raw degree-n monomial definition.

#include "gcset/complex.hpp"
#include "gcset/ideal.hpp"
#include "gcset/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using gcset::Face;
using gcset::Rational;
using gcset::SimplicialComplex;
using gcset::SquarefreeMonomialIdeal;

using FaceSet = std::set<std::vector<int>>;

inline FaceSet all_faces_naive(const SimplicialComplex& complex) {
    FaceSet out;
    for (const Face& facet : complex.facets()) {
        const std::vector<int> verts = facet.indices();
        const std::size_t n = verts.size();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if ((pick >> i) & 1) subset.push_back(verts[i]);
            }
            out.insert(subset);
        }
    }
    return out;
}

inline int gauss_rank_naive(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != Rational(0)) { pivot = i; break; }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == Rational(0)) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Rank of the reduced boundary map from (k+1)-element faces to k-element
// faces (cardinality indexing; k = 0 maps vertices onto the empty face).
inline int boundary_rank_naive(const FaceSet& faces, int upper_cardinality) {
    std::vector<std::vector<int>> lower, upper;
    for (const auto& f : faces) {
        if (static_cast<int>(f.size()) == upper_cardinality - 1) lower.push_back(f);
        if (static_cast<int>(f.size()) == upper_cardinality) upper.push_back(f);
    }
    if (upper.empty() || lower.empty()) return 0;
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    std::vector<std::vector<Rational>> m(lower.size(),
                                         std::vector<Rational>(upper.size(), Rational(0)));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        for (std::size_t t = 0; t < upper[j].size(); ++t) {
            std::vector<int> sub = upper[j];
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
            m[row_of.at(sub)][j] = Rational(t % 2 == 0 ? 1 : -1);
        }
    }
    return gauss_rank_naive(std::move(m));
}

// ranks[k] = reduced homology rank in dimension k-1.
inline std::vector<long long> reduced_homology_naive(const FaceSet& faces) {
    int top = 0;
    for (const auto& f : faces) top = std::max(top, static_cast<int>(f.size()));
    std::vector<long long> counts(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& f : faces) ++counts[f.size()];
    std::vector<long long> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int card = 0; card <= top; ++card) {
        const long long chain = counts[static_cast<std::size_t>(card)];
        const long long into = boundary_rank_naive(faces, card);
        const long long from = card < top ? boundary_rank_naive(faces, card + 1) : 0;
        ranks[static_cast<std::size_t>(card)] = chain - into - from;
    }
    return ranks;
}

inline FaceSet link_naive(const FaceSet& faces, const std::vector<int>& sigma) {
    FaceSet out;
    for (const auto& f : faces) {
        std::vector<int> meet;
        std::set_intersection(f.begin(), f.end(), sigma.begin(), sigma.end(),
                              std::back_inserter(meet));
        if (!meet.empty()) continue;
        std::vector<int> join;
        std::set_union(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(join));
        if (faces.count(join)) out.insert(f);
    }
    return out;
}

// Reisner's criterion evaluated entirely on the naive code path.
inline bool is_cohen_macaulay_naive(const SimplicialComplex& complex) {
    const FaceSet faces = all_faces_naive(complex);
    for (const auto& sigma : faces) {
        const FaceSet lk = link_naive(faces, sigma);
        int top = 0;
        for (const auto& f : lk) top = std::max(top, static_cast<int>(f.size()));
        if (top == 0) continue;  // link is {∅}
        const auto ranks = reduced_homology_naive(lk);
        for (int card = 0; card < top; ++card) {
            if (ranks[static_cast<std::size_t>(card)] != 0) return false;
        }
    }
    return true;
}

// Minimal transversals of the generator supports: the membership form of
// the primary decomposition.
inline std::vector<std::vector<int>> components_naive(const SquarefreeMonomialIdeal& ideal) {
    const int m = ideal.variable_count();
    std::vector<std::vector<int>> hitting;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        bool hits_all = true;
        for (const Face& g : ideal.generators()) {
            if ((g.mask() & mask) == 0) { hits_all = false; break; }
        }
        if (!hits_all) continue;
        bool minimal = true;
        for (int v = 0; v < m && minimal; ++v) {
            if (!((mask >> v) & 1)) continue;
            const std::uint64_t smaller = mask & ~(std::uint64_t{1} << v);
            if (smaller == 0) continue;
            bool smaller_hits = true;
            for (const Face& g : ideal.generators()) {
                if ((g.mask() & smaller) == 0) { smaller_hits = false; break; }
            }
            if (smaller_hits) minimal = false;
        }
        if (minimal) hitting.push_back(Face::from_mask(mask).indices());
    }
    std::sort(hitting.begin(), hitting.end());
    return hitting;
}

// Witness search straight from the definition: a degree-n squarefree
// monomial f, disjoint from P, with f * y_v in the ideal for every v in P.
inline std::optional<std::vector<int>> witness_naive(const SquarefreeMonomialIdeal& ideal,
                                                     const Face& component, int n) {
    std::optional<std::vector<int>> found;
    gcset::for_each_subset(ideal.variable_count(), n, [&](const Face& f) {
        if (found) return;
        if (f.intersects(component)) return;
        for (int v : component.indices()) {
            if (!gcset::contains_monomial(ideal, f.with(v))) return;
        }
        found = f.indices();
    });
    return found;
}

// Seeded nonvoid complexes on up to max_vertices vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    const int facet_count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m + 2));
    std::vector<Face> facets;
    for (int i = 0; i < facet_count; ++i) {
        const std::uint64_t mask = rng() & ((std::uint64_t{1} << m) - 1);
        facets.push_back(Face::from_mask(mask));
    }
    return SimplicialComplex::from_facets(m, std::move(facets));
}

}  // namespace oracle
