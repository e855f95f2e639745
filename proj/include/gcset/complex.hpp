#pragma once

#include "gcset/face.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gcset {

/// Face counts (f_{-1}, f_0, ..., f_{dim}) with f_{-1} = 1 for the empty
/// face. The void complex has no f-vector.
struct FVector {
    std::vector<std::int64_t> counts;

    /// f_dim, reading absent entries as 0.
    std::int64_t at_dim(int dim) const {
        const int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(idx)];
    }
    int dimension() const { return static_cast<int>(counts.size()) - 2; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// A simplicial complex given by its vertex count and inclusion-maximal
/// facets. Membership of any face is containment in some facet; downward
/// closure is implicit. Facets are kept sorted in (size, lex) order.
///
/// The void complex (no faces at all) and the irrelevant complex {∅} are
/// distinct: the former has an empty facet list, the latter's single facet is
/// the empty face.
class SimplicialComplex {
public:
    /// Keeps the inclusion-maximal members of `faces`; duplicates and
    /// dominated faces are dropped. An empty list yields the void complex.
    static SimplicialComplex from_facets(int vertex_count, std::vector<Face> faces);

    static SimplicialComplex void_complex(int vertex_count) {
        return from_facets(vertex_count, {});
    }
    static SimplicialComplex irrelevant_complex(int vertex_count) {
        return from_facets(vertex_count, {Face()});
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// -1 for {∅}, -2 for the void complex.
    int dimension() const;

    bool contains(const Face& f) const;

    /// Every face, sorted by (size, lex).
    std::vector<Face> all_faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int vertex_count, std::vector<Face> facets)
        : vertex_count_(vertex_count), facets_(std::move(facets)) {}

    int vertex_count_ = 0;
    std::vector<Face> facets_;
};

FVector f_vector(const SimplicialComplex& complex);

/// Δ(i,j): all subsets of size <= j of i vertices; the (j-1)-skeleton of the
/// (i-1)-simplex. Requires 1 <= j <= i.
SimplicialComplex skeleton(int i, int j);

/// The inclusion-minimal non-faces, in lex order. These are exactly the
/// supports of the minimal generators of the Stanley-Reisner ideal. For the
/// void complex this is {∅}.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Facets of the Alexander dual are the complements of the minimal nonfaces.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// link(Δ, σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ} on the same index space.
/// Requires σ ∈ Δ.
SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma);

/// True iff all facets have equal cardinality.
bool is_pure(const SimplicialComplex& complex);

}  // namespace gcset
