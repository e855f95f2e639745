#pragma once

#include "gcset/complex.hpp"
#include "gcset/ideal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gcset {

/// Ranks of reduced homology with rational coefficients; ranks[k] is the rank
/// in dimension k-1, so index 0 holds dimension -1.
struct HomologyProfile {
    std::vector<std::int64_t> ranks;

    std::int64_t at_dim(int dim) const {
        const int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
        return ranks[static_cast<std::size_t>(idx)];
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Reduced homology ranks in dimensions -1..dim Δ, computed from exact
/// integer boundary-matrix ranks (fraction-free elimination). Rejects the
/// void complex.
HomologyProfile reduced_homology(const SimplicialComplex& complex);

struct CmFailure {
    Face face;       // the link base point where Reisner's criterion fails
    int dimension;   // homology dimension below the link's top dimension

    friend bool operator==(const CmFailure&, const CmFailure&) = default;
};

struct CmResult {
    bool cohen_macaulay = false;
    std::optional<CmFailure> failure;
};

/// Reisner's criterion: Δ is Cohen-Macaulay iff for every face σ ∈ Δ
/// (including ∅) the reduced homology of link(Δ,σ) vanishes below its top
/// dimension. Faces are scanned in increasing mask order and the first
/// failure is reported.
CmResult is_cohen_macaulay(const SimplicialComplex& complex);

/// Both complex_of(I) and its Alexander dual are Cohen-Macaulay.
bool is_bicm(const SquarefreeMonomialIdeal& ideal);

/// f_i(Δ∨) + f_{m-i-2}(Δ) = C(m, i+1) at every index, absent entries read
/// as 0. An identity; serves as a self-test of the dual and f-vector code.
bool fv_duality_check(const SimplicialComplex& complex);

/// F(t) = (1+t)^power · (1 + m t + C(m,2)t² + ... + C(m,k)t^k).
struct FvFactorization {
    int power = 0;        // exponent of (1+t)
    int binomial_m = 0;   // the truncated binomial's parameter
    int truncation = 0;   // k

    friend bool operator==(const FvFactorization&, const FvFactorization&) = default;
};

/// Factors the ordinary generating polynomial F(t) = Σ f_{j-1} t^j by exact
/// repeated division by (1+t) followed by truncated-binomial matching.
/// Empty when no such factorization exists.
std::optional<FvFactorization> bicm_fvector_factorization(const FVector& f);

/// Aggregate report for one ideal: both Reisner checks plus the f-vector
/// factorization of the primal complex.
struct BicmReport {
    bool cm = false;
    bool dual_cm = false;
    bool bicm = false;
    std::optional<CmFailure> failing;
    std::optional<FvFactorization> fvect;
};

BicmReport bicm_report(const SquarefreeMonomialIdeal& ideal);
BicmReport bicm_report(const SimplicialComplex& complex);

}  // namespace gcset
