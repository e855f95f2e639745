#pragma once

#include "gcset/complex.hpp"
#include "gcset/ideal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gcset {

/// Shape parameters of a candidate ideal: codimension d and the degree n of
/// the sought monomials; generators all have degree n+1 and the ideal has
/// degree C(n+d, d).
struct GCParameters {
    int d = 0;
    int n = 0;
    std::int64_t degree = 0;            // = C(n+d, d), the component count
    bool generator_count_matches = false;  // #generators == C(n+d, n+1)?

    friend bool operator==(const GCParameters&, const GCParameters&) = default;
};

/// d = codimension, n = common generator degree - 1; verifies that the
/// degree equals C(n+d, d). Errors: mixed generator degrees, non-pure
/// complex, degree mismatch.
///
/// generator_count_matches records whether the minimal generator count is
/// C(n+d, n+1); it is a warning flag, not a gate.
GCParameters infer_parameters(const SquarefreeMonomialIdeal& ideal);

/// A combinatorial witness that one component is monomial GC: a face τ of
/// size n, disjoint from the component, whose join with each component
/// vertex is a nonface.
struct GCWitness {
    PrimeComponent component;
    Face tau;

    friend bool operator==(const GCWitness&, const GCWitness&) = default;
};

/// The lex-first witness for P, or empty when none exists. P must be a
/// component of the decomposition of I.
std::optional<GCWitness> monomial_gc_witness(const SquarefreeMonomialIdeal& ideal,
                                             const PrimeComponent& component);

struct HyperplaneCount {
    int vertex = 0;
    std::int64_t component_count = 0;

    friend bool operator==(const HyperplaneCount&, const HyperplaneCount&) = default;
};

struct MonomialGCReport {
    GCParameters params;
    std::vector<PrimeComponent> components;              // lex order
    std::vector<std::optional<GCWitness>> witnesses;     // aligned with components
    int gc_component_count = 0;
    bool is_monomial_gc = false;
    /// Vertices lying in exactly C(n+d-1, d-1) components.
    std::vector<HyperplaneCount> maximal_hyperplanes;
    /// Vertices exceeding that count, flagged separately.
    std::vector<HyperplaneCount> exceeding_hyperplanes;
};

MonomialGCReport monomial_gc_report(const SquarefreeMonomialIdeal& ideal);

}  // namespace gcset
