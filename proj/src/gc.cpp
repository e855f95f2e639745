#include "gcset/gc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcset {

GCParameters infer_parameters(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("infer_parameters: zero ideal");
    const int degree_gen = ideal.generators().front().size();
    for (const Face& g : ideal.generators()) {
        if (g.size() != degree_gen)
            throw std::invalid_argument("infer_parameters: mixed generator degrees");
    }
    const int n = degree_gen - 1;
    if (n < 1)
        throw std::invalid_argument("infer_parameters: generators must have degree >= 2");
    const auto [d, degree] = codim_degree(ideal);  // rejects non-pure complexes
    if (d < 1)
        throw std::invalid_argument("infer_parameters: codimension must be >= 1");
    if (degree != binomial(n + d, d)) {
        throw std::invalid_argument(
            "infer_parameters: degree " + std::to_string(degree) + " != C(" +
            std::to_string(n + d) + "," + std::to_string(d) + ") = " +
            std::to_string(binomial(n + d, d)) + " for the inferred (d,n)");
    }
    GCParameters params;
    params.d = d;
    params.n = n;
    params.degree = degree;
    params.generator_count_matches =
        static_cast<std::int64_t>(ideal.generators().size()) == binomial(n + d, n + 1);
    return params;
}

std::optional<GCWitness> monomial_gc_witness(const SquarefreeMonomialIdeal& ideal,
                                             const PrimeComponent& component) {
    const GCParameters params = infer_parameters(ideal);
    const auto decomposition = primary_decomposition(ideal);
    if (std::find(decomposition.begin(), decomposition.end(), component) ==
        decomposition.end()) {
        throw std::invalid_argument("monomial_gc_witness: not a component of the ideal");
    }
    const SimplicialComplex complex = complex_of(ideal);

    std::optional<GCWitness> found;
    for_each_subset(ideal.variable_count(), params.n, [&](const Face& tau) {
        if (found) return;
        // Disjointness is asserted, not assumed: f ∉ P.
        if (tau.intersects(component.variables)) return;
        if (!complex.contains(tau)) return;
        for (int v : component.variables.indices()) {
            if (complex.contains(tau.with(v))) return;  // join is still a face
        }
        found = GCWitness{component, tau};
    });
    return found;
}

MonomialGCReport monomial_gc_report(const SquarefreeMonomialIdeal& ideal) {
    MonomialGCReport report;
    report.params = infer_parameters(ideal);
    report.components = primary_decomposition(ideal);
    report.witnesses.reserve(report.components.size());
    for (const PrimeComponent& component : report.components) {
        auto witness = monomial_gc_witness(ideal, component);
        if (witness) ++report.gc_component_count;
        report.witnesses.push_back(std::move(witness));
    }
    report.is_monomial_gc =
        report.gc_component_count == static_cast<int>(report.components.size());

    const std::int64_t threshold = binomial(report.params.n + report.params.d - 1,
                                            report.params.d - 1);
    for (int v = 0; v < ideal.variable_count(); ++v) {
        std::int64_t count = 0;
        for (const PrimeComponent& component : report.components) {
            if (component.variables.contains(v)) ++count;
        }
        if (count == threshold) report.maximal_hyperplanes.push_back({v, count});
        if (count > threshold) report.exceeding_hyperplanes.push_back({v, count});
    }
    return report;
}

}  // namespace gcset
