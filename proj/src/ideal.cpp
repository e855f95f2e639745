#include "gcset/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcset {

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::from_generators(int variable_count,
                                                                 std::vector<Face> gens) {
    if (variable_count <= 0)
        throw std::invalid_argument("from_generators: variable_count must be positive");
    if (variable_count > kMaxVertices)
        throw std::invalid_argument("from_generators: variable_count exceeds " +
                                    std::to_string(kMaxVertices));
    for (const Face& g : gens) {
        if (g.empty())
            throw std::invalid_argument("from_generators: empty generator (unit ideal)");
        if (g.max_vertex() >= variable_count)
            throw std::invalid_argument("from_generators: variable index out of range");
    }
    // Keep the minimal generators only.
    std::sort(gens.begin(), gens.end(),
              [](const Face& a, const Face& b) { return a.size() < b.size(); });
    std::vector<Face> minimal;
    for (const Face& g : gens) {
        bool redundant = false;
        for (const Face& kept : minimal) {
            if (g.contains(kept)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), lex_less);
    return SquarefreeMonomialIdeal(variable_count, std::move(minimal));
}

SquarefreeMonomialIdeal sr_ideal(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("sr_ideal: the void complex has the unit ideal");
    return SquarefreeMonomialIdeal::from_generators(complex.vertex_count(),
                                                    minimal_nonfaces(complex));
}

SimplicialComplex complex_of(const SquarefreeMonomialIdeal& ideal) {
    const int m = ideal.variable_count();
    if (m > 24)
        throw std::invalid_argument("complex_of: variable count exceeds the enumeration limit");
    // Candidate facets: all supports containing no generator, maximal ones
    // kept by from_facets.
    std::vector<Face> faces;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const Face s = Face::from_mask(mask);
        if (!contains_monomial(ideal, s)) faces.push_back(s);
    }
    return SimplicialComplex::from_facets(m, std::move(faces));
}

std::vector<PrimeComponent> primary_decomposition(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("primary_decomposition: undefined for the zero ideal");
    const SimplicialComplex complex = complex_of(ideal);
    std::vector<PrimeComponent> components;
    components.reserve(complex.facets().size());
    for (const Face& facet : complex.facets())
        components.push_back({facet.complement(ideal.variable_count())});
    std::sort(components.begin(), components.end(),
              [](const PrimeComponent& a, const PrimeComponent& b) {
                  return lex_less(a.variables, b.variables);
              });
    return components;
}

SquarefreeMonomialIdeal dual_ideal(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("dual_ideal: undefined for the zero ideal");
    std::vector<Face> gens;
    for (const PrimeComponent& component : primary_decomposition(ideal))
        gens.push_back(component.variables);
    return SquarefreeMonomialIdeal::from_generators(ideal.variable_count(), std::move(gens));
}

std::pair<int, std::int64_t> codim_degree(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("codim_degree: undefined for the zero ideal");
    const SimplicialComplex complex = complex_of(ideal);
    if (!is_pure(complex))
        throw std::invalid_argument("codim_degree: mixed decomposition; degree undefined here");
    const int codim = ideal.variable_count() - (complex.dimension() + 1);
    return {codim, static_cast<std::int64_t>(complex.facets().size())};
}

bool contains_monomial(const SquarefreeMonomialIdeal& ideal, const Face& support) {
    for (const Face& g : ideal.generators()) {
        if (support.contains(g)) return true;
    }
    return false;
}

}  // namespace gcset
