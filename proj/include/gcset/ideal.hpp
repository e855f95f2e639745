#pragma once

#include "gcset/complex.hpp"
#include "gcset/face.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gcset {

/// One component P = <y_{i_1},...,y_{i_d}> of a primary decomposition.
struct PrimeComponent {
    Face variables;

    friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// A squarefree monomial ideal, held by the supports of its minimal
/// generators (kept minimal, nonempty and lex-sorted). The zero ideal has an
/// empty generator list; the unit ideal is not representable.
class SquarefreeMonomialIdeal {
public:
    static SquarefreeMonomialIdeal from_generators(int variable_count, std::vector<Face> gens);

    static SquarefreeMonomialIdeal zero(int variable_count) {
        return from_generators(variable_count, {});
    }

    int variable_count() const { return variable_count_; }
    const std::vector<Face>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    friend bool operator==(const SquarefreeMonomialIdeal&,
                           const SquarefreeMonomialIdeal&) = default;

private:
    SquarefreeMonomialIdeal(int variable_count, std::vector<Face> gens)
        : variable_count_(variable_count), generators_(std::move(gens)) {}

    int variable_count_ = 0;
    std::vector<Face> generators_;
};

/// Stanley-Reisner ideal: generators are the minimal nonfaces of Δ.
/// The full simplex maps to the zero ideal; the void complex is rejected
/// (its Stanley-Reisner ideal would be the unit ideal).
SquarefreeMonomialIdeal sr_ideal(const SimplicialComplex& complex);

/// The unique complex with sr_ideal(Δ) = I: faces are exactly the supports
/// containing no generator. A degree-1 generator eliminates its vertex from
/// every face.
SimplicialComplex complex_of(const SquarefreeMonomialIdeal& ideal);

/// I = ∩_F <y_v : v ∉ F> over the facets F of complex_of(I); components are
/// pairwise incomparable and lex-sorted. Rejects the zero ideal.
std::vector<PrimeComponent> primary_decomposition(const SquarefreeMonomialIdeal& ideal);

/// Generators of the dual are the variable sets of the primary components;
/// equals sr_ideal(alexander_dual(complex_of(I))).
SquarefreeMonomialIdeal dual_ideal(const SquarefreeMonomialIdeal& ideal);

/// (codimension, degree) = (m - dim Δ - 1, number of facets). Defined only
/// when the complex is pure; mixed decompositions are an error.
std::pair<int, std::int64_t> codim_degree(const SquarefreeMonomialIdeal& ideal);

/// Membership oracle for squarefree monomials: true iff some generator's
/// support is contained in s.
bool contains_monomial(const SquarefreeMonomialIdeal& ideal, const Face& support);

}  // namespace gcset
