#pragma once

#include "gcset/geometry.hpp"
#include "gcset/ideal.hpp"
#include "gcset/rational.hpp"

#include <cstdint>
#include <vector>

namespace gcset {

/// I_{Δ(d+n,n)}: all C(n+d, n+1) squarefree degree-(n+1) supports on d+n
/// vertices. Equals sr_ideal(skeleton(d+n, n)).
SquarefreeMonomialIdeal chung_yao_ideal(int d, int n);

/// m seeded pseudorandom small-integer forms in coordinates x_0..x_d,
/// regenerated until they are pairwise distinct, span the full space, every
/// d-subset is independent, and the C(m,d) candidate intersection points are
/// pairwise distinct and off the hyperplane x_d = 0. Genericity is verified,
/// never assumed. Requires m >= d+1.
std::vector<LinearForm> generic_forms(int d, int m, std::uint64_t seed);

/// A seeded (n+d) x (n+1) small-integer matrix with every maximal minor
/// nonzero.
QMatrix generic_constant_matrix(int d, int n, std::uint64_t seed);

/// Attaches the variable y_i to row i of M and checks that the maximal
/// minors of the result, det(M_S) · Π_{i∈S} y_i over row sets S, have
/// supports exactly the generators of chung_yao_ideal(d, n). A vanishing
/// minor of M violates the precondition and is reported as an error.
bool determinantal_check(int d, int n, const QMatrix& m);

}  // namespace gcset
