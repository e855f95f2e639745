#pragma once

#include "gcset/ideal.hpp"
#include "gcset/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gcset {

/// A nonzero homogeneous linear form in coordinates x_0..x_d, held in
/// canonical scaling: the first nonzero coefficient is 1. Forms equal up to
/// scalar compare equal.
class LinearForm {
public:
    explicit LinearForm(QVector coefficients);

    const QVector& coefficients() const { return coefficients_; }
    int ambient_dim() const { return static_cast<int>(coefficients_.size()) - 1; }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coefficients_ == b.coefficients_;
    }

private:
    QVector coefficients_;
};

/// A point of projective space, canonically scaled like LinearForm.
class ProjectivePoint {
public:
    explicit ProjectivePoint(QVector coordinates);

    const QVector& coordinates() const { return coordinates_; }
    int ambient_dim() const { return static_cast<int>(coordinates_.size()) - 1; }

    /// Affine image in the given chart; the chart coordinate must be nonzero.
    QVector affine(int chart) const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coordinates_ == b.coordinates_;
    }

private:
    QVector coordinates_;
};

Rational evaluate(const LinearForm& form, const ProjectivePoint& point);

/// The substitution y_i -> l_i. Forms must be pairwise distinct after
/// canonical scaling and must span the full (d+1)-dimensional space of
/// linear forms.
class SpecializationMap {
public:
    SpecializationMap(int ambient_dim, std::vector<LinearForm> forms);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<LinearForm>& forms() const { return forms_; }

private:
    int ambient_dim_ = 0;
    std::vector<LinearForm> forms_;
};

/// A finite configuration of distinct projective points, with the component
/// each point came from (when produced by specialize) and the coordinate
/// chart used for affine output.
struct PointConfiguration {
    std::vector<ProjectivePoint> points;
    std::vector<PrimeComponent> provenance;  // aligned with points; may be empty
    int chart = 0;

    int ambient_dim() const { return points.empty() ? 0 : points.front().ambient_dim(); }
};

/// Cuts one point per primary component by solving the d x (d+1) system of
/// the component's forms exactly. Errors: dependent forms in a component,
/// coincident points, a point at infinity for the chosen chart.
PointConfiguration specialize(const SquarefreeMonomialIdeal& ideal,
                              const SpecializationMap& map, int chart);

/// True iff the square matrix of all degree-n monomials evaluated at the
/// points has nonzero determinant. Requires |X| = C(d+n, d).
bool is_n_correct(const PointConfiguration& config, int n);

/// Q_p for one point: n pool-form factors and the scale making the
/// dehomogenized product 1 at p.
struct GCCertificate {
    int point = 0;
    std::vector<int> factors;  // indices into the pool, ascending
    Rational scale;

    friend bool operator==(const GCCertificate&, const GCCertificate&) = default;
};

/// Lex-first certificate search over size-n subsets of the pool (multisets
/// on retry when allow_repeats). The pool is deduplicated up to scalar
/// before searching; factor indices always refer to the original pool.
/// Empty overall when any point lacks a certificate.
std::optional<std::vector<GCCertificate>> gc_certificates(const PointConfiguration& config,
                                                          const std::vector<LinearForm>& pool,
                                                          int n, bool allow_repeats = false);

/// Exact check that a certificate separates its point: the scaled
/// dehomogenized product is 1 at p and 0 elsewhere.
bool verify_certificate(const PointConfiguration& config, const std::vector<LinearForm>& pool,
                        const GCCertificate& certificate);

struct HyperplaneIncidence {
    int form = 0;
    std::int64_t point_count = 0;
    bool maximal = false;  // point_count == C(d-1+n, n)

    friend bool operator==(const HyperplaneIncidence&, const HyperplaneIncidence&) = default;
};

/// Counts configuration points on each pool form's zero set.
std::vector<HyperplaneIncidence> maximal_hyperplanes(const PointConfiguration& config,
                                                     const std::vector<LinearForm>& pool,
                                                     int n);

/// The degree-(n+1) products Q_p · l_{p,j} as factor-index lists, plus the
/// dimension of their span in degree n+1.
struct GeneratorSpan {
    std::vector<std::vector<int>> products;
    std::int64_t span_dimension = 0;
};

/// Emits Q_p · l_{p,j} for d independent pool forms l_{p,j} vanishing at each
/// point, checks each product vanishes on all of X, and verifies the span in
/// degree n+1 is exactly C(n+d, n+1). Errors: missing certificates, fewer
/// than d independent vanishing forms at some point, span mismatch.
GeneratorSpan generators_from_certificates(const PointConfiguration& config,
                                           const std::vector<GCCertificate>& certificates,
                                           const std::vector<LinearForm>& pool);

/// Graded ranks and shifts of the resolution of a generic point configuration
/// of this shape: rank C(n+i-1, i-1) * C(n+d, n+i) at shift n+i for
/// i = 1..d, with the resulting Hilbert-series numerator and the constant
/// Hilbert polynomial C(n+d, d). Pure bookkeeping, no resolution computed.
struct ResolutionProfile {
    std::vector<std::pair<int, std::int64_t>> ranks;  // (shift, rank)
    std::vector<std::int64_t> numerator;              // low-to-high coefficients
    std::int64_t hp_constant = 0;

    friend bool operator==(const ResolutionProfile&, const ResolutionProfile&) = default;
};

ResolutionProfile resolution_profile(int d, int n);

/// Exponent vectors of the degree-n monomials in d+1 variables, in the fixed
/// enumeration order used by is_n_correct and the span checks.
std::vector<std::vector<int>> monomial_exponents(int d, int n);

/// Composite verification: n-correctness, certificate search and maximal
/// hyperplanes in one pass. Regular-sequence hypotheses are verified through
/// their checkable consequences (distinct points, independent component
/// forms, spanning pool); the report flag records that substitution.
struct VerifyReport {
    int n = 0;
    bool n_correct = false;
    bool gc_certified = false;
    std::optional<std::vector<GCCertificate>> certificates;
    /// Dimension of the span of the certificate products in degree n; equals
    /// C(n+d, d) for a genuine certificate map. Informational, not a gate.
    std::optional<std::int64_t> certificate_span;
    std::vector<HyperplaneIncidence> hyperplanes;
    std::int64_t maximal_count = 0;
    bool allow_repeats = false;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport verify_configuration(const PointConfiguration& config,
                                  const std::vector<LinearForm>& pool, int n,
                                  bool allow_repeats = false);

}  // namespace gcset
