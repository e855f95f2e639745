#include "gcset/chung_yao.hpp"

#include "gcset/linalg.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gcset {

namespace {

constexpr int kRetryBudget = 256;

// Deterministic small-integer sampler. mt19937_64 output is fully specified,
// and avoiding std::uniform_int_distribution keeps the stream identical
// across standard libraries.
class CoefficientSampler {
public:
    explicit CoefficientSampler(std::uint64_t seed) : rng_(seed) {}
    // Uniform-ish over [-9, 9].
    int next() { return static_cast<int>(rng_() % 19) - 9; }

private:
    std::mt19937_64 rng_;
};

QVector random_form(CoefficientSampler& sampler, int d) {
    while (true) {
        QVector v(d + 1);
        bool nonzero = false;
        for (int i = 0; i <= d; ++i) {
            const int c = sampler.next();
            v(i) = Rational(c);
            nonzero = nonzero || c != 0;
        }
        if (nonzero) return v;
    }
}

bool forms_are_generic(const std::vector<LinearForm>& forms, int d) {
    const int m = static_cast<int>(forms.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (forms[static_cast<std::size_t>(i)] == forms[static_cast<std::size_t>(j)])
                return false;
        }
    }
    QMatrix span(m, d + 1);
    for (int i = 0; i < m; ++i)
        span.row(i) = forms[static_cast<std::size_t>(i)].coefficients().transpose();
    if (linalg::rank(span) != d + 1) return false;

    // Every d-subset must cut a single point; candidate points must be
    // pairwise distinct and affine in the default chart x_d.
    std::vector<ProjectivePoint> points;
    bool ok = true;
    for_each_subset(m, d, [&](const Face& subset) {
        if (!ok) return;
        const auto idx = subset.indices();
        QMatrix system(d, d + 1);
        for (int r = 0; r < d; ++r)
            system.row(r) =
                forms[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])].coefficients().transpose();
        const QMatrix kernel = linalg::kernel_basis(system);
        if (kernel.cols() != 1) { ok = false; return; }
        ProjectivePoint point{kernel.col(0)};
        if (point.coordinates()(d).is_zero()) { ok = false; return; }
        for (const ProjectivePoint& other : points) {
            if (other == point) { ok = false; return; }
        }
        points.push_back(std::move(point));
    });
    return ok;
}

}  // namespace

SquarefreeMonomialIdeal chung_yao_ideal(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("chung_yao_ideal: need d, n >= 1");
    if (d + n > kMaxVertices)
        throw std::invalid_argument("chung_yao_ideal: d + n exceeds " +
                                    std::to_string(kMaxVertices));
    if (binomial(d + n, n + 1) > 2'000'000)
        throw std::invalid_argument("chung_yao_ideal: generator count too large to materialize");
    return SquarefreeMonomialIdeal::from_generators(d + n, subsets_of_size(d + n, n + 1));
}

std::vector<LinearForm> generic_forms(int d, int m, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("generic_forms: need d >= 1");
    if (m < d + 1)
        throw std::invalid_argument("generic_forms: m = " + std::to_string(m) +
                                    " forms cannot span with d = " + std::to_string(d));
    CoefficientSampler sampler(seed);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<LinearForm> forms;
        forms.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) forms.emplace_back(random_form(sampler, d));
        if (forms_are_generic(forms, d)) return forms;
    }
    throw std::runtime_error("generic_forms: retry budget exhausted");
}

QMatrix generic_constant_matrix(int d, int n, std::uint64_t seed) {
    if (d < 1 || n < 1) throw std::invalid_argument("generic_constant_matrix: need d, n >= 1");
    CoefficientSampler sampler(seed);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        QMatrix m(n + d, n + 1);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Rational(sampler.next());
        bool ok = true;
        for_each_subset(n + d, n + 1, [&](const Face& rows) {
            if (!ok) return;
            QMatrix minor(n + 1, n + 1);
            const auto idx = rows.indices();
            for (int r = 0; r <= n; ++r)
                minor.row(r) = m.row(idx[static_cast<std::size_t>(r)]);
            if (linalg::determinant(std::move(minor)).is_zero()) ok = false;
        });
        if (ok) return m;
    }
    throw std::runtime_error("generic_constant_matrix: retry budget exhausted");
}

bool determinantal_check(int d, int n, const QMatrix& m) {
    if (d < 1 || n < 1) throw std::invalid_argument("determinantal_check: need d, n >= 1");
    if (m.rows() != n + d || m.cols() != n + 1)
        throw std::invalid_argument("determinantal_check: matrix must be (n+d) x (n+1)");
    // Row set S contributes the maximal minor det(M_S) · Π_{i∈S} y_i; the
    // supports of the nonzero minors must reproduce the skeleton ideal.
    std::vector<Face> supports;
    for_each_subset(n + d, n + 1, [&](const Face& rows) {
        QMatrix minor(n + 1, n + 1);
        const auto idx = rows.indices();
        for (int r = 0; r <= n; ++r)
            minor.row(r) = m.row(idx[static_cast<std::size_t>(r)]);
        if (linalg::determinant(std::move(minor)).is_zero()) {
            std::string rows_text;
            for (int v : idx) rows_text += (rows_text.empty() ? "" : ",") + std::to_string(v);
            throw std::invalid_argument("determinantal_check: vanishing minor at rows {" +
                                        rows_text + "}");
        }
        supports.push_back(rows);
    });
    return SquarefreeMonomialIdeal::from_generators(n + d, std::move(supports)) ==
           chung_yao_ideal(d, n);
}

}  // namespace gcset
