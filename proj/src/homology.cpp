#include "gcset/homology.hpp"

#include "gcset/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gcset {

namespace {

// Faces grouped by dimension; within a dimension, increasing mask order
// fixes the boundary-matrix columns.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& complex) {
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(complex.dimension()) + 2);
    for (const Face& f : complex.all_faces())
        by_dim[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& faces : by_dim) {
        std::sort(faces.begin(), faces.end(),
                  [](const Face& a, const Face& b) { return a.mask() < b.mask(); });
    }
    return by_dim;
}

// Boundary map C_k -> C_{k-1} of the reduced chain complex (k >= 0; C_{-1}
// is spanned by the empty face).
ZMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
    std::unordered_map<Face, Eigen::Index, FaceHash> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i)
        row_of.emplace(lower[i], static_cast<Eigen::Index>(i));
    ZMatrix m = ZMatrix::Constant(static_cast<Eigen::Index>(lower.size()),
                                  static_cast<Eigen::Index>(upper.size()), BigInt(0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto verts = upper[j].indices();
        for (std::size_t t = 0; t < verts.size(); ++t) {
            const Face sub = upper[j].without(verts[t]);
            m(row_of.at(sub), static_cast<Eigen::Index>(j)) = (t % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("reduced_homology: void complex");
    const auto by_dim = faces_by_dimension(complex);
    const int dim = complex.dimension();

    // boundary_rank[k] = rank of C_k -> C_{k-1}, for k = 0..dim.
    std::vector<Eigen::Index> boundary_rank(static_cast<std::size_t>(dim) + 1, 0);
    for (int k = 0; k <= dim; ++k) {
        const auto& lower = by_dim[static_cast<std::size_t>(k)];
        const auto& upper = by_dim[static_cast<std::size_t>(k) + 1];
        if (!upper.empty())
            boundary_rank[static_cast<std::size_t>(k)] =
                linalg::fraction_free_rank(boundary_matrix(lower, upper));
    }

    HomologyProfile profile;
    profile.ranks.resize(static_cast<std::size_t>(dim) + 2, 0);
    for (int k = -1; k <= dim; ++k) {
        const std::int64_t chain =
            static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(k + 1)].size());
        const std::int64_t into =
            (k >= 0) ? boundary_rank[static_cast<std::size_t>(k)] : 0;
        const std::int64_t from =
            (k + 1 <= dim) ? boundary_rank[static_cast<std::size_t>(k + 1)] : 0;
        profile.ranks[static_cast<std::size_t>(k + 1)] = chain - into - from;
    }
    return profile;
}

CmResult is_cohen_macaulay(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("is_cohen_macaulay: void complex");
    std::vector<Face> faces = complex.all_faces();
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.mask() < b.mask(); });
    for (const Face& sigma : faces) {
        const SimplicialComplex lk = link(complex, sigma);
        const int top = lk.dimension();
        if (top <= -1) continue;  // link {∅}: nothing below top dimension
        const HomologyProfile profile = reduced_homology(lk);
        for (int d = -1; d < top; ++d) {
            if (profile.at_dim(d) != 0) return {false, CmFailure{sigma, d}};
        }
    }
    return {true, std::nullopt};
}

bool is_bicm(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("is_bicm: undefined for the zero ideal");
    const SimplicialComplex complex = complex_of(ideal);
    return is_cohen_macaulay(complex).cohen_macaulay &&
           is_cohen_macaulay(alexander_dual(complex)).cohen_macaulay;
}

bool fv_duality_check(const SimplicialComplex& complex) {
    if (complex.is_void())
        throw std::invalid_argument("fv_duality_check: void complex");
    const int m = complex.vertex_count();
    const SimplicialComplex dual = alexander_dual(complex);
    const FVector f = f_vector(complex);
    const std::optional<FVector> fd =
        dual.is_void() ? std::nullopt : std::make_optional(f_vector(dual));
    for (int i = 0; i <= m - 2; ++i) {
        const std::int64_t lhs = (fd ? fd->at_dim(i) : 0) + f.at_dim(m - i - 2);
        if (lhs != binomial(m, i + 1)) return false;
    }
    return true;
}

std::optional<FvFactorization> bicm_fvector_factorization(const FVector& f) {
    std::vector<std::int64_t> c = f.counts;
    if (c.empty() || c.back() == 0) return std::nullopt;

    // Strip (1+t) factors while the division is exact. Any factorization of
    // the target shape has its truncated binomial nonvanishing at t = -1, so
    // the multiplicity of the root -1 determines the power uniquely.
    int power = 0;
    while (c.size() > 1) {
        std::vector<std::int64_t> q(c.size() - 1);
        q[0] = c[0];
        for (std::size_t j = 1; j + 1 < c.size(); ++j) q[j] = c[j] - q[j - 1];
        if (c.back() != q.back()) break;
        c = std::move(q);
        ++power;
    }

    if (c[0] != 1) return std::nullopt;
    if (c.size() == 1) return FvFactorization{power, 0, 0};
    const std::int64_t m = c[1];
    if (m <= 0 || m > kMaxVertices) return std::nullopt;
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] != binomial(static_cast<int>(m), static_cast<int>(j))) return std::nullopt;
    }
    return FvFactorization{power, static_cast<int>(m), static_cast<int>(c.size()) - 1};
}

BicmReport bicm_report(const SimplicialComplex& complex) {
    BicmReport report;
    const CmResult primal = is_cohen_macaulay(complex);
    report.cm = primal.cohen_macaulay;
    report.failing = primal.failure;
    const SimplicialComplex dual = alexander_dual(complex);
    if (dual.is_void()) {
        report.dual_cm = true;  // dual of the full simplex; nothing to check
    } else {
        const CmResult dc = is_cohen_macaulay(dual);
        report.dual_cm = dc.cohen_macaulay;
        if (!report.failing) report.failing = dc.failure;
    }
    report.bicm = report.cm && report.dual_cm;
    report.fvect = bicm_fvector_factorization(f_vector(complex));
    return report;
}

BicmReport bicm_report(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("bicm_report: undefined for the zero ideal");
    return bicm_report(complex_of(ideal));
}

}  // namespace gcset
