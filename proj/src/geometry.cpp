#include "gcset/geometry.hpp"

#include "gcset/gc.hpp"
#include "gcset/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gcset {

namespace {

QVector canonicalized(QVector v, const char* what) {
    Eigen::Index lead = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!v(i).is_zero()) { lead = i; break; }
    }
    if (lead < 0) throw std::invalid_argument(std::string(what) + ": zero vector");
    const Rational inv = Rational(1) / v(lead);
    for (Eigen::Index i = lead; i < v.size(); ++i) v(i) *= inv;
    return v;
}

// Indices of the first occurrence of each distinct canonical form.
std::vector<int> dedupe_pool(const std::vector<LinearForm>& pool) {
    std::vector<int> unique;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        bool seen = false;
        for (int u : unique) {
            if (pool[static_cast<std::size_t>(u)] == pool[i]) { seen = true; break; }
        }
        if (!seen) unique.push_back(static_cast<int>(i));
    }
    return unique;
}

// evaluations[f][p], homogeneous.
std::vector<std::vector<Rational>> evaluation_table(const std::vector<LinearForm>& pool,
                                                    const PointConfiguration& config) {
    std::vector<std::vector<Rational>> table(pool.size());
    for (std::size_t f = 0; f < pool.size(); ++f) {
        table[f].reserve(config.points.size());
        for (const ProjectivePoint& p : config.points) table[f].push_back(evaluate(pool[f], p));
    }
    return table;
}

void require_affine(const PointConfiguration& config, const char* op) {
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        if (config.points[i].coordinates()(config.chart).is_zero())
            throw std::invalid_argument(std::string(op) + ": point " + std::to_string(i) +
                                        " is at infinity for chart " +
                                        std::to_string(config.chart));
    }
}

// Enumerates ascending index multisets/sets over `universe` (itself
// ascending) in lex order; fn returns true to stop.
template <typename Fn>
void for_each_selection(const std::vector<int>& universe, int k, bool repeats, Fn&& fn) {
    const int u = static_cast<int>(universe.size());
    if (k < 0 || (!repeats && k > u) || u == 0) return;
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = repeats ? 0 : i;
    while (true) {
        std::vector<int> chosen(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            chosen[static_cast<std::size_t>(i)] = universe[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
        if (fn(chosen)) return;
        int i = k - 1;
        if (repeats) {
            while (i >= 0 && pos[static_cast<std::size_t>(i)] == u - 1) --i;
            if (i < 0) break;
            const int next = pos[static_cast<std::size_t>(i)] + 1;
            for (int j = i; j < k; ++j) pos[static_cast<std::size_t>(j)] = next;
        } else {
            while (i >= 0 && pos[static_cast<std::size_t>(i)] == u - k + i) --i;
            if (i < 0) break;
            ++pos[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

// Dense coefficient vector of a product of pool forms, in the
// monomial_exponents order of its degree.
QVector expand_product(const std::vector<LinearForm>& pool, const std::vector<int>& factors,
                       int d) {
    std::map<std::vector<int>, Rational> poly;
    poly.emplace(std::vector<int>(static_cast<std::size_t>(d) + 1, 0), Rational(1));
    for (int f : factors) {
        const QVector& coeffs = pool[static_cast<std::size_t>(f)].coefficients();
        std::map<std::vector<int>, Rational> next;
        for (const auto& [expo, c] : poly) {
            for (int var = 0; var <= d; ++var) {
                if (coeffs(var).is_zero()) continue;
                std::vector<int> e2 = expo;
                ++e2[static_cast<std::size_t>(var)];
                auto [it, inserted] = next.emplace(std::move(e2), c * coeffs(var));
                if (!inserted) it->second += c * coeffs(var);
            }
        }
        poly = std::move(next);
    }
    const auto mons = monomial_exponents(d, static_cast<int>(factors.size()));
    QVector out = QVector::Constant(static_cast<Eigen::Index>(mons.size()), Rational(0));
    for (std::size_t i = 0; i < mons.size(); ++i) {
        auto it = poly.find(mons[i]);
        if (it != poly.end()) out(static_cast<Eigen::Index>(i)) = it->second;
    }
    return out;
}

}  // namespace

LinearForm::LinearForm(QVector coefficients)
    : coefficients_(canonicalized(std::move(coefficients), "LinearForm")) {
    if (coefficients_.size() < 2)
        throw std::invalid_argument("LinearForm: need at least 2 homogeneous coordinates");
}

ProjectivePoint::ProjectivePoint(QVector coordinates)
    : coordinates_(canonicalized(std::move(coordinates), "ProjectivePoint")) {
    if (coordinates_.size() < 2)
        throw std::invalid_argument("ProjectivePoint: need at least 2 homogeneous coordinates");
}

QVector ProjectivePoint::affine(int chart) const {
    if (chart < 0 || chart > ambient_dim())
        throw std::invalid_argument("affine: chart out of range");
    if (coordinates_(chart).is_zero())
        throw std::invalid_argument("affine: point at infinity for the chosen chart");
    QVector out(coordinates_.size() - 1);
    const Rational inv = Rational(1) / coordinates_(chart);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < coordinates_.size(); ++i) {
        if (i == chart) continue;
        out(k++) = coordinates_(i) * inv;
    }
    return out;
}

Rational evaluate(const LinearForm& form, const ProjectivePoint& point) {
    if (form.ambient_dim() != point.ambient_dim())
        throw std::invalid_argument("evaluate: dimension mismatch");
    Rational acc(0);
    for (Eigen::Index i = 0; i < form.coefficients().size(); ++i)
        acc += form.coefficients()(i) * point.coordinates()(i);
    return acc;
}

SpecializationMap::SpecializationMap(int ambient_dim, std::vector<LinearForm> forms)
    : ambient_dim_(ambient_dim), forms_(std::move(forms)) {
    if (ambient_dim_ < 1) throw std::invalid_argument("SpecializationMap: ambient_dim < 1");
    for (const LinearForm& f : forms_) {
        if (f.ambient_dim() != ambient_dim_)
            throw std::invalid_argument("SpecializationMap: form dimension mismatch");
    }
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        for (std::size_t j = i + 1; j < forms_.size(); ++j) {
            if (forms_[i] == forms_[j])
                throw std::invalid_argument(
                    "SpecializationMap: forms " + std::to_string(i) + " and " +
                    std::to_string(j) + " coincide after canonical scaling");
        }
    }
    QMatrix span(static_cast<Eigen::Index>(forms_.size()), ambient_dim_ + 1);
    for (std::size_t i = 0; i < forms_.size(); ++i)
        span.row(static_cast<Eigen::Index>(i)) = forms_[i].coefficients().transpose();
    if (linalg::rank(span) != ambient_dim_ + 1)
        throw std::invalid_argument(
            "SpecializationMap: forms do not span the space of linear forms");
}

PointConfiguration specialize(const SquarefreeMonomialIdeal& ideal,
                              const SpecializationMap& map, int chart) {
    const GCParameters params = infer_parameters(ideal);
    const int d = map.ambient_dim();
    if (params.d != d)
        throw std::invalid_argument("specialize: ideal codimension " + std::to_string(params.d) +
                                    " != ambient dimension " + std::to_string(d));
    if (static_cast<int>(map.forms().size()) != ideal.variable_count())
        throw std::invalid_argument("specialize: need one form per variable");
    if (chart < 0 || chart > d) throw std::invalid_argument("specialize: chart out of range");

    PointConfiguration config;
    config.chart = chart;
    for (const PrimeComponent& component : primary_decomposition(ideal)) {
        const auto vars = component.variables.indices();
        QMatrix system(static_cast<Eigen::Index>(vars.size()), d + 1);
        for (std::size_t r = 0; r < vars.size(); ++r)
            system.row(static_cast<Eigen::Index>(r)) =
                map.forms()[static_cast<std::size_t>(vars[r])].coefficients().transpose();
        const QMatrix kernel = linalg::kernel_basis(system);
        if (kernel.cols() != 1)
            throw std::invalid_argument("specialize: non-generic: component does not cut a point");
        ProjectivePoint point{kernel.col(0)};
        if (point.coordinates()(chart).is_zero())
            throw std::invalid_argument("specialize: point at infinity for chart " +
                                        std::to_string(chart));
        for (const ProjectivePoint& other : config.points) {
            if (other == point)
                throw std::invalid_argument("specialize: non-generic: points collide");
        }
        config.points.push_back(std::move(point));
        config.provenance.push_back(component);
    }
    return config;
}

std::vector<std::vector<int>> monomial_exponents(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(d) + 1, 0);
    // First coordinate's exponent descends; matches a fixed total order.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == d) {
            current[static_cast<std::size_t>(var)] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, n);
    return out;
}

bool is_n_correct(const PointConfiguration& config, int n) {
    if (config.points.empty()) throw std::invalid_argument("is_n_correct: empty configuration");
    if (n < 0) throw std::invalid_argument("is_n_correct: n must be >= 0");
    const int d = config.ambient_dim();
    const auto mons = monomial_exponents(d, n);
    if (config.points.size() != mons.size())
        throw std::invalid_argument("is_n_correct: |X| = " +
                                    std::to_string(config.points.size()) + " != C(" +
                                    std::to_string(d + n) + "," + std::to_string(d) + ") = " +
                                    std::to_string(mons.size()));
    QMatrix m(static_cast<Eigen::Index>(config.points.size()),
              static_cast<Eigen::Index>(mons.size()));
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        const QVector& coords = config.points[i].coordinates();
        for (std::size_t j = 0; j < mons.size(); ++j) {
            Rational value(1);
            for (int var = 0; var <= d; ++var)
                value *= Rational::pow(coords(var), mons[j][static_cast<std::size_t>(var)]);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
        }
    }
    return !linalg::determinant(std::move(m)).is_zero();
}

std::optional<std::vector<GCCertificate>> gc_certificates(const PointConfiguration& config,
                                                          const std::vector<LinearForm>& pool,
                                                          int n, bool allow_repeats) {
    if (pool.empty()) throw std::invalid_argument("gc_certificates: empty pool");
    if (n < 0) throw std::invalid_argument("gc_certificates: n must be >= 0");
    require_affine(config, "gc_certificates");
    const std::vector<int> unique = dedupe_pool(pool);
    const auto evals = evaluation_table(pool, config);
    const std::size_t count = config.points.size();

    std::vector<GCCertificate> result;
    result.reserve(count);
    for (std::size_t pi = 0; pi < count; ++pi) {
        std::optional<std::vector<int>> found;
        auto try_selection = [&](bool repeats) {
            for_each_selection(unique, n, repeats, [&](const std::vector<int>& factors) {
                for (int f : factors) {
                    if (evals[static_cast<std::size_t>(f)][pi].is_zero()) return false;
                }
                for (std::size_t qi = 0; qi < count; ++qi) {
                    if (qi == pi) continue;
                    bool vanishes = false;
                    for (int f : factors) {
                        if (evals[static_cast<std::size_t>(f)][qi].is_zero()) {
                            vanishes = true;
                            break;
                        }
                    }
                    if (!vanishes) return false;
                }
                found = factors;
                return true;
            });
        };
        try_selection(false);
        if (!found && allow_repeats) try_selection(true);
        if (!found) return std::nullopt;

        Rational product(1);
        for (int f : *found) product *= evals[static_cast<std::size_t>(f)][pi];
        const Rational chart_pow = Rational::pow(config.points[pi].coordinates()(config.chart), n);
        result.push_back(GCCertificate{static_cast<int>(pi), std::move(*found),
                                       chart_pow / product});
    }
    return result;
}

bool verify_certificate(const PointConfiguration& config, const std::vector<LinearForm>& pool,
                        const GCCertificate& certificate) {
    const int n = static_cast<int>(certificate.factors.size());
    for (std::size_t qi = 0; qi < config.points.size(); ++qi) {
        const ProjectivePoint& q = config.points[qi];
        Rational value(1);
        for (int f : certificate.factors)
            value *= evaluate(pool[static_cast<std::size_t>(f)], q);
        value *= certificate.scale;
        value /= Rational::pow(q.coordinates()(config.chart), n);
        const Rational expected = (static_cast<int>(qi) == certificate.point) ? 1 : 0;
        if (value != expected) return false;
    }
    return true;
}

std::vector<HyperplaneIncidence> maximal_hyperplanes(const PointConfiguration& config,
                                                     const std::vector<LinearForm>& pool,
                                                     int n) {
    const int d = config.ambient_dim();
    const std::int64_t target = binomial(d - 1 + n, n);
    std::vector<HyperplaneIncidence> out;
    out.reserve(pool.size());
    for (std::size_t f = 0; f < pool.size(); ++f) {
        std::int64_t count = 0;
        for (const ProjectivePoint& p : config.points) {
            if (evaluate(pool[f], p).is_zero()) ++count;
        }
        out.push_back({static_cast<int>(f), count, count == target});
    }
    return out;
}

GeneratorSpan generators_from_certificates(const PointConfiguration& config,
                                           const std::vector<GCCertificate>& certificates,
                                           const std::vector<LinearForm>& pool) {
    const std::size_t count = config.points.size();
    if (certificates.size() != count)
        throw std::invalid_argument("generators_from_certificates: need a full certificate map");
    for (std::size_t i = 0; i < count; ++i) {
        if (certificates[i].point != static_cast<int>(i))
            throw std::invalid_argument("generators_from_certificates: certificates out of order");
    }
    const int d = config.ambient_dim();
    const int n = static_cast<int>(certificates.front().factors.size());
    const auto evals = evaluation_table(pool, config);

    GeneratorSpan span;
    for (std::size_t pi = 0; pi < count; ++pi) {
        // d independent pool forms vanishing at the point, picked greedily
        // in pool order.
        std::vector<int> chosen;
        QMatrix sofar(0, d + 1);
        for (std::size_t f = 0; f < pool.size() && static_cast<int>(chosen.size()) < d; ++f) {
            if (!evals[f][pi].is_zero()) continue;
            QMatrix candidate(sofar.rows() + 1, d + 1);
            candidate.topRows(sofar.rows()) = sofar;
            candidate.row(sofar.rows()) = pool[f].coefficients().transpose();
            if (linalg::rank(candidate) == candidate.rows()) {
                sofar = std::move(candidate);
                chosen.push_back(static_cast<int>(f));
            }
        }
        if (static_cast<int>(chosen.size()) < d)
            throw std::invalid_argument(
                "generators_from_certificates: fewer than d independent vanishing pool forms "
                "at point " + std::to_string(pi));
        for (int f : chosen) {
            std::vector<int> product = certificates[pi].factors;
            product.push_back(f);
            std::sort(product.begin(), product.end());
            for (std::size_t qi = 0; qi < count; ++qi) {
                Rational value(1);
                for (int t : product) value *= evals[static_cast<std::size_t>(t)][qi];
                if (!value.is_zero())
                    throw std::logic_error(
                        "generators_from_certificates: product does not vanish on X");
            }
            span.products.push_back(std::move(product));
        }
    }

    const auto mons = monomial_exponents(d, n + 1);
    QMatrix coeffs(static_cast<Eigen::Index>(span.products.size()),
                   static_cast<Eigen::Index>(mons.size()));
    for (std::size_t r = 0; r < span.products.size(); ++r)
        coeffs.row(static_cast<Eigen::Index>(r)) =
            expand_product(pool, span.products[r], d).transpose();
    span.span_dimension = linalg::rank(std::move(coeffs));

    const std::int64_t expected = binomial(n + d, n + 1);
    if (span.span_dimension != expected)
        throw std::runtime_error("generators_from_certificates: span dimension " +
                                 std::to_string(span.span_dimension) + " != C(" +
                                 std::to_string(n + d) + "," + std::to_string(n + 1) + ") = " +
                                 std::to_string(expected));
    return span;
}

VerifyReport verify_configuration(const PointConfiguration& config,
                                  const std::vector<LinearForm>& pool, int n,
                                  bool allow_repeats) {
    VerifyReport report;
    report.n = n;
    report.allow_repeats = allow_repeats;
    report.n_correct = is_n_correct(config, n);
    report.certificates = gc_certificates(config, pool, n, allow_repeats);
    report.gc_certified = report.certificates.has_value();
    if (report.certificates) {
        const int d = config.ambient_dim();
        const auto mons = monomial_exponents(d, n);
        QMatrix coeffs(static_cast<Eigen::Index>(report.certificates->size()),
                       static_cast<Eigen::Index>(mons.size()));
        for (std::size_t r = 0; r < report.certificates->size(); ++r)
            coeffs.row(static_cast<Eigen::Index>(r)) =
                expand_product(pool, (*report.certificates)[r].factors, d).transpose();
        report.certificate_span = linalg::rank(std::move(coeffs));
    }
    report.hyperplanes = maximal_hyperplanes(config, pool, n);
    for (const HyperplaneIncidence& h : report.hyperplanes) {
        if (h.maximal) ++report.maximal_count;
    }
    return report;
}

ResolutionProfile resolution_profile(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("resolution_profile: need d, n >= 1");
    ResolutionProfile profile;
    profile.numerator.assign(static_cast<std::size_t>(n + d) + 1, 0);
    profile.numerator[0] = 1;
    for (int i = 1; i <= d; ++i) {
        const std::int64_t rank = binomial(n + i - 1, i - 1) * binomial(n + d, n + i);
        profile.ranks.emplace_back(n + i, rank);
        profile.numerator[static_cast<std::size_t>(n + i)] = (i % 2 == 0) ? rank : -rank;
    }
    profile.hp_constant = binomial(n + d, d);
    return profile;
}

}  // namespace gcset
