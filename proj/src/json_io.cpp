#include "gcset/json_io.hpp"

#include <stdexcept>

namespace gcset::io {

namespace {

void require_object(const json& j, const char* what) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(what) + ": expected a JSON object");
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

json face_to_json(const Face& face) {
    json out = json::array();
    for (int v : face.indices()) out.push_back(v);
    return out;
}

Face face_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("face: expected an array of indices");
    std::vector<int> indices;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("face: non-integer index");
        indices.push_back(e.get<int>());
    }
    for (std::size_t i = 1; i < indices.size(); ++i) {
        if (indices[i - 1] >= indices[i])
            throw std::invalid_argument("face: indices must be strictly increasing");
    }
    return Face::from_indices(indices);
}

json rational_to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    throw std::invalid_argument("rational: expected \"p/q\", an integer string, or an integer");
}

json to_json(const SimplicialComplex& complex) {
    json facets = json::array();
    for (const Face& f : complex.facets()) facets.push_back(face_to_json(f));
    return json{{"vertices", complex.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    require_object(j, "complex");
    const int m = int_field(j, "vertices");
    if (!j.contains("facets") || !j.at("facets").is_array())
        throw std::invalid_argument("complex: missing 'facets' array");
    std::vector<Face> facets;
    for (const auto& e : j.at("facets")) facets.push_back(face_from_json(e));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

json to_json(const SquarefreeMonomialIdeal& ideal) {
    json gens = json::array();
    for (const Face& g : ideal.generators()) gens.push_back(face_to_json(g));
    return json{{"variables", ideal.variable_count()}, {"generators", gens}};
}

SquarefreeMonomialIdeal ideal_from_json(const json& j) {
    require_object(j, "ideal");
    const int m = int_field(j, "variables");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw std::invalid_argument("ideal: missing 'generators' array");
    std::vector<Face> gens;
    for (const auto& e : j.at("generators")) gens.push_back(face_from_json(e));
    return SquarefreeMonomialIdeal::from_generators(m, std::move(gens));
}

json forms_to_json(const std::vector<LinearForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("forms_to_json: empty form list");
    json list = json::array();
    for (const LinearForm& f : forms) {
        json row = json::array();
        for (Eigen::Index i = 0; i < f.coefficients().size(); ++i)
            row.push_back(rational_to_json(f.coefficients()(i)));
        list.push_back(row);
    }
    return json{{"ambient_dim", forms.front().ambient_dim()}, {"forms", list}};
}

std::vector<LinearForm> forms_from_json(const json& j) {
    require_object(j, "forms");
    const int d = int_field(j, "ambient_dim");
    if (!j.contains("forms") || !j.at("forms").is_array())
        throw std::invalid_argument("forms: missing 'forms' array");
    std::vector<LinearForm> out;
    for (const auto& row : j.at("forms")) {
        if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
            throw std::invalid_argument("forms: each form needs d+1 coefficients");
        QVector v(d + 1);
        for (int i = 0; i <= d; ++i) v(i) = rational_from_json(row.at(static_cast<std::size_t>(i)));
        out.emplace_back(std::move(v));
    }
    if (out.empty()) throw std::invalid_argument("forms: empty form list");
    return out;
}

json to_json(const PointConfiguration& config) {
    json points = json::array();
    for (const ProjectivePoint& p : config.points) {
        json hom = json::array();
        for (Eigen::Index i = 0; i < p.coordinates().size(); ++i)
            hom.push_back(rational_to_json(p.coordinates()(i)));
        json affine = json::array();
        const QVector aff = p.affine(config.chart);
        for (Eigen::Index i = 0; i < aff.size(); ++i) affine.push_back(rational_to_json(aff(i)));
        points.push_back(json{{"hom", hom}, {"affine", affine}});
    }
    json out{{"chart", config.chart}, {"points", points}};
    if (!config.provenance.empty()) {
        json prov = json::array();
        for (const PrimeComponent& c : config.provenance) prov.push_back(face_to_json(c.variables));
        out["provenance"] = prov;
    }
    return out;
}

PointConfiguration points_from_json(const json& j) {
    require_object(j, "points");
    PointConfiguration config;
    config.chart = int_field(j, "chart");
    if (!j.contains("points") || !j.at("points").is_array())
        throw std::invalid_argument("points: missing 'points' array");
    for (const auto& e : j.at("points")) {
        const json& hom = e.is_object() ? e.at("hom") : e;
        if (!hom.is_array()) throw std::invalid_argument("points: expected coordinate arrays");
        QVector v(static_cast<Eigen::Index>(hom.size()));
        for (std::size_t i = 0; i < hom.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = rational_from_json(hom.at(i));
        config.points.emplace_back(std::move(v));
    }
    if (j.contains("provenance")) {
        for (const auto& e : j.at("provenance"))
            config.provenance.push_back(PrimeComponent{face_from_json(e)});
        if (config.provenance.size() != config.points.size())
            throw std::invalid_argument("points: provenance length mismatch");
    }
    return config;
}

json to_json(const BicmReport& report) {
    json out{{"cm", report.cm},
             {"dual_cm", report.dual_cm},
             {"bicm", report.bicm},
             {"failing_face", nullptr},
             {"fvect_factorization", nullptr}};
    if (report.failing) {
        out["failing_face"] = face_to_json(report.failing->face);
        out["failing_dimension"] = report.failing->dimension;
    }
    if (report.fvect) {
        out["fvect_factorization"] = json{{"i", report.fvect->power},
                                          {"m", report.fvect->binomial_m},
                                          {"k", report.fvect->truncation}};
    }
    return out;
}

BicmReport bicm_report_from_json(const json& j) {
    require_object(j, "bicm report");
    BicmReport report;
    report.cm = j.at("cm").get<bool>();
    report.dual_cm = j.at("dual_cm").get<bool>();
    report.bicm = j.at("bicm").get<bool>();
    if (j.contains("failing_face") && !j.at("failing_face").is_null()) {
        report.failing = CmFailure{face_from_json(j.at("failing_face")),
                                   int_field(j, "failing_dimension")};
    }
    if (j.contains("fvect_factorization") && !j.at("fvect_factorization").is_null()) {
        const json& f = j.at("fvect_factorization");
        report.fvect = FvFactorization{int_field(f, "i"), int_field(f, "m"), int_field(f, "k")};
    }
    return report;
}

json to_json(const MonomialGCReport& report) {
    json components = json::array();
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        json c{{"vars", face_to_json(report.components[i].variables)}, {"witness", nullptr}};
        if (report.witnesses[i]) c["witness"] = face_to_json(report.witnesses[i]->tau);
        components.push_back(c);
    }
    json maximal = json::array();
    for (const HyperplaneCount& h : report.maximal_hyperplanes)
        maximal.push_back(json{{"vertex", h.vertex}, {"count", h.component_count}});
    json out{{"d", report.params.d},
             {"n", report.params.n},
             {"components", components},
             {"gc_count", report.gc_component_count},
             {"monomial_gc", report.is_monomial_gc},
             {"maximal_hyperplanes", maximal},
             {"generator_count_matches", report.params.generator_count_matches}};
    if (!report.exceeding_hyperplanes.empty()) {
        json exceeding = json::array();
        for (const HyperplaneCount& h : report.exceeding_hyperplanes)
            exceeding.push_back(json{{"vertex", h.vertex}, {"count", h.component_count}});
        out["exceeding_hyperplanes"] = exceeding;
    }
    return out;
}

MonomialGCReport gc_report_from_json(const json& j) {
    require_object(j, "gc report");
    MonomialGCReport report;
    report.params.d = int_field(j, "d");
    report.params.n = int_field(j, "n");
    report.params.degree = binomial(report.params.n + report.params.d, report.params.d);
    report.params.generator_count_matches = j.at("generator_count_matches").get<bool>();
    for (const auto& e : j.at("components")) {
        PrimeComponent component{face_from_json(e.at("vars"))};
        report.components.push_back(component);
        if (e.contains("witness") && !e.at("witness").is_null()) {
            report.witnesses.push_back(GCWitness{component, face_from_json(e.at("witness"))});
            ++report.gc_component_count;
        } else {
            report.witnesses.push_back(std::nullopt);
        }
    }
    report.is_monomial_gc = j.at("monomial_gc").get<bool>();
    for (const auto& e : j.at("maximal_hyperplanes"))
        report.maximal_hyperplanes.push_back(
            {int_field(e, "vertex"), e.at("count").get<std::int64_t>()});
    if (j.contains("exceeding_hyperplanes")) {
        for (const auto& e : j.at("exceeding_hyperplanes"))
            report.exceeding_hyperplanes.push_back(
                {int_field(e, "vertex"), e.at("count").get<std::int64_t>()});
    }
    return report;
}

json to_json(const VerifyReport& report) {
    json out{{"n", report.n},
             {"n_correct", report.n_correct},
             {"gc_certified", report.gc_certified},
             {"certificates", nullptr},
             {"certificate_span_dimension", nullptr},
             {"maximal_count", report.maximal_count},
             {"allow_repeats", report.allow_repeats},
             {"regular_sequence_checked_by_consequences", true}};
    if (report.certificate_span) out["certificate_span_dimension"] = *report.certificate_span;
    if (report.certificates) {
        json certs = json::array();
        for (const GCCertificate& c : *report.certificates) {
            json factors = json::array();
            for (int f : c.factors) factors.push_back(f);
            certs.push_back(json{{"point", c.point},
                                 {"factors", factors},
                                 {"scale", rational_to_json(c.scale)}});
        }
        out["certificates"] = certs;
    }
    json hyperplanes = json::array();
    for (const HyperplaneIncidence& h : report.hyperplanes)
        hyperplanes.push_back(
            json{{"form", h.form}, {"count", h.point_count}, {"maximal", h.maximal}});
    out["maximal_hyperplanes"] = hyperplanes;
    return out;
}

VerifyReport verify_report_from_json(const json& j) {
    require_object(j, "verify report");
    VerifyReport report;
    report.n = int_field(j, "n");
    report.n_correct = j.at("n_correct").get<bool>();
    report.gc_certified = j.at("gc_certified").get<bool>();
    report.maximal_count = j.at("maximal_count").get<std::int64_t>();
    report.allow_repeats = j.at("allow_repeats").get<bool>();
    if (j.contains("certificate_span_dimension") &&
        !j.at("certificate_span_dimension").is_null()) {
        report.certificate_span = j.at("certificate_span_dimension").get<std::int64_t>();
    }
    if (j.contains("certificates") && !j.at("certificates").is_null()) {
        std::vector<GCCertificate> certs;
        for (const auto& e : j.at("certificates")) {
            GCCertificate c;
            c.point = int_field(e, "point");
            for (const auto& f : e.at("factors")) c.factors.push_back(f.get<int>());
            c.scale = rational_from_json(e.at("scale"));
            certs.push_back(std::move(c));
        }
        report.certificates = std::move(certs);
    }
    for (const auto& e : j.at("maximal_hyperplanes")) {
        report.hyperplanes.push_back({int_field(e, "form"), e.at("count").get<std::int64_t>(),
                                      e.at("maximal").get<bool>()});
    }
    return report;
}

json to_json(const ResolutionProfile& profile) {
    json ranks = json::array();
    for (const auto& [shift, rank] : profile.ranks) ranks.push_back(json::array({shift, rank}));
    json numerator = json::array();
    for (std::int64_t c : profile.numerator) numerator.push_back(c);
    return json{{"ranks", ranks}, {"numerator", numerator}, {"hp_constant", profile.hp_constant}};
}

ResolutionProfile resolution_profile_from_json(const json& j) {
    require_object(j, "resolution profile");
    ResolutionProfile profile;
    for (const auto& e : j.at("ranks"))
        profile.ranks.emplace_back(e.at(0).get<int>(), e.at(1).get<std::int64_t>());
    for (const auto& e : j.at("numerator")) profile.numerator.push_back(e.get<std::int64_t>());
    profile.hp_constant = j.at("hp_constant").get<std::int64_t>();
    return profile;
}

SimplicialComplex complex_from_document(const json& document) {
    if (document.is_object() && document.contains("complex"))
        return complex_from_json(document.at("complex"));
    return complex_from_json(document);
}

SquarefreeMonomialIdeal ideal_from_document(const json& document) {
    if (document.is_object() && document.contains("ideal"))
        return ideal_from_json(document.at("ideal"));
    return ideal_from_json(document);
}

std::vector<LinearForm> forms_from_document(const json& document) {
    if (document.is_object() && document.contains("forms") && document.at("forms").is_object())
        return forms_from_json(document.at("forms"));
    return forms_from_json(document);
}

PointConfiguration points_from_document(const json& document) {
    if (document.is_object() && document.contains("points") && document.at("points").is_object())
        return points_from_json(document.at("points"));
    return points_from_json(document);
}

}  // namespace gcset::io
