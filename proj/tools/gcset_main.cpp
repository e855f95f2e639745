// gcset: verification and construction of geometrically characterized
// interpolation node sets via squarefree monomial ideals.
//
// Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = invalid input or precondition violation.

#include "gcset/chung_yao.hpp"
#include "gcset/fixtures.hpp"
#include "gcset/gc.hpp"
#include "gcset/homology.hpp"
#include "gcset/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using gcset::io::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInvalidInput = 2;

json read_document(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string face_text(const gcset::Face& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

// ---- human-readable report printers --------------------------------------

void print_bicm(const gcset::BicmReport& report) {
    std::cout << "cohen-macaulay: " << (report.cm ? "yes" : "no") << "\n"
              << "dual cohen-macaulay: " << (report.dual_cm ? "yes" : "no") << "\n"
              << "bi-cohen-macaulay: " << (report.bicm ? "yes" : "no") << "\n";
    if (report.failing) {
        std::cout << "first failing link: face " << face_text(report.failing->face)
                  << ", homology dimension " << report.failing->dimension << "\n";
    }
    if (report.fvect) {
        std::cout << "f-vector factorization: (1+t)^" << report.fvect->power << " * truncated("
                  << report.fvect->binomial_m << "," << report.fvect->truncation << ")\n";
    } else {
        std::cout << "f-vector factorization: none\n";
    }
}

void print_gc(const gcset::MonomialGCReport& report) {
    std::cout << "d = " << report.params.d << ", n = " << report.params.n
              << ", degree = " << report.params.degree << "\n";
    if (!report.params.generator_count_matches)
        std::cout << "warning: generator count differs from C(n+d, n+1)\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        std::cout << "component " << face_text(report.components[i].variables) << ": ";
        if (report.witnesses[i]) {
            std::cout << "witness " << face_text(report.witnesses[i]->tau) << "\n";
        } else {
            std::cout << "no witness\n";
        }
    }
    std::cout << "monomial GC components: " << report.gc_component_count << "/"
              << report.components.size() << "\n"
              << "monomial GC ideal: " << (report.is_monomial_gc ? "yes" : "no") << "\n";
    std::cout << "maximal monomial hyperplanes:";
    for (const auto& h : report.maximal_hyperplanes)
        std::cout << " " << h.vertex << " (in " << h.component_count << ")";
    std::cout << "\n";
    for (const auto& h : report.exceeding_hyperplanes)
        std::cout << "vertex " << h.vertex << " exceeds the maximal count: "
                  << h.component_count << "\n";
}

void print_verify(const gcset::VerifyReport& report) {
    std::cout << "n-correct: " << (report.n_correct ? "yes" : "no") << "\n"
              << "GC-certified from pool: " << (report.gc_certified ? "yes" : "no") << "\n";
    if (report.certificates) {
        for (const auto& cert : *report.certificates) {
            std::cout << "  point " << cert.point << ": factors";
            for (int f : cert.factors) std::cout << " " << f;
            std::cout << ", scale " << cert.scale << "\n";
        }
    }
    if (report.certificate_span)
        std::cout << "certificate span in degree " << report.n << ": "
                  << *report.certificate_span << "\n";
    std::cout << "maximal hyperplanes (" << report.maximal_count << "):";
    for (const auto& h : report.hyperplanes) {
        if (h.maximal) std::cout << " " << h.form << " (" << h.point_count << " points)";
    }
    std::cout << "\nregular-sequence hypotheses verified via consequences\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometrically characterized node sets from squarefree monomial ideals"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string input_path;
    app.add_flag("--json", as_json, "emit machine-readable JSON on stdout");

    // complex ------------------------------------------------------------
    auto* complex_cmd = app.add_subcommand("complex", "simplicial complex operations");
    complex_cmd->require_subcommand(1);
    auto* complex_fvector = complex_cmd->add_subcommand("fvector", "face counts");
    auto* complex_dual = complex_cmd->add_subcommand("dual", "Alexander dual");
    auto* complex_check_cm = complex_cmd->add_subcommand("check-cm", "Reisner criterion");
    auto* complex_check_bicm =
        complex_cmd->add_subcommand("check-bicm", "Reisner criterion for both sides");
    for (auto* sub : {complex_fvector, complex_dual, complex_check_cm, complex_check_bicm})
        sub->add_option("input", input_path, "complex JSON (default: stdin)");

    // ideal ----------------------------------------------------------------
    auto* ideal_cmd = app.add_subcommand("ideal", "squarefree monomial ideal operations");
    ideal_cmd->require_subcommand(1);
    auto* ideal_decompose = ideal_cmd->add_subcommand("decompose", "primary decomposition");
    auto* ideal_dual = ideal_cmd->add_subcommand("dual", "Alexander-dual ideal");
    auto* ideal_params = ideal_cmd->add_subcommand("params", "infer (d, n) and degree");
    for (auto* sub : {ideal_decompose, ideal_dual, ideal_params})
        sub->add_option("input", input_path, "ideal JSON (default: stdin)");

    // gc ---------------------------------------------------------------
    auto* gc_cmd = app.add_subcommand("gc", "monomial GC analysis");
    gc_cmd->require_subcommand(1);
    auto* gc_report_cmd = gc_cmd->add_subcommand("monomial-report", "per-component witnesses");
    gc_report_cmd->add_option("input", input_path, "ideal JSON (default: stdin)");

    // specialize ---------------------------------------------------------
    auto* specialize_cmd =
        app.add_subcommand("specialize", "cut one point per primary component");
    int chart = -1;
    specialize_cmd->add_option("input", input_path, "document with ideal and forms");
    specialize_cmd->add_option("--chart", chart, "dehomogenization coordinate (default: d)");

    // verify -------------------------------------------------------------
    auto* verify_cmd =
        app.add_subcommand("verify", "n-correctness, GC certificates, maximal hyperplanes");
    int verify_n = -1;
    int verify_chart = -1;
    bool allow_repeats = false;
    verify_cmd->add_option("input", input_path, "document with points and forms");
    verify_cmd->add_option("--n", verify_n, "certificate degree")->required();
    verify_cmd->add_option("--chart", verify_chart,
                           "dehomogenization coordinate (default: from the document)");
    verify_cmd->add_flag("--allow-repeats", allow_repeats, "retry with repeated factors");

    // generate -------------------------------------------------------------
    auto* generate_cmd = app.add_subcommand("generate", "deterministic generators");
    generate_cmd->require_subcommand(1);
    auto* generate_cy = generate_cmd->add_subcommand(
        "chung-yao", "skeleton ideal with a verified-generic form pool");
    int gen_d = 0, gen_n = 0;
    std::uint64_t seed = 1;
    generate_cy->add_option("--d", gen_d, "codimension")->required();
    generate_cy->add_option("--n", gen_n, "degree parameter")->required();
    generate_cy->add_option("--seed", seed, "pseudorandom seed (default 1)");

    // profile --------------------------------------------------------------
    auto* profile_cmd = app.add_subcommand("profile", "closed-form bookkeeping");
    profile_cmd->require_subcommand(1);
    auto* profile_resolution =
        profile_cmd->add_subcommand("resolution", "graded ranks, shifts, Hilbert data");
    int prof_d = 0, prof_n = 0;
    profile_resolution->add_option("--d", prof_d, "codimension")->required();
    profile_resolution->add_option("--n", prof_n, "degree parameter")->required();

    // fixture ----------------------------------------------------------
    auto* fixture_cmd = app.add_subcommand("fixture", "emit a named pinned input");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "cy-4-lines | berzolari-radon-10 | one-lattice-8")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalidInput : kExitOk;
    }

    try {
        using namespace gcset;

        if (complex_fvector->parsed()) {
            const auto complex = io::complex_from_document(read_document(input_path));
            const auto fv = f_vector(complex);
            if (as_json) {
                emit(json{{"f", fv.counts}});
            } else {
                std::cout << "f =";
                for (auto c : fv.counts) std::cout << " " << c;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (complex_dual->parsed()) {
            const auto complex = io::complex_from_document(read_document(input_path));
            emit(io::to_json(alexander_dual(complex)));
            return kExitOk;
        }
        if (complex_check_cm->parsed()) {
            const auto complex = io::complex_from_document(read_document(input_path));
            const auto result = is_cohen_macaulay(complex);
            if (as_json) {
                json j{{"cm", result.cohen_macaulay}, {"failing_face", nullptr}};
                if (result.failure) {
                    j["failing_face"] = io::face_to_json(result.failure->face);
                    j["failing_dimension"] = result.failure->dimension;
                }
                emit(j);
            } else {
                std::cout << "cohen-macaulay: " << (result.cohen_macaulay ? "yes" : "no") << "\n";
                if (result.failure)
                    std::cout << "first failing link: face " << face_text(result.failure->face)
                              << ", homology dimension " << result.failure->dimension << "\n";
            }
            return result.cohen_macaulay ? kExitOk : kExitPropertyFails;
        }
        if (complex_check_bicm->parsed()) {
            const auto complex = io::complex_from_document(read_document(input_path));
            const auto report = bicm_report(complex);
            if (as_json) {
                emit(io::to_json(report));
            } else {
                print_bicm(report);
            }
            return report.bicm ? kExitOk : kExitPropertyFails;
        }

        if (ideal_decompose->parsed()) {
            const auto ideal = io::ideal_from_document(read_document(input_path));
            const auto comps = primary_decomposition(ideal);
            json list = json::array();
            for (const auto& c : comps) list.push_back(io::face_to_json(c.variables));
            if (as_json) {
                emit(json{{"components", list}});
            } else {
                for (const auto& c : comps) std::cout << face_text(c.variables) << "\n";
            }
            return kExitOk;
        }
        if (ideal_dual->parsed()) {
            const auto ideal = io::ideal_from_document(read_document(input_path));
            emit(io::to_json(dual_ideal(ideal)));
            return kExitOk;
        }
        if (ideal_params->parsed()) {
            const auto ideal = io::ideal_from_document(read_document(input_path));
            const auto params = infer_parameters(ideal);
            const std::int64_t expected_generators =
                binomial(params.n + params.d, params.n + 1);
            if (as_json) {
                emit(json{{"d", params.d},
                          {"n", params.n},
                          {"degree", params.degree},
                          {"generator_count",
                           static_cast<std::int64_t>(ideal.generators().size())},
                          {"generator_count_expected", expected_generators},
                          {"generator_count_matches", params.generator_count_matches}});
            } else {
                std::cout << "d = " << params.d << ", n = " << params.n << ", degree = "
                          << params.degree << "\n";
                if (!params.generator_count_matches)
                    std::cout << "warning: " << ideal.generators().size()
                              << " generators, expected C(n+d, n+1) = " << expected_generators
                              << "\n";
            }
            return kExitOk;
        }

        if (gc_report_cmd->parsed()) {
            const auto ideal = io::ideal_from_document(read_document(input_path));
            const auto report = monomial_gc_report(ideal);
            if (as_json) {
                emit(io::to_json(report));
            } else {
                print_gc(report);
            }
            return report.is_monomial_gc ? kExitOk : kExitPropertyFails;
        }

        if (specialize_cmd->parsed()) {
            json document = read_document(input_path);
            const auto ideal = io::ideal_from_document(document);
            const auto forms = io::forms_from_document(document);
            const int d = forms.front().ambient_dim();
            int use_chart = chart;
            if (use_chart < 0) {
                use_chart = document.contains("chart") && document.at("chart").is_number_integer()
                                ? document.at("chart").get<int>()
                                : d;
            }
            const auto config = specialize(ideal, SpecializationMap(d, forms), use_chart);
            json out = document.is_object() ? document : json::object();
            const json points = io::to_json(config);
            out["chart"] = points.at("chart");
            out["points"] = points.at("points");
            if (points.contains("provenance")) out["provenance"] = points.at("provenance");
            out["regular_sequence_checked_by_consequences"] = true;
            emit(out);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            json document = read_document(input_path);
            auto config = io::points_from_document(document);
            if (verify_chart >= 0) config.chart = verify_chart;
            const auto forms = io::forms_from_document(document);
            const auto report = verify_configuration(config, forms, verify_n, allow_repeats);
            if (as_json) {
                emit(io::to_json(report));
            } else {
                print_verify(report);
            }
            return report.n_correct && report.gc_certified ? kExitOk : kExitPropertyFails;
        }

        if (generate_cy->parsed()) {
            const auto ideal = chung_yao_ideal(gen_d, gen_n);
            const auto forms = generic_forms(gen_d, gen_d + gen_n, seed);
            emit(json{{"ideal", io::to_json(ideal)},
                      {"forms", io::forms_to_json(forms)},
                      {"chart", gen_d},
                      {"seed", seed}});
            return kExitOk;
        }

        if (profile_resolution->parsed()) {
            const auto profile = resolution_profile(prof_d, prof_n);
            if (as_json) {
                json j = io::to_json(profile);
                j["d"] = prof_d;
                j["n"] = prof_n;
                emit(j);
            } else {
                std::cout << "shifts/ranks:";
                for (const auto& [shift, rank] : profile.ranks)
                    std::cout << " (" << shift << "," << rank << ")";
                std::cout << "\nnumerator coefficients:";
                for (auto c : profile.numerator) std::cout << " " << c;
                std::cout << "\nhilbert polynomial constant: " << profile.hp_constant << "\n";
            }
            return kExitOk;
        }

        if (fixture_cmd->parsed()) {
            const Fixture fx = fixture(fixture_name);
            emit(json{{"name", fx.name},
                      {"label_offset", fx.label_offset},
                      {"ideal", io::to_json(fx.ideal)},
                      {"forms", io::forms_to_json(fx.map.forms())},
                      {"chart", fx.chart}});
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (as_json) emit(json{{"error", e.what()}});
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (as_json) emit(json{{"error", e.what()}});
        return kExitInvalidInput;
    }

    std::cerr << "error: no subcommand executed\n";
    return kExitInvalidInput;
}
