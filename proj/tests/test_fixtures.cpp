#include "gcset/fixtures.hpp"

#include "gcset/chung_yao.hpp"
#include "gcset/gc.hpp"
#include "gcset/homology.hpp"

#include <doctest.h>

using namespace gcset;

TEST_SUITE("fixtures") {
    TEST_CASE("names") {
        CHECK(fixture_names().size() == 3);
        CHECK_THROWS_AS(fixture("no-such-fixture"), std::invalid_argument);
    }

    TEST_CASE("cy-4-lines is the planar natural lattice") {
        const Fixture fx = fixture("cy-4-lines");
        CHECK(fx.ideal == chung_yao_ideal(2, 2));
        CHECK(fx.label_offset == 1);
        const auto config = specialize(fx.ideal, fx.map, fx.chart);
        const auto report = verify_configuration(config, fx.map.forms(), 2);
        CHECK(report.n_correct);
        CHECK(report.gc_certified);
        CHECK(report.maximal_count == 4);
        CHECK(report.certificate_span == binomial(4, 2));
    }

    TEST_CASE("berzolari-radon-10 is 2-correct but not pool-certifiable") {
        const Fixture fx = fixture("berzolari-radon-10");
        CHECK(fx.label_offset == 0);
        CHECK(is_bicm(fx.ideal));
        const auto config = specialize(fx.ideal, fx.map, fx.chart);
        const auto report = verify_configuration(config, fx.map.forms(), 2);
        CHECK(report.n_correct);
        CHECK_FALSE(report.gc_certified);
    }

    TEST_CASE("one-lattice-8: the specialization turns all ten components GC") {
        const Fixture fx = fixture("one-lattice-8");
        CHECK(fx.label_offset == 1);

        const auto gc = monomial_gc_report(fx.ideal);
        CHECK(gc.gc_component_count == 6);
        CHECK_FALSE(gc.is_monomial_gc);

        const auto config = specialize(fx.ideal, fx.map, fx.chart);
        REQUIRE(config.points.size() == 10);
        const auto report = verify_configuration(config, fx.map.forms(), 2);
        CHECK(report.n_correct);
        CHECK(report.gc_certified);
        CHECK(report.certificate_span == binomial(5, 3));

        // Frozen lex-first factor pairs, component order. The first six are
        // the transported monomial witnesses; the last four are certificates
        // the combinatorics alone cannot provide.
        const std::vector<std::vector<int>> expected = {
            {4, 6}, {4, 5}, {5, 7}, {5, 6}, {6, 7},
            {4, 7}, {2, 7}, {3, 6}, {1, 5}, {0, 4}};
        REQUIRE(report.certificates.has_value());
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK((*report.certificates)[i].factors == expected[i]);
            CHECK(verify_certificate(config, fx.map.forms(), (*report.certificates)[i]));
        }

        // exactly the four tetrahedron planes are maximal, six points each
        CHECK(report.maximal_count == 4);
        for (int f = 4; f <= 7; ++f) {
            CHECK(report.hyperplanes[static_cast<std::size_t>(f)].point_count == 6);
            CHECK(report.hyperplanes[static_cast<std::size_t>(f)].maximal);
        }
        for (int f = 0; f <= 3; ++f)
            CHECK_FALSE(report.hyperplanes[static_cast<std::size_t>(f)].maximal);
    }

    TEST_CASE("one-lattice-8: monomial witnesses transport along the fixture map") {
        const Fixture fx = fixture("one-lattice-8");
        const auto config = specialize(fx.ideal, fx.map, fx.chart);
        const auto gc = monomial_gc_report(fx.ideal);
        for (std::size_t i = 0; i < gc.components.size(); ++i) {
            if (!gc.witnesses[i]) continue;
            for (std::size_t q = 0; q < config.points.size(); ++q) {
                Rational value(1);
                for (int t : gc.witnesses[i]->tau.indices())
                    value *= evaluate(fx.map.forms()[static_cast<std::size_t>(t)],
                                      config.points[q]);
                CHECK((value == Rational(0)) == (q != i));
            }
        }
    }

    TEST_CASE("one-lattice-8: a verified-generic specialization stays 2-correct "
              "but loses the pool certificates") {
        const Fixture fx = fixture("one-lattice-8");
        const auto pool = generic_forms(3, 8, 1);
        const auto config = specialize(fx.ideal, SpecializationMap(3, pool), 3);
        CHECK(is_n_correct(config, 2));
        CHECK_FALSE(gc_certificates(config, pool, 2).has_value());
        CHECK_FALSE(gc_certificates(config, pool, 2, true).has_value());
    }
}
