#include "gcset/homology.hpp"

#include "gcset/chung_yao.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gcset;

namespace {

Face face(std::initializer_list<int> idx) { return Face::from_indices(idx); }

SimplicialComplex two_disjoint_edges() {
    return SimplicialComplex::from_facets(4, {face({0, 1}), face({2, 3})});
}

}  // namespace

TEST_SUITE("homology") {
    TEST_CASE("cones are acyclic") {
        const auto profile = reduced_homology(skeleton(3, 3));
        for (std::int64_t r : profile.ranks) CHECK(r == 0);
    }

    TEST_CASE("1-skeleton of the tetrahedron is a wedge of three circles") {
        const auto profile = reduced_homology(skeleton(4, 2));
        CHECK(profile.at_dim(-1) == 0);
        CHECK(profile.at_dim(0) == 0);
        CHECK(profile.at_dim(1) == 3);
    }

    TEST_CASE("two isolated vertices") {
        const auto profile = reduced_homology(skeleton(2, 1));
        CHECK(profile.at_dim(-1) == 0);
        CHECK(profile.at_dim(0) == 1);
    }

    TEST_CASE("irrelevant complex carries rank in dimension -1") {
        const auto profile = reduced_homology(SimplicialComplex::irrelevant_complex(2));
        CHECK(profile.ranks == std::vector<std::int64_t>{1});
        CHECK_THROWS_AS(reduced_homology(SimplicialComplex::void_complex(2)),
                        std::invalid_argument);
    }

    TEST_CASE("homology agrees with the naive oracle on pseudorandom complexes") {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 30; ++trial) {
            const auto complex = oracle::random_complex(rng, 8);
            const auto got = reduced_homology(complex);
            const auto expected = oracle::reduced_homology_naive(oracle::all_faces_naive(complex));
            REQUIRE(got.ranks.size() == expected.size());
            for (std::size_t k = 0; k < expected.size(); ++k)
                CHECK(got.ranks[k] == expected[k]);
        }
    }

    TEST_CASE("euler characteristic consistency") {
        std::mt19937_64 rng(808);
        for (int trial = 0; trial < 30; ++trial) {
            const auto complex = oracle::random_complex(rng, 9);
            const auto fv = f_vector(complex);
            const auto profile = reduced_homology(complex);
            std::int64_t chi_faces = 0, chi_ranks = 0;
            for (int dim = -1; dim <= complex.dimension(); ++dim) {
                const std::int64_t sign = (dim % 2 == 0) ? 1 : -1;  // (-1)^dim, dim=-1 gives -1
                chi_faces += sign * fv.at_dim(dim);
                chi_ranks += sign * profile.at_dim(dim);
            }
            CHECK(chi_faces == chi_ranks);
        }
    }
}

TEST_SUITE("reisner") {
    TEST_CASE("1-skeleton is cohen-macaulay") {
        const auto result = is_cohen_macaulay(skeleton(4, 2));
        CHECK(result.cohen_macaulay);
        CHECK_FALSE(result.failure.has_value());
    }

    TEST_CASE("two disjoint edges fail at the empty face") {
        const auto result = is_cohen_macaulay(two_disjoint_edges());
        CHECK_FALSE(result.cohen_macaulay);
        REQUIRE(result.failure.has_value());
        CHECK(result.failure->face == Face());
        CHECK(result.failure->dimension == 0);
    }

    TEST_CASE("zero-dimensional complexes are cohen-macaulay") {
        CHECK(is_cohen_macaulay(skeleton(4, 1)).cohen_macaulay);
    }

    TEST_CASE("cohen-macaulay implies pure") {
        std::mt19937_64 rng(606);
        for (int trial = 0; trial < 60; ++trial) {
            const auto complex = oracle::random_complex(rng, 8);
            if (is_cohen_macaulay(complex).cohen_macaulay) CHECK(is_pure(complex));
        }
    }

    TEST_CASE("agrees with the naive double-check on pseudorandom complexes") {
        std::mt19937_64 rng(1234);
        for (int trial = 0; trial < 25; ++trial) {
            const auto complex = oracle::random_complex(rng, 7);
            CHECK(is_cohen_macaulay(complex).cohen_macaulay ==
                  oracle::is_cohen_macaulay_naive(complex));
        }
    }

    TEST_CASE("bi-cm: skeleton ideals and the fixtures") {
        CHECK(is_bicm(sr_ideal(skeleton(4, 2))));
        CHECK_FALSE(is_bicm(sr_ideal(two_disjoint_edges())));
    }

    TEST_CASE("bi-cm holds across the skeleton family") {
        for (int i = 3; i <= 8; ++i) {
            for (int j = 2; j < i; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(is_bicm(sr_ideal(skeleton(i, j))));
            }
        }
    }
}

TEST_SUITE("fvector laws") {
    TEST_CASE("duality law on examples and random corpus") {
        CHECK(fv_duality_check(skeleton(4, 2)));
        CHECK(fv_duality_check(skeleton(3, 3)));
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 50; ++trial) {
            const auto complex = oracle::random_complex(rng, 10);
            if (complex.is_irrelevant()) continue;
            CHECK(fv_duality_check(complex));
        }
    }

    TEST_CASE("factorization of the 1-skeleton f-vector") {
        const auto f = bicm_fvector_factorization(f_vector(skeleton(4, 2)));
        REQUIRE(f.has_value());
        CHECK(*f == FvFactorization{0, 4, 2});
    }

    TEST_CASE("factorization of the one-lattice f-vector") {
        const auto f = bicm_fvector_factorization(FVector{{1, 8, 28, 46, 35, 10}});
        REQUIRE(f.has_value());
        CHECK(*f == FvFactorization{3, 5, 2});
    }

    TEST_CASE("factorization of the ten-vertex f-vector") {
        const auto f =
            bicm_fvector_factorization(FVector{{1, 10, 45, 110, 155, 126, 55, 10}});
        REQUIRE(f.has_value());
        CHECK(*f == FvFactorization{5, 5, 2});
    }

    TEST_CASE("full simplex factors as a pure power") {
        const auto f = bicm_fvector_factorization(f_vector(skeleton(3, 3)));
        REQUIRE(f.has_value());
        CHECK(f->binomial_m == 0);
        CHECK(f->power == 3);
    }

    TEST_CASE("non-factorable vectors give empty") {
        CHECK_FALSE(bicm_fvector_factorization(FVector{{1, 4, 7}}).has_value());
        CHECK_FALSE(bicm_fvector_factorization(FVector{{1, 2, 3, 5}}).has_value());
    }

    TEST_CASE("factorization exists for bi-cm equigenerated ideals") {
        for (int i = 4; i <= 8; ++i) {
            for (int j = 2; j < i; ++j) {
                const auto ideal = sr_ideal(skeleton(i, j));
                if (!is_bicm(ideal)) continue;
                CHECK(bicm_fvector_factorization(f_vector(complex_of(ideal))).has_value());
            }
        }
    }

    TEST_CASE("bicm report of the 1-skeleton ideal") {
        const auto report = bicm_report(sr_ideal(skeleton(4, 2)));
        CHECK(report.cm);
        CHECK(report.dual_cm);
        CHECK(report.bicm);
        CHECK_FALSE(report.failing.has_value());
        REQUIRE(report.fvect.has_value());
        CHECK(*report.fvect == FvFactorization{0, 4, 2});
    }
}
