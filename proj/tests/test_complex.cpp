#include "gcset/complex.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gcset;

namespace {

Face face(std::initializer_list<int> idx) { return Face::from_indices(idx); }

}  // namespace

TEST_SUITE("face") {
    TEST_CASE("lex order matches index sequences") {
        CHECK(lex_less(face({0, 3}), face({1, 2})));
        CHECK_FALSE(lex_less(face({1, 2}), face({0, 3})));
        CHECK(lex_less(face({0, 1}), face({0, 1, 2})));
        CHECK(lex_less(face({0, 1, 2}), face({0, 1, 3})));
        CHECK_FALSE(lex_less(face({0, 1}), face({0, 1})));
    }

    TEST_CASE("binomial") {
        CHECK(binomial(4, 2) == 6);
        CHECK(binomial(5, 3) == 10);
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(3, 5) == 0);
        CHECK(binomial(64, 32) == 1832624140942590534LL);
    }

    TEST_CASE("subset enumeration is lex ordered") {
        const auto subsets = subsets_of_size(4, 2);
        REQUIRE(subsets.size() == 6);
        CHECK(subsets.front() == face({0, 1}));
        CHECK(subsets[1] == face({0, 2}));
        CHECK(subsets.back() == face({2, 3}));
    }

    TEST_CASE("from_indices validation") {
        CHECK_THROWS_AS(Face::from_indices({0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(Face::from_indices({-1}), std::invalid_argument);
        CHECK_THROWS_AS(Face::from_indices({64}), std::invalid_argument);
    }
}

TEST_SUITE("complex") {
    TEST_CASE("from_facets drops dominated faces") {
        const auto complex =
            SimplicialComplex::from_facets(4, {face({0, 1}), face({0, 1}), face({0})});
        REQUIRE(complex.facets().size() == 1);
        CHECK(complex.facets()[0] == face({0, 1}));
    }

    TEST_CASE("from_facets validation") {
        CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {}), std::invalid_argument);
        CHECK_THROWS_AS(SimplicialComplex::from_facets(-3, {}), std::invalid_argument);
        CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {face({2})}), std::invalid_argument);
    }

    TEST_CASE("void and irrelevant complexes are distinct") {
        const auto void_c = SimplicialComplex::void_complex(3);
        const auto irrelevant = SimplicialComplex::irrelevant_complex(3);
        CHECK(void_c.is_void());
        CHECK_FALSE(void_c.is_irrelevant());
        CHECK(irrelevant.is_irrelevant());
        CHECK_FALSE(irrelevant.is_void());
        CHECK(void_c.dimension() == -2);
        CHECK(irrelevant.dimension() == -1);
        CHECK_FALSE(void_c.contains(Face()));
        CHECK(irrelevant.contains(Face()));
        CHECK(f_vector(irrelevant).counts == std::vector<std::int64_t>{1});
        CHECK_THROWS_AS(f_vector(void_c), std::invalid_argument);
    }

    TEST_CASE("f-vector of the tetrahedron 1-skeleton") {
        const auto fv = f_vector(skeleton(4, 2));
        CHECK(fv.counts == std::vector<std::int64_t>{1, 4, 6});
    }

    TEST_CASE("single vertex") {
        const auto complex = SimplicialComplex::from_facets(1, {face({0})});
        CHECK(f_vector(complex).counts == std::vector<std::int64_t>{1, 1});
    }

    TEST_CASE("skeleton shapes") {
        const auto sk42 = skeleton(4, 2);
        CHECK(sk42.vertex_count() == 4);
        CHECK(sk42.facets().size() == 6);
        const auto sk41 = skeleton(4, 1);
        CHECK(sk41.facets().size() == 4);
        CHECK(sk41.dimension() == 0);
        const auto sk33 = skeleton(3, 3);
        CHECK(f_vector(sk33).counts == std::vector<std::int64_t>{1, 3, 3, 1});
        CHECK_THROWS_AS(skeleton(3, 4), std::invalid_argument);
        CHECK_THROWS_AS(skeleton(3, 0), std::invalid_argument);
    }

    TEST_CASE("skeleton counting laws") {
        for (int i = 3; i <= 8; ++i) {
            for (int j = 1; j < i; ++j) {
                const auto sk = skeleton(i, j);
                const auto fv = f_vector(sk);
                for (int k = 0; k + 1 <= j; ++k) {
                    CHECK(fv.at_dim(k) == binomial(i, k + 1));
                }
                const auto nonfaces = minimal_nonfaces(sk);
                CHECK(static_cast<std::int64_t>(nonfaces.size()) == binomial(i, j + 1));
                for (const Face& nf : nonfaces) CHECK(nf.size() == j + 1);
            }
        }
    }

    TEST_CASE("minimal nonfaces of the 1-skeleton are the four triangles") {
        const auto nonfaces = minimal_nonfaces(skeleton(4, 2));
        REQUIRE(nonfaces.size() == 4);
        CHECK(nonfaces[0] == face({0, 1, 2}));
        CHECK(nonfaces[1] == face({0, 1, 3}));
        CHECK(nonfaces[2] == face({0, 2, 3}));
        CHECK(nonfaces[3] == face({1, 2, 3}));
    }

    TEST_CASE("full simplex has no nonfaces") {
        CHECK(minimal_nonfaces(skeleton(3, 3)).empty());
    }

    TEST_CASE("alexander dual of the 1-skeleton is four points") {
        CHECK(alexander_dual(skeleton(4, 2)) == skeleton(4, 1));
    }

    TEST_CASE("duality swaps full and void") {
        const auto full = skeleton(3, 3);
        const auto dual = alexander_dual(full);
        CHECK(dual.is_void());
        CHECK(alexander_dual(dual) == full);
    }

    TEST_CASE("duality is an involution on pseudorandom complexes") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 50; ++trial) {
            const auto complex = oracle::random_complex(rng, 12);
            CHECK(alexander_dual(alexander_dual(complex)) == complex);
        }
    }

    TEST_CASE("face-count duality law on pseudorandom complexes") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            const auto complex = oracle::random_complex(rng, 10);
            if (complex.is_irrelevant()) continue;
            const int m = complex.vertex_count();
            const auto f = f_vector(complex);
            const auto dual = alexander_dual(complex);
            for (int i = 0; i <= m - 2; ++i) {
                const std::int64_t dual_count = dual.is_void() ? 0 : f_vector(dual).at_dim(i);
                CHECK(dual_count + f.at_dim(m - i - 2) == binomial(m, i + 1));
            }
        }
    }

    TEST_CASE("link") {
        const auto sk42 = skeleton(4, 2);
        CHECK(link(sk42, Face()) == sk42);
        const auto lk0 = link(sk42, face({0}));
        CHECK(lk0.facets().size() == 3);
        CHECK(lk0.facets()[0] == face({1}));
        CHECK(lk0.facets()[1] == face({2}));
        CHECK(lk0.facets()[2] == face({3}));
        const auto lk_edge = link(skeleton(3, 3), face({0, 1}));
        CHECK(lk_edge.contains(face({2})));
        CHECK_THROWS_AS(link(sk42, face({0, 1, 2})), std::invalid_argument);
    }

    TEST_CASE("link of a facet is the irrelevant complex") {
        const auto sk42 = skeleton(4, 2);
        CHECK(link(sk42, face({0, 1})).is_irrelevant());
    }

    TEST_CASE("purity") {
        CHECK(is_pure(skeleton(4, 2)));
        CHECK_FALSE(is_pure(SimplicialComplex::from_facets(3, {face({0, 1}), face({2})})));
    }

    TEST_CASE("all_faces agrees with the naive enumeration") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const auto complex = oracle::random_complex(rng, 9);
            const auto naive = oracle::all_faces_naive(complex);
            const auto fast = complex.all_faces();
            REQUIRE(fast.size() == naive.size());
            for (const Face& f : fast) CHECK(naive.count(f.indices()) == 1);
        }
    }
}
