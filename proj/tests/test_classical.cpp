#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commlie/classical.hpp"

#include <random>

using namespace commlie;

TEST_CASE("classical dimensions") {
    CHECK(build_classical("sl4").dim() == 15);
    CHECK(build_classical("sp4").dim() == 10);
    CHECK(build_classical("so20").dim() == 190);
    CHECK(build_classical("so8").dim() == 28);
    CHECK_THROWS(build_classical(Family::Sp2L, 5));
    CHECK_THROWS(build_classical("xy4"));
}

TEST_CASE("shape_check") {
    auto sp4 = build_classical("sp4");
    CHECK(sp4.shape_check(Mat(4, 4)));
    Mat x1{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}};
    CHECK(sp4.shape_check(x1));
    Mat bad{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}}; // C not symmetric-compatible
    CHECK_FALSE(sp4.shape_check(bad));

    auto sl4 = build_classical("sl4");
    CHECK_FALSE(sl4.shape_check(Mat::identity(4)));
    CHECK(sl4.shape_check(Mat{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("coords round-trip") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const char* name : {"sl4", "sp4", "so8"}) {
        auto alg = build_classical(name);
        for (int t = 0; t < 10; ++t) {
            RationalVector v(alg.dim());
            for (auto& x : v) x = c(rng);
            Mat m = alg.realize(v);
            auto back = alg.coords_of(m);
            REQUIRE(back.has_value());
            CHECK(*back == v);
        }
    }
}

TEST_CASE("basis is closed under commutator within the family") {
    for (const char* name : {"sl4", "sp4", "so8"}) {
        auto alg = build_classical(name);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = i + 1; j < alg.dim(); ++j) {
                Mat com = alg.basis()[i] * alg.basis()[j] - alg.basis()[j] * alg.basis()[i];
                REQUIRE(alg.shape_check(com));
            }
    }
}

TEST_CASE("induced structure satisfies Jacobi") {
    for (const char* name : {"sl4", "sp4", "so8"}) {
        auto alg = build_classical(name);
        auto ls = alg.structure();
        for (std::size_t i = 0; i < ls->dim(); ++i)
            for (std::size_t j = i + 1; j < ls->dim(); ++j)
                for (std::size_t k = j + 1; k < ls->dim(); ++k)
                    REQUIRE(jacobi_holds(ls, i, j, k));
    }
    // random triples beyond dim 45
    auto big = build_classical("so12").structure();
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, big->dim() - 1);
    for (int t = 0; t < 300; ++t) REQUIRE(jacobi_holds(big, pick(rng), pick(rng), pick(rng)));
}

TEST_CASE("structure bracket matches matrix commutator") {
    auto alg = build_classical("sp4");
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int t = 0; t < 10; ++t) {
        RationalVector u(alg.dim()), v(alg.dim());
        for (auto& x : u) x = c(rng);
        for (auto& x : v) x = c(rng);
        Mat mu = alg.realize(u), mv = alg.realize(v);
        LieElement b = bracket(LieElement(alg.structure(), u), LieElement(alg.structure(), v));
        CHECK(alg.realize(b.coeffs()) == mu * mv - mv * mu);
    }
}

TEST_CASE("example points commute by construction") {
    CHECK(paper_point("sl4-guralnick").tuple.size() == 4);
    CHECK(paper_point("sp4-triple").tuple.size() == 3);
    CHECK(paper_point("g2-triple").tuple.size() == 3);
    CHECK(paper_point("so4s-x1", 2).tuple.size() == 1);
    CHECK_THROWS(paper_point("unknown"));
    CHECK_THROWS(paper_point("so4s-x1")); // s required
}

TEST_CASE("sl4 point matrices are the printed ones") {
    auto sl4 = build_classical("sl4");
    auto p = guralnick_quadruple(sl4);
    CHECK(sl4.realize(p.tuple[0].coeffs()) ==
          Mat{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(sl4.realize(p.tuple[1].coeffs()) ==
          Mat{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

TEST_CASE("tuple spaces have the printed dimensions") {
    CHECK(s_prime_space("sl4", 4).dim() == 12);
    CHECK(s_prime_space("sl4", 6).dim() == 20);
    CHECK(s_prime_space("sp4", 3).dim() == 6);
    CHECK(s_prime_space("sp4", 5).dim() == 12);
    CHECK(s_prime_space("so4s", 3, 5).dim() == 100); // 4s^2
    CHECK_THROWS(s_prime_space("sl4", 3));
    CHECK_THROWS(s_prime_space("so4s", 4, 5));
}

TEST_CASE("so4s centralizer predicate accepts the displayed shape") {
    const std::size_t s = 2;
    auto so8 = build_classical("so8");
    ExamplePoint p = so4s_x1(so8);
    Mat x = so8.realize(p.tuple[0].coeffs());
    // x1 itself satisfies the predicate (A1 = A4 = A5 = 0, A2 = A6 = I).
    CHECK(so4s_centralizer_predicate(s, x));
    CHECK(so4s_centralizer_predicate(s, Mat(8, 8)));
    Mat bad(8, 8);
    bad(4, 0) = 1;
    CHECK_FALSE(so4s_centralizer_predicate(s, bad));
}
