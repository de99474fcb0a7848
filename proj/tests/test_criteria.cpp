/// @file test_criteria.cpp
/// @brief Good-parameter detection, translation into the good set, and the
///        step-matrix families with their composed-action oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cherednik/criteria.hpp"
#include "cherednik/sampling.hpp"
#include "test_util.hpp"

using namespace cherednik;
using testutil::pv;
using testutil::rp;
using testutil::rpq;

TEST_CASE("good-set membership fixtures") {
    CHECK(in_F(rp({0, 0})).in_F);
    CHECK(in_F(rp({1, 0})).in_F);
    CHECK(in_F(rpq({Rational(1, 2), Rational(0)})).in_F);
    const auto bad = in_F(rp({-1, 0}));
    CHECK_FALSE(bad.in_F);
    REQUIRE(bad.failing_pairs.size() == 2);
    CHECK(bad.failing_pairs[0] == FailingPair{1, 2, -1});
    CHECK(bad.failing_pairs[1] == FailingPair{2, 1, 1});
    REQUIRE(bad.singular_degrees.size() == 1);
    CHECK(bad.singular_degrees[0] == 0);
    // n = 3: c = (4, 0, 0) fails through (1, 2, 1).
    const auto bad3 = in_F(rp({4, 0, 0}));
    CHECK_FALSE(bad3.in_F);
    CHECK(std::count(bad3.failing_pairs.begin(), bad3.failing_pairs.end(),
                     FailingPair{1, 2, 1}) == 1);
    CHECK(std::count(bad3.failing_pairs.begin(), bad3.failing_pairs.end(),
                     FailingPair{2, 1, -1}) == 1);
    REQUIRE(bad3.singular_degrees.size() == 1);
    CHECK(bad3.singular_degrees[0] == 1);
    CHECK(in_F(rp({1, 2, 0})).in_F);
}

TEST_CASE("failing pairs come in mirrored pairs") {
    std::mt19937_64 rng(31);
    for (int n : {2, 3, 4, 5}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto r = in_F(random_integer_params(rng, n, 6));
            for (const auto& pr : r.failing_pairs) {
                CHECK(std::count(r.failing_pairs.begin(), r.failing_pairs.end(),
                                 FailingPair{pr.j, pr.i, -pr.m}) == 1);
            }
        }
    }
}

TEST_CASE("float scan agrees with the exact scan on embedded rationals") {
    std::mt19937_64 rng(32);
    for (int n : {2, 3, 4}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto p = random_integer_params(rng, n, 6);
            const auto exact = in_F(p);
            const auto approx = in_F(embed_params(p), 1e-8);
            CHECK(exact.in_F == approx.in_F);
            CHECK(exact.semisimple == approx.semisimple);
            CHECK(exact.failing_pairs == approx.failing_pairs);
        }
    }
}

TEST_CASE("semisimplicity fixtures") {
    CHECK(is_semisimple(rp({0, 0})));
    CHECK(is_semisimple(rp({0, 0, 0})));
    CHECK_FALSE(is_semisimple(rp({1, 0})));
    CHECK(is_semisimple(rpq({Rational(1, 2), Rational(0)})));
    CHECK(is_semisimple(embed_params(rp({0, 0})), 1e-8));
    CHECK_FALSE(is_semisimple(embed_params(rp({1, 0})), 1e-8));
}

TEST_CASE("semisimple parameters are always good") {
    std::mt19937_64 rng(33);
    for (int n : {2, 3, 4, 5}) {
        for (int rep = 0; rep < 40; ++rep) {
            const auto p = random_rat_params(rng, n, 9);
            if (is_semisimple(p)) CHECK(in_F(p).in_F);
            const auto r = in_F(p);
            CHECK(r.semisimple == is_semisimple(p));
        }
    }
}

TEST_CASE("translation into the good set") {
    auto tr = good_translate(rp({-1, 0}));
    CHECK(tr.c[0] == Rational(1));
    CHECK(tr.c[1] == Rational(0));
    tr = good_translate(rp({1, 0}));
    CHECK(tr.c[0] == Rational(1));
    tr = good_translate(rp({4, -2, 0}));
    CHECK(tr.c[0] == Rational(4));
    CHECK(tr.c[1] == Rational(1));
    CHECK(tr.c[2] == Rational(0));
    CHECK(in_F(tr).in_F);
}

TEST_CASE("translation properties on random integer parameters") {
    std::mt19937_64 rng(34);
    for (int n : {2, 3, 4, 5, 6}) {
        for (int rep = 0; rep < 25; ++rep) {
            const auto p = random_integer_params(rng, n, 8);
            const auto tr = good_translate(p);
            CHECK(in_F(tr).in_F);
            for (int i = 0; i < n; ++i) {
                const Rational off = (p.c[static_cast<size_t>(i)] -
                                      tr.c[static_cast<size_t>(i)]) /
                                     Rational(n);
                CHECK(off.is_integer());
            }
            CHECK(tr.c.back().is_zero());
            // Idempotent.
            const auto tr2 = good_translate(tr);
            CHECK(tr2.c == tr.c);
        }
    }
}

TEST_CASE("translation requires exact parameters") {
    CHECK_THROWS_AS(good_translate(testutil::cxp({ComplexF(0.5, 0), ComplexF(0, 0)})),
                    ModeError);
}

TEST_CASE("x-step matrix fixtures") {
    auto d = build_Dk(rp({0, 0}), 0).mat;
    REQUIRE(d.rows() == 2);
    CHECK(d.at(0, 0) == Rational(2));
    CHECK(d.at(0, 1) == Rational(0));
    CHECK(d.at(1, 0) == Rational(1));
    CHECK(d.at(1, 1) == Rational(1));
    d = build_Dk(rp({-1, 0}), 0).mat;
    CHECK(d.at(0, 0) == Rational(2));
    CHECK(d.at(1, 1) == Rational(0));
    CHECK(d.det().is_zero());
    d = build_Dk(rp({0, 0, 0}), 1).mat;
    CHECK(d.at(0, 0) == Rational(4));
    CHECK(d.at(1, 1) == Rational(3));
    CHECK(d.at(2, 2) == Rational(2));
    CHECK(d.at(1, 0) == Rational(1));
    CHECK(d.at(2, 1) == Rational(1));
    CHECK(d.at(0, 1) == Rational(0));
    CHECK_THROWS_AS(build_Dk(rp({0, 0}), -1), PreconditionError);
}

TEST_CASE("projected x-step matrix fixtures") {
    auto f = build_Fk(rp({0, 0}), pv({1, 1}), -1).mat;
    REQUIRE(f.rows() == 1);
    CHECK(f.at(0, 0) == Rational(0));
    f = build_Fk(rp({0, 0, 0}), pv({0, 0, 1}), -2).mat;
    REQUIRE(f.rows() == 1);
    CHECK(f.at(0, 0) == Rational(1));
    CHECK_THROWS_AS(build_Fk(rp({0, 0}), pv({1, 1}), 0), PreconditionError);
    CHECK_THROWS_AS(build_Fk(rp({0, 0}), pv({1, 1}), -2), PreconditionError);
    CHECK_THROWS_AS(build_Fk(rp({0, 0}), pv({1, 0}), -1), PreconditionError);
}

TEST_CASE("distinguished coefficient vector makes every projected step unit triangular") {
    std::mt19937_64 rng(35);
    for (int n : {2, 3, 4, 5}) {
        const auto t = unit_psi(n);
        for (int rep = 0; rep < 10; ++rep) {
            const auto p = random_rat_params(rng, n, 9);
            for (long k = 1 - n; k <= -1; ++k) {
                const auto f = build_Fk(p, t, k).mat;
                REQUIRE(f.rows() == static_cast<size_t>(n + k));
                for (size_t r = 0; r < f.rows(); ++r) {
                    CHECK(f.at(r, r) == Rational(1));
                    for (size_t c = 0; c < r; ++c) CHECK(f.at(r, c) == Rational(0));
                }
            }
        }
    }
}

TEST_CASE("closed forms equal the composed generator actions") {
    std::mt19937_64 rng(36);
    for (int n : {1, 2, 3, 4}) {
        for (int rep = 0; rep < 6; ++rep) {
            const auto p = random_rat_params(rng, n, 9);
            for (long k = 0; k <= 2 * n; ++k) {
                CHECK(build_Dk(p, k).mat == build_Dk_composed(p, k).mat);
            }
            PsiVector t;
            for (int i = 0; i < n; ++i) t.t.push_back(random_rational(rng, 9));
            if (t.t.back().is_zero()) t.t.back() = Rational(1);
            for (long k = 1 - n; k <= -1; ++k) {
                CHECK(build_Fk(p, t, k).mat == build_Fk_composed(p, t, k).mat);
            }
        }
    }
}

TEST_CASE("x-step nonsingularity scan") {
    const auto good = dk_all_nonsingular(rp({0, 0, 0}));
    CHECK(good.all_nonsingular);
    CHECK(good.singular_ks.empty());
    CHECK(good.scan_bound >= 9);
    const auto bad = dk_all_nonsingular(rp({4, 0, 0}));
    CHECK_FALSE(bad.all_nonsingular);
    REQUIRE(bad.singular_ks.size() == 1);
    CHECK(bad.singular_ks[0] == 1);
    CHECK(build_Dk(rp({4, 0, 0}), 1).mat.det().is_zero());
}

TEST_CASE("generation fixtures") {
    const auto g = generation_check(rp({0, 0}), unit_psi(2), 8);
    CHECK(g.generates);
    CHECK(g.matrix_route);
    CHECK(g.brute_route);
    CHECK_FALSE(g.first_failure_degree.has_value());
    const auto gb = generation_check(rp({-1, 0}), unit_psi(2), 8);
    CHECK_FALSE(gb.generates);
    CHECK_FALSE(gb.brute_route);
    REQUIRE(gb.first_failure_degree.has_value());
    CHECK(*gb.first_failure_degree == 1);
    // Vanishing top coefficient: psi is annihilated by xi^{n-1} and can
    // never reach the lowest degree.
    const auto gz = generation_check(rp({0, 0}), pv({1, 0}), 8);
    CHECK_FALSE(gz.generates);
    REQUIRE(gz.first_failure_degree.has_value());
    CHECK(*gz.first_failure_degree == -1);
}

TEST_CASE("generation with the distinguished vector matches good-set membership") {
    std::mt19937_64 rng(37);
    for (int n : {2, 3, 4}) {
        for (int rep = 0; rep < 8; ++rep) {
            const auto p = random_integer_params(rng, n, 5);
            const auto g = generation_check(p, unit_psi(n), 3L * n);
            CHECK(g.generates == in_F(p).in_F);
            CHECK(g.matrix_route == dk_all_nonsingular(p).all_nonsingular);
        }
    }
}
