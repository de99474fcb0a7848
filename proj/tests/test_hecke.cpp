/// @file test_hecke.cpp
/// @brief Monodromy matrices, the cyclotomic polynomial they satisfy, the
///        commutation invariants, and the matrix exponential backing them.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cherednik/criteria.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/matrix.hpp"
#include "test_util.hpp"

using namespace cherednik;
using testutil::cxp;

namespace {

const double kPi = std::numbers::pi_v<double>;

CxParams cx2(double a_re, double a_im = 0.0) {
    return cxp({ComplexF(a_re, a_im), ComplexF(0.0, 0.0)});
}

}  // namespace

TEST_CASE("root and polynomial fixtures") {
    auto poly = hecke_poly(cx2(0.0));
    REQUIRE(poly.roots.size() == 2);
    CHECK(std::abs(poly.roots[0] - ComplexF(-1, 0)) < 1e-12);
    CHECK(std::abs(poly.roots[1] - ComplexF(1, 0)) < 1e-12);
    // T^2 - 1, coefficients ascending.
    REQUIRE(poly.coeffs.size() == 3);
    CHECK(std::abs(poly.coeffs[0] - ComplexF(-1, 0)) < 1e-12);
    CHECK(std::abs(poly.coeffs[1]) < 1e-12);
    CHECK(std::abs(poly.coeffs[2] - ComplexF(1, 0)) < 1e-12);

    poly = hecke_poly(cx2(0.5));
    CHECK(std::abs(poly.roots[0] - ComplexF(0, 1)) < 1e-12);
    CHECK(std::abs(poly.roots[1] - ComplexF(1, 0)) < 1e-12);

    poly = hecke_poly(cxp({ComplexF(0, 0)}));
    REQUIRE(poly.roots.size() == 1);
    CHECK(std::abs(poly.roots[0] - ComplexF(1, 0)) < 1e-12);

    // The last root is always 1 because the last parameter is pinned to 0.
    poly = hecke_poly(cxp({ComplexF(0.3, 0.7), ComplexF(-0.2, 0.1), ComplexF(0, 0)}));
    CHECK(std::abs(poly.roots[2] - ComplexF(1, 0)) < 1e-12);
    // Monic of degree n.
    CHECK(std::abs(poly.coeffs[3] - ComplexF(1, 0)) < 1e-12);
}

TEST_CASE("monodromy matrix fixtures at degree zero") {
    auto m = eta_matrix(cx2(0.0), 0);
    REQUIRE(m.rows() == 2);
    CHECK(std::abs(m.at(0, 0) - ComplexF(-1, 0)) < 1e-12);
    CHECK(std::abs(m.at(0, 1) - ComplexF(-2, 0)) < 1e-12);
    CHECK(std::abs(m.at(1, 0)) < 1e-12);
    CHECK(std::abs(m.at(1, 1) - ComplexF(1, 0)) < 1e-12);
    // Unipotent case: equal diagonal, off-diagonal pi*i.
    m = eta_matrix(cx2(1.0), 0);
    CHECK(std::abs(m.at(0, 0) - ComplexF(1, 0)) < 1e-12);
    CHECK(std::abs(m.at(0, 1) - ComplexF(0, kPi)) < 1e-12);
    CHECK(std::abs(m.at(1, 1) - ComplexF(1, 0)) < 1e-12);
}

TEST_CASE("negative degrees use the leading roots") {
    const auto p = cx2(0.5);
    const auto poly = hecke_poly(p);
    const auto m = eta_matrix(p, -1);
    REQUIRE(m.rows() == 1);
    CHECK(std::abs(m.at(0, 0) - poly.roots[0]) < 1e-12);
    CHECK_THROWS_AS(eta_matrix(p, -2), PreconditionError);
}

TEST_CASE("degree window structure") {
    const auto p = cxp({ComplexF(0.25, 0), ComplexF(-0.5, 0), ComplexF(0, 0)});
    const auto etas = eta_matrices(p, 5);
    CHECK(etas.k_min == -2);
    CHECK(etas.k_max == 5);
    REQUIRE(etas.mats.size() == 8);
    for (long k = etas.k_min; k <= etas.k_max; ++k) {
        const auto& m = etas.mats[static_cast<size_t>(k - etas.k_min)];
        CHECK(m.rows() == static_cast<size_t>(k >= 0 ? 3 : 3 + k));
    }
}

TEST_CASE("annihilation and commutation residuals") {
    for (const auto& p :
         {cx2(0.0), cx2(1.0), cx2(-1.0), cx2(0.5), cx2(0.3, 0.7),
          cxp({ComplexF(1, 0), ComplexF(2, 0), ComplexF(0, 0)}),
          cxp({ComplexF(0.25, -0.4), ComplexF(1.5, 0.2), ComplexF(0, 0)})}) {
        const long K = 3L * p.n;
        const auto ann = check_annihilation(p, K, 1e-8);
        CHECK(ann.pass);
        CHECK(ann.max_residual < 1e-8);
        CHECK(ann.tol == 1e-8);
        const auto comm = check_commutation(p, K, 1e-8);
        CHECK(comm.pass);
        CHECK(comm.max_residual < 1e-8);
    }
    // The tolerance gates the verdict.
    const auto tight = check_annihilation(cx2(0.3), 6, 1e-18);
    CHECK_FALSE(tight.pass);
    CHECK(tight.max_residual > 1e-18);
}

TEST_CASE("a perturbed matrix fails annihilation") {
    const auto p = cx2(0.0);
    const auto poly = hecke_poly(p);
    auto m = eta_matrix(p, 0);
    // Bump one diagonal entry; a uniform shift would commute away, a single
    // entry cannot.
    m.at(0, 0) += ComplexF(1e-3, 0);
    auto prod = Mat<ComplexF>::identity(m.rows());
    for (const auto& r : poly.roots) {
        auto shifted = m;
        for (size_t d = 0; d < m.rows(); ++d) shifted.at(d, d) -= r;
        prod = prod * shifted;
    }
    CHECK(prod.norm_inf() > 1e-4);
}

TEST_CASE("eigenvalues on the degree-zero standard piece") {
    const auto p = cx2(0.5);
    const auto poly = hecke_poly(p);
    CHECK(std::abs(eigenvalue_on_standard(p, 1) - ComplexF(0, 1)) < 1e-10);
    CHECK(std::abs(eigenvalue_on_standard(p, 2) - ComplexF(1, 0)) < 1e-10);
    CHECK(std::abs(eigenvalue_on_standard(p, 1) - poly.roots[0]) < 1e-10);
    const auto p3 =
        cxp({ComplexF(1.0 / 3, 0), ComplexF(2.0 / 3, 0), ComplexF(0, 0)});
    const auto poly3 = hecke_poly(p3);
    for (long j = 1; j <= 3; ++j) {
        CHECK(std::abs(eigenvalue_on_standard(p3, j) -
                       poly3.roots[static_cast<size_t>(j - 1)]) < 1e-10);
    }
    CHECK_THROWS_AS(eigenvalue_on_standard(p, 0), PreconditionError);
    CHECK_THROWS_AS(eigenvalue_on_standard(p, 3), PreconditionError);
    // Non-semisimple parameters are refused: the eigenvector construction
    // needs distinct degree-zero grading eigenvalues.
    CHECK_THROWS_AS(eigenvalue_on_standard(cx2(1.0), 1), PreconditionError);
}

TEST_CASE("matrix exponential against divided differences") {
    // Diagonal.
    Mat<ComplexF> d(2, 2);
    d.at(0, 0) = ComplexF(0.3, 0.2);
    d.at(1, 1) = ComplexF(-0.6, 0);
    auto e = expm(d);
    CHECK(std::abs(e.at(0, 0) - std::exp(ComplexF(0.3, 0.2))) < 1e-13);
    CHECK(std::abs(e.at(1, 1) - std::exp(ComplexF(-0.6, 0))) < 1e-13);
    CHECK(std::abs(e.at(0, 1)) < 1e-13);

    // Nilpotent.
    Mat<ComplexF> nil(2, 2);
    nil.at(0, 1) = ComplexF(1, 0);
    e = expm(nil);
    CHECK(std::abs(e.at(0, 0) - ComplexF(1, 0)) < 1e-13);
    CHECK(std::abs(e.at(0, 1) - ComplexF(1, 0)) < 1e-13);
    CHECK(std::abs(e.at(1, 0)) < 1e-13);

    // Upper bidiagonal: the (0,1) entry of exp is the divided difference
    // (e^a - e^b) / (a - b).
    const ComplexF a(0.4, 1.1), b(-0.9, 0.3);
    Mat<ComplexF> bi(2, 2);
    bi.at(0, 0) = a;
    bi.at(0, 1) = ComplexF(1, 0);
    bi.at(1, 1) = b;
    e = expm(bi);
    const ComplexF dd = (std::exp(a) - std::exp(b)) / (a - b);
    CHECK(std::abs(e.at(0, 0) - std::exp(a)) < 1e-12);
    CHECK(std::abs(e.at(0, 1) - dd) < 1e-12);
    CHECK(std::abs(e.at(1, 1) - std::exp(b)) < 1e-12);

    // Second divided difference on a 3x3 ladder.
    const ComplexF c3(1.7, -0.8);
    Mat<ComplexF> tri(3, 3);
    tri.at(0, 0) = a;
    tri.at(1, 1) = b;
    tri.at(2, 2) = c3;
    tri.at(0, 1) = tri.at(1, 2) = ComplexF(1, 0);
    e = expm(tri);
    const ComplexF dd_ab = (std::exp(a) - std::exp(b)) / (a - b);
    const ComplexF dd_bc = (std::exp(b) - std::exp(c3)) / (b - c3);
    const ComplexF dd2 = (dd_ab - dd_bc) / (a - c3);
    CHECK(std::abs(e.at(0, 2) - dd2) < 1e-12);

    // Norm above the Pade threshold exercises scaling and squaring.
    Mat<ComplexF> big(2, 2);
    big.at(0, 0) = ComplexF(9.0, 0);
    big.at(0, 1) = ComplexF(1, 0);
    big.at(1, 1) = ComplexF(-14.0, 0);
    e = expm(big);
    const ComplexF big_dd =
        (std::exp(ComplexF(9.0, 0)) - std::exp(ComplexF(-14.0, 0))) / ComplexF(23.0, 0);
    CHECK(std::abs(e.at(0, 0) - std::exp(ComplexF(9.0, 0))) <
          1e-12 * std::abs(std::exp(ComplexF(9.0, 0))));
    CHECK(std::abs(e.at(0, 1) - big_dd) < 1e-12 * std::abs(big_dd));
}

TEST_CASE("residual checks also pass far from the good set") {
    // Monodromy invariants do not require good parameters.
    const auto p = cx2(-1.0);
    CHECK(check_annihilation(p, 6, 1e-8).pass);
    CHECK(check_commutation(p, 6, 1e-8).pass);
}
