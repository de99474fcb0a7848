/// @file hecke.cpp
/// @brief eta matrices, cyclotomic annihilation, commutation, eigenvalues.

#include "cherednik/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cherednik/criteria.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/modules.hpp"

namespace cherednik {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexF root_of(const CxParams& params, long j) {
    const double theta = kTwoPi / params.n;
    return std::exp(ComplexF(0.0, -theta) *
                    (ComplexF(static_cast<double>(j), 0.0) + params.c[static_cast<size_t>(j - 1)]));
}

}  // namespace

HeckePoly hecke_poly(const CxParams& params) {
    const int n = params.n;
    HeckePoly out;
    for (long j = 1; j <= n; ++j) out.roots.push_back(root_of(params, j));
    out.coeffs.assign(1, ComplexF(1.0, 0.0));
    for (const ComplexF& r : out.roots) {
        std::vector<ComplexF> next(out.coeffs.size() + 1, ComplexF(0.0, 0.0));
        for (size_t m = 0; m < out.coeffs.size(); ++m) {
            next[m + 1] += out.coeffs[m];
            next[m] -= r * out.coeffs[m];
        }
        out.coeffs = std::move(next);
    }
    return out;
}

Mat<ComplexF> eta_matrix(const CxParams& params, long k) {
    const int n = params.n;
    if (k < 1 - static_cast<long>(n)) {
        throw PreconditionError("eta is defined on degrees k >= 1-n");
    }
    const auto eu = eu_matrix<ComplexF>(params, k);
    const ComplexF scale(0.0, kTwoPi / n);
    const Mat<ComplexF> e = expm(scale * eu.mat);
    const ComplexF qmk = std::polar(1.0, -kTwoPi * static_cast<double>(k) / n);
    return qmk * e;
}

EtaMatrices eta_matrices(const CxParams& params, long K) {
    EtaMatrices out;
    out.k_min = 1 - static_cast<long>(params.n);
    out.k_max = K;
    if (K < out.k_min) throw PreconditionError("degree bound K must be at least 1-n");
    for (long k = out.k_min; k <= K; ++k) out.mats.push_back(eta_matrix(params, k));
    return out;
}

ResidualCheck check_annihilation(const CxParams& params, long K, double tol) {
    const auto poly = hecke_poly(params);
    const auto etas = eta_matrices(params, K);
    ResidualCheck out;
    out.tol = tol;
    for (const auto& eta : etas.mats) {
        const size_t d = eta.rows();
        Mat<ComplexF> prod = Mat<ComplexF>::identity(d);
        for (const ComplexF& r : poly.roots) {
            prod = prod * (eta - r * Mat<ComplexF>::identity(d));
        }
        out.max_residual = std::max(out.max_residual, prod.norm_inf());
    }
    out.pass = out.max_residual < tol;
    return out;
}

ResidualCheck check_commutation(const CxParams& params, long K, double tol) {
    const int n = params.n;
    const long k_min = 1 - static_cast<long>(n);
    const auto etas = eta_matrices(params, K);
    const auto eta_at = [&](long k) -> const Mat<ComplexF>& {
        return etas.mats[static_cast<size_t>(k - etas.k_min)];
    };
    ResidualCheck out;
    out.tol = tol;
    for (long k = k_min; k <= K - 1; ++k) {
        const auto xk = generator_matrix<FloatMode>(ModuleTag::delta, Gen::X, params, k).mat;
        out.max_residual =
            std::max(out.max_residual, (eta_at(k + 1) * xk - xk * eta_at(k)).norm_inf());
        const auto sk = generator_matrix<FloatMode>(ModuleTag::delta, Gen::S, params, k).mat;
        out.max_residual =
            std::max(out.max_residual, (eta_at(k) * sk - sk * eta_at(k)).norm_inf());
        if (k - 1 >= k_min) {
            const auto xik =
                generator_matrix<FloatMode>(ModuleTag::delta, Gen::Xi, params, k).mat;
            out.max_residual =
                std::max(out.max_residual, (eta_at(k - 1) * xik - xik * eta_at(k)).norm_inf());
        }
    }
    out.pass = out.max_residual < tol;
    return out;
}

ComplexF eigenvalue_on_standard(const CxParams& params, long j) {
    const int n = params.n;
    if (j < 1 || j > n) throw PreconditionError("the label j must satisfy 1 <= j <= n");
    if (!is_semisimple(params, 1e-8)) {
        throw PreconditionError(
            "eigenvalue extraction needs semisimple parameters (distinct eu eigenvalues)");
    }
    const auto eta0 = eta_matrix(params, 0);
    // eu eigenvalues at degree 0, in the frozen basis order.
    std::vector<ComplexF> mu(static_cast<size_t>(n));
    for (long l = 1; l <= n; ++l) {
        mu[static_cast<size_t>(l - 1)] =
            ComplexF(static_cast<double>(n - l), 0.0) - params.c[static_cast<size_t>(l - 1)];
    }
    // The eu matrix is upper bidiagonal, so the eigenvector for mu_j is
    // supported on the first j coordinates and found by back-substitution.
    std::vector<ComplexF> v(static_cast<size_t>(n), ComplexF(0.0, 0.0));
    v[static_cast<size_t>(j - 1)] = ComplexF(1.0, 0.0);
    for (long l = j - 1; l >= 1; --l) {
        v[static_cast<size_t>(l - 1)] =
            v[static_cast<size_t>(l)] /
            (mu[static_cast<size_t>(j - 1)] - mu[static_cast<size_t>(l - 1)]);
    }
    std::vector<ComplexF> w(static_cast<size_t>(n), ComplexF(0.0, 0.0));
    for (size_t r = 0; r < static_cast<size_t>(n); ++r) {
        for (size_t c = 0; c < static_cast<size_t>(n); ++c) w[r] += eta0.at(r, c) * v[c];
    }
    const ComplexF lambda = w[static_cast<size_t>(j - 1)];
    double scale = 1.0;
    double residual = 0.0;
    for (size_t r = 0; r < static_cast<size_t>(n); ++r) {
        scale = std::max(scale, std::abs(v[r]));
        residual = std::max(residual, std::abs(w[r] - lambda * v[r]));
    }
    if (residual > 1e-8 * scale) {
        throw NumericError("eigenvector residual too large; eigenvalues nearly collide");
    }
    return lambda;
}

}  // namespace cherednik
