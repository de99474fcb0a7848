/// @file endo.cpp
/// @brief xi^n maps, their determinants, and the endomorphism-ring dimension.

#include "cherednik/endo.hpp"

#include <algorithm>
#include <set>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

/// Ascending basis {v_{kn+i, i} : i = 0..n-1} of the degree-kn piece.
std::vector<BasisKey> ascending_basis(long k, int n) {
    std::vector<BasisKey> out;
    for (long i = 0; i < n; ++i) out.push_back(BasisKey{k * n + i, i});
    return out;
}

}  // namespace

GradedMatrix<Rational> xi_n_matrix(const RatParams& params, long k) {
    if (k < 1) throw PreconditionError("the xi^n map needs k >= 1");
    const int n = params.n;
    GradedMatrix<Rational> out;
    out.tag = ModuleTag::delta;
    out.src_degree = k * n;
    out.dst_degree = (k - 1) * n;
    out.src_basis = ascending_basis(k, n);
    out.dst_basis = ascending_basis(k - 1, n);
    out.mat = Mat<Rational>(static_cast<size_t>(n), static_cast<size_t>(n));
    for (size_t col = 0; col < out.src_basis.size(); ++col) {
        ModVector<ExactMode> v =
            mod_term<ExactMode>(ModuleTag::delta, out.src_basis[col], ExactMode::coeff_one(n));
        for (int r = 0; r < n; ++r) v = act_delta<ExactMode>(Gen::Xi, v, params);
        const auto coords = mod_entry_coords<ExactMode>(v, out.dst_basis, n);
        for (size_t row = 0; row < coords.size(); ++row) out.mat.at(row, col) = coords[row];
    }
    for (size_t r = 0; r + 1 < out.mat.rows(); ++r) {
        for (size_t c = r + 1; c < out.mat.cols(); ++c) {
            if (!out.mat.at(r, c).is_zero()) {
                throw InternalConsistencyError(
                    "xi^n map left the expected column span (not lower-triangular)");
            }
        }
    }
    return out;
}

Rational det_formula(const RatParams& params, long k) {
    if (k < 1) throw PreconditionError("the xi^n determinant needs k >= 1");
    const int n = params.n;
    Rational out(1);
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            out *= Rational(k * n + (i - j)) -
                   (params.c[static_cast<size_t>(j - 1)] - params.c[static_cast<size_t>(i - 1)]);
        }
    }
    return out;
}

std::vector<long> critical_ks(const RatParams& params) {
    const int n = params.n;
    std::set<long> ks;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const Rational kval = (Rational(j - i) + params.c[static_cast<size_t>(j - 1)] -
                                   params.c[static_cast<size_t>(i - 1)]) /
                                  Rational(n);
            if (kval.is_integer() && kval.sign() > 0) ks.insert(kval.to_long());
        }
    }
    return {ks.begin(), ks.end()};
}

EndReport end_dim(const RatParams& params) {
    const int n = params.n;
    EndReport rep;
    const auto criticals = critical_ks(params);
    long total_nullity = 0;
    for (long k : criticals) {
        const auto gm = xi_n_matrix(params, k);
        const long nullity = static_cast<long>(n) - static_cast<long>(gm.mat.rank());
        if (nullity <= 0) {
            throw InternalConsistencyError("critical degree has a nonsingular xi^n map");
        }
        rep.critical_ks.emplace_back(k, nullity);
        total_nullity += nullity;
    }
    rep.dim_end = n + total_nullity;

    const long window = std::max<long>(3, criticals.empty() ? 0 : criticals.back());
    for (long k = 1; k <= window; ++k) {
        const Rational closed = det_formula(params, k);
        const Rational direct = xi_n_matrix(params, k).mat.det();
        if (!(closed == direct)) {
            throw InternalConsistencyError(
                "closed-form xi^n determinant disagrees with the matrix determinant");
        }
        const bool critical = std::binary_search(criticals.begin(), criticals.end(), k);
        if (closed.is_zero() != critical) {
            throw InternalConsistencyError(
                "critical-degree set disagrees with vanishing determinants");
        }
        rep.det_values.emplace(k, closed);
    }
    return rep;
}

long end_dim_scan_oracle(const RatParams& params, long K) {
    const int n = params.n;
    long total = 0;
    for (long k = 1; k <= K; ++k) {
        // Every basis vector of degree kn must be s-fixed (weight kn = 0
        // mod n); with that confirmed, the s-condition drops out and the
        // singular subspace is just the kernel of the xi^n map.
        for (const auto& key : ascending_basis(k, n)) {
            const auto v = mod_term<ExactMode>(ModuleTag::delta, key, ExactMode::coeff_one(n));
            if (!mod_equals_strict(act_delta<ExactMode>(Gen::S, v, params), v)) {
                throw InternalConsistencyError("degree-kn basis vector is not s-fixed");
            }
        }
        const auto gm = xi_n_matrix(params, k);
        total += static_cast<long>(n) - static_cast<long>(gm.mat.rank());
    }
    return total;
}

}  // namespace cherednik
