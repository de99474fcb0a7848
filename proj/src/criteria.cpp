/// @file criteria.cpp
/// @brief Parameter-set criteria and the D_k/F_k generation machinery.

#include "cherednik/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

/// Singular degrees k >= 0 of the D_k family, read off the failing pairs:
/// a pair (i, j, m) with m <= -1 makes D_k singular at k = i - 1 - n(m+1).
std::vector<long> singular_degrees_of(const std::vector<FailingPair>& pairs, int n) {
    std::set<long> ks;
    for (const auto& p : pairs) {
        if (p.m <= -1) ks.insert(p.i - 1 - static_cast<long>(n) * (p.m + 1));
    }
    return {ks.begin(), ks.end()};
}

}  // namespace

CriterionReport in_F(const RatParams& params) {
    const int n = params.n;
    CriterionReport rep;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const Rational diff =
                params.c[static_cast<size_t>(i - 1)] - params.c[static_cast<size_t>(j - 1)] -
                Rational(j - i);
            if (diff.is_zero()) continue;
            const Rational m = diff / Rational(n);
            if (m.is_integer()) rep.failing_pairs.push_back(FailingPair{i, j, m.to_long()});
        }
    }
    rep.in_F = rep.failing_pairs.empty();
    rep.semisimple = is_semisimple(params);
    rep.singular_degrees = singular_degrees_of(rep.failing_pairs, n);
    return rep;
}

CriterionReport in_F(const CxParams& params, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("float congruence scan requires tol > 0");
    const int n = params.n;
    CriterionReport rep;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const ComplexF diff = params.c[static_cast<size_t>(i - 1)] -
                                  params.c[static_cast<size_t>(j - 1)] -
                                  static_cast<double>(j - i);
            const long bound =
                static_cast<long>((std::abs(params.c[static_cast<size_t>(i - 1)] -
                                            params.c[static_cast<size_t>(j - 1)]) +
                                   n) /
                                  n) +
                1;
            for (long m = -bound; m <= bound; ++m) {
                if (m == 0) continue;
                if (std::abs(diff - static_cast<double>(n) * static_cast<double>(m)) < tol) {
                    rep.failing_pairs.push_back(FailingPair{i, j, m});
                    break;
                }
            }
        }
    }
    rep.in_F = rep.failing_pairs.empty();
    rep.semisimple = is_semisimple(params, tol);
    rep.singular_degrees = singular_degrees_of(rep.failing_pairs, n);
    return rep;
}

bool is_semisimple(const RatParams& params) {
    const int n = params.n;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            if (i == j) continue;
            const Rational diff =
                params.c[static_cast<size_t>(i - 1)] - params.c[static_cast<size_t>(j - 1)] -
                Rational(j - i);
            if ((diff / Rational(n)).is_integer()) return false;
        }
    }
    return true;
}

bool is_semisimple(const CxParams& params, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("float congruence scan requires tol > 0");
    const int n = params.n;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            if (i == j) continue;
            const ComplexF diff = params.c[static_cast<size_t>(i - 1)] -
                                  params.c[static_cast<size_t>(j - 1)] -
                                  static_cast<double>(j - i);
            const long bound =
                static_cast<long>((std::abs(params.c[static_cast<size_t>(i - 1)] -
                                            params.c[static_cast<size_t>(j - 1)]) +
                                   n) /
                                  n) +
                1;
            for (long m = -bound; m <= bound; ++m) {
                if (std::abs(diff - static_cast<double>(n) * static_cast<double>(m)) < tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

RatParams good_translate(const RatParams& params) {
    const int n = params.n;
    // Equivalence classes of {1..n}: i ~ j iff c_i - c_j - (j - i) in nZ.
    std::vector<long> rep_of(static_cast<size_t>(n) + 1);
    for (long i = 1; i <= n; ++i) rep_of[static_cast<size_t>(i)] = i;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const Rational diff =
                params.c[static_cast<size_t>(i - 1)] - params.c[static_cast<size_t>(j - 1)] -
                Rational(j - i);
            if (!(diff / Rational(n)).is_integer()) continue;
            const long a = std::max(rep_of[static_cast<size_t>(i)], rep_of[static_cast<size_t>(j)]);
            const long b = std::min(rep_of[static_cast<size_t>(i)], rep_of[static_cast<size_t>(j)]);
            for (long l = 1; l <= n; ++l) {
                if (rep_of[static_cast<size_t>(l)] == b) rep_of[static_cast<size_t>(l)] = a;
            }
        }
    }
    // The class containing n uses n itself; all other classes use their
    // largest member, which the merge above already selects.
    std::vector<Rational> cp(static_cast<size_t>(n));
    for (long j = 1; j <= n; ++j) {
        const long r = rep_of[static_cast<size_t>(j)];
        cp[static_cast<size_t>(j - 1)] =
            params.c[static_cast<size_t>(r - 1)] + Rational(r - j);
    }
    RatParams out = make_params<Rational>(n, cp);
    const auto verdict = in_F(out);
    if (!verdict.in_F) {
        throw InternalConsistencyError("translated parameters fell outside the good set");
    }
    for (long j = 1; j <= n; ++j) {
        const Rational diff =
            params.c[static_cast<size_t>(j - 1)] - out.c[static_cast<size_t>(j - 1)];
        if (!(diff / Rational(n)).is_integer()) {
            throw InternalConsistencyError("translated parameters are not congruent mod n");
        }
    }
    return out;
}

RatParams good_translate(const CxParams&) {
    throw ModeError("the translate into the good set requires exact rational parameters");
}

GradedMatrix<Rational> build_Dk(const RatParams& params, long k) {
    if (k < 0) throw PreconditionError("D_k is defined for k >= 0");
    const int n = params.n;
    GradedMatrix<Rational> out;
    out.tag = ModuleTag::nabla_m;
    out.src_degree = k;
    out.dst_degree = k + 1;
    out.src_basis = graded_basis(ModuleTag::nabla_m, k, n);
    out.dst_basis = graded_basis(ModuleTag::nabla_m, k + 1, n);
    out.mat = Mat<Rational>(static_cast<size_t>(n), static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
        out.mat.at(static_cast<size_t>(j), static_cast<size_t>(j)) =
            Rational(n + k - j) + params.c_at(k + 1) - params.c_at(j + 1);
        if (j + 1 < n) out.mat.at(static_cast<size_t>(j + 1), static_cast<size_t>(j)) = Rational(1);
    }
    return out;
}

GradedMatrix<Rational> build_Dk_composed(const RatParams& params, long k) {
    if (k < 0) throw PreconditionError("D_k is defined for k >= 0");
    return generator_matrix<ExactMode>(ModuleTag::nabla_m, Gen::X, params, k);
}

GradedMatrix<Rational> build_Fk(const RatParams& params, const PsiVector& t, long k) {
    const int n = params.n;
    if (k < 1 - static_cast<long>(n) || k >= 0) {
        throw PreconditionError("F_k is defined for 1-n <= k < 0");
    }
    if (t.t.size() != static_cast<size_t>(n)) {
        throw PreconditionError("coefficient vector t must have length n");
    }
    if (t.t[static_cast<size_t>(n - 1)].is_zero()) {
        throw PreconditionError("F_k requires t_{n-1} != 0");
    }
    const long dim = n + k;
    GradedMatrix<Rational> out;
    out.tag = ModuleTag::nabla_m;
    out.src_degree = k;
    out.dst_degree = k + 1;
    out.src_basis = graded_basis(ModuleTag::nabla_m, k, n);
    {
        auto dst = graded_basis(ModuleTag::nabla_m, k + 1, n);
        out.dst_basis.assign(dst.begin() + 1, dst.end());
    }
    out.mat = Mat<Rational>(static_cast<size_t>(dim), static_cast<size_t>(dim));
    const Rational lead = Rational(n + k) + params.c_at(k + 1) - params.c[0];
    for (long r = 1; r <= dim; ++r) {
        Rational entry = (r == 1) ? Rational(1) : Rational(0);
        entry -= lead * t.t[static_cast<size_t>(n - 1 - r)] / t.t[static_cast<size_t>(n - 1)];
        out.mat.at(static_cast<size_t>(r - 1), 0) = entry;
    }
    for (long j = 2; j <= dim; ++j) {
        out.mat.at(static_cast<size_t>(j - 2), static_cast<size_t>(j - 1)) =
            Rational(n + k + 1 - j) + params.c_at(k + 1) - params.c[static_cast<size_t>(j - 1)];
        out.mat.at(static_cast<size_t>(j - 1), static_cast<size_t>(j - 1)) = Rational(1);
    }
    return out;
}

GradedMatrix<Rational> build_Fk_composed(const RatParams& params, const PsiVector& t, long k) {
    const int n = params.n;
    if (k < 1 - static_cast<long>(n) || k >= 0) {
        throw PreconditionError("F_k is defined for 1-n <= k < 0");
    }
    if (t.t.size() != static_cast<size_t>(n)) {
        throw PreconditionError("coefficient vector t must have length n");
    }
    if (t.t[static_cast<size_t>(n - 1)].is_zero()) {
        throw PreconditionError("F_k requires t_{n-1} != 0");
    }
    // The projection line in degree k+1 is spanned by xi^{-(k+1)} psi.
    ModVector<ExactMode> p = psi_m_vector(t, n);
    for (long r = 0; r < -(k + 1); ++r) p = act_nabla<ExactMode>(Gen::Xi, p, params);
    const auto dst_full = graded_basis(ModuleTag::nabla_m, k + 1, n);
    const auto p_coords = mod_entry_coords<ExactMode>(p, dst_full, n);
    if (p_coords[0].is_zero()) {
        throw InternalConsistencyError("projection line has zero leading coordinate");
    }
    GradedMatrix<Rational> out;
    out.tag = ModuleTag::nabla_m;
    out.src_degree = k;
    out.dst_degree = k + 1;
    out.src_basis = graded_basis(ModuleTag::nabla_m, k, n);
    out.dst_basis.assign(dst_full.begin() + 1, dst_full.end());
    const size_t dim = out.src_basis.size();
    out.mat = Mat<Rational>(dim, dim);
    for (size_t col = 0; col < dim; ++col) {
        const auto u =
            mod_term<ExactMode>(ModuleTag::nabla_m, out.src_basis[col], ExactMode::coeff_one(n));
        const auto w = act_nabla<ExactMode>(Gen::X, u, params);
        const auto w_coords = mod_entry_coords<ExactMode>(w, dst_full, n);
        const Rational factor = w_coords[0] / p_coords[0];
        for (size_t r = 1; r < dst_full.size(); ++r) {
            out.mat.at(r - 1, col) = w_coords[r] - factor * p_coords[r];
        }
    }
    return out;
}

DkReport dk_all_nonsingular(const RatParams& params, long scan_bound) {
    const int n = params.n;
    DkReport rep;
    rep.scan_bound = scan_bound >= 0 ? scan_bound : 3L * n;
    rep.singular_ks = in_F(params).singular_degrees;
    rep.all_nonsingular = rep.singular_ks.empty();
    for (long k = 0; k <= rep.scan_bound; ++k) {
        const bool scan_singular = build_Dk(params, k).mat.det().is_zero();
        const bool criterion_singular =
            std::binary_search(rep.singular_ks.begin(), rep.singular_ks.end(), k);
        if (scan_singular != criterion_singular) {
            throw InternalConsistencyError(
                "finite nonsingularity criterion disagrees with determinant scan at degree " +
                std::to_string(k));
        }
    }
    return rep;
}

GenerationReport generation_check(const RatParams& params, const PsiVector& t, long K) {
    const int n = params.n;
    if (t.t.size() != static_cast<size_t>(n)) {
        throw PreconditionError("coefficient vector t must have length n");
    }
    if (K < 1 - static_cast<long>(n)) {
        throw PreconditionError("scan bound K must be at least 1-n");
    }
    GenerationReport rep;
    rep.K = K;

    if (t.t[static_cast<size_t>(n - 1)].is_zero()) {
        // The lowest degree 1-n is already deficient: its only candidate
        // spanning vector xi^{n-1} psi carries the coefficient t_{n-1}.
        ModVector<ExactMode> v = psi_m_vector(t, n);
        for (int r = 0; r < n - 1; ++r) v = act_nabla<ExactMode>(Gen::Xi, v, params);
        if (!v.entries.empty()) {
            throw InternalConsistencyError(
                "xi^{n-1} psi should vanish when t_{n-1} = 0");
        }
        rep.generates = false;
        rep.matrix_route = false;
        rep.brute_route = false;
        rep.first_failure_degree = 1 - static_cast<long>(n);
        return rep;
    }

    // Matrix route: every F_k (1-n <= k < 0) and every D_k (k >= 0, via the
    // finite criterion cross-checked by a scan) must be nonsingular.
    std::set<long> singular_steps;
    for (long d = 1 - static_cast<long>(n); d <= -1; ++d) {
        if (build_Fk(params, t, d).mat.det().is_zero()) singular_steps.insert(d);
    }
    const DkReport dk = dk_all_nonsingular(params, std::max(3L * n, K));
    for (long d : dk.singular_ks) singular_steps.insert(d);
    rep.matrix_route = singular_steps.empty();

    // Brute route: per-degree rank of { x^{k+j} xi^j psi }.  Once a step
    // matrix is singular the span stays deficient in every later degree, so
    // per-degree success must equal "no singular step strictly below".
    detail::PsiOrbitColumns cols(params, t);
    bool steps_clean = true;
    for (long k = 1 - static_cast<long>(n); k <= K; ++k) {
        cols.advance_to(k);
        const auto basis = graded_basis(ModuleTag::nabla_m, k, n);
        const long j_min = std::max<long>(0, -k);
        Mat<Rational> span(basis.size(), static_cast<size_t>(n - j_min));
        for (long j = j_min; j < n; ++j) {
            const auto coords = mod_entry_coords<ExactMode>(cols.column(j), basis, n);
            for (size_t r = 0; r < coords.size(); ++r) {
                span.at(r, static_cast<size_t>(j - j_min)) = coords[r];
            }
        }
        const bool brute_ok = span.rank() == static_cast<size_t>(basis.size());
        if (brute_ok != steps_clean) {
            throw InternalConsistencyError(
                "matrix criterion disagrees with the spanning test at degree " +
                std::to_string(k));
        }
        if (!brute_ok && !rep.first_failure_degree) rep.first_failure_degree = k;
        if (singular_steps.count(k) != 0) steps_clean = false;
    }
    rep.brute_route = !rep.first_failure_degree.has_value();
    rep.generates = rep.matrix_route;
    return rep;
}

}  // namespace cherednik
