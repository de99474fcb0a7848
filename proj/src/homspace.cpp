/// @file homspace.cpp
/// @brief Lowest-weight vectors and the explicit Delta -> NablaM matrices.

#include "cherednik/homspace.hpp"

#include <algorithm>

#include "cherednik/criteria.hpp"
#include "cherednik/errors.hpp"

namespace cherednik {

PsiVector unit_psi(int n) {
    if (n < 1) throw StructuralError("unit_psi: n must be at least 1");
    PsiVector t;
    t.t.assign(static_cast<size_t>(n), Rational(0));
    t.t.back() = Rational(1);
    return t;
}

ModVector<ExactMode> lift_psi(long i, int n) {
    if (n < 1) throw StructuralError("lift_psi: n must be at least 1");
    if (i < 0 || i > n - 1) throw PreconditionError("lift_psi requires 0 <= i <= n-1");
    const Rational coeff = Rational(1) / factorial(n - 1);
    return mod_term<ExactMode>(ModuleTag::nabla_m, BasisKey{i, n - 1 - i},
                               cyclo_from_rational(n, coeff));
}

ModVector<ExactMode> psi_m_vector(const PsiVector& t, int n) {
    if (t.t.size() != static_cast<size_t>(n)) {
        throw PreconditionError("coefficient vector t must have length n");
    }
    ModVector<ExactMode> out = mod_zero<ExactMode>(ModuleTag::nabla_m);
    for (long i = 0; i < n; ++i) {
        const auto& ti = t.t[static_cast<size_t>(i)];
        if (ti.is_zero()) continue;
        out = mod_add(out, mod_scale<ExactMode>(cyclo_from_rational(n, ti), lift_psi(i, n)));
    }
    return out;
}

bool verify_singular(const ModVector<ExactMode>& v, const RatParams& params) {
    if (v.tag != ModuleTag::nabla_m) {
        throw StructuralError("verify_singular expects a NablaM vector");
    }
    const int n = params.n;
    ModVector<ExactMode> w = v;
    for (int r = 0; r < n; ++r) w = act_nabla<ExactMode>(Gen::Xi, w, params);
    if (!mod_is_zero_embedded<ExactMode>(w, n)) return false;
    const auto sv = act_nabla<ExactMode>(Gen::S, v, params);
    return mod_equals_embedded<ExactMode>(sv, v, n);
}

long singular_space_dimension_at_zero(const RatParams& params) {
    const int n = params.n;
    const auto basis = graded_basis(ModuleTag::nabla_m, 0, n);
    const auto target = graded_basis(ModuleTag::nabla_m, -static_cast<long>(n), n);
    // Stack the coordinates of xi^n on top of the weight constraints
    // (rows selecting the components NOT fixed by s); the kernel of the
    // stack is the singular s-fixed subspace.
    Mat<Rational> stacked(target.size() + basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        ModVector<ExactMode> w =
            mod_term<ExactMode>(ModuleTag::nabla_m, basis[col], ExactMode::coeff_one(n));
        for (int r = 0; r < n; ++r) w = act_nabla<ExactMode>(Gen::Xi, w, params);
        const auto coords = mod_entry_coords<ExactMode>(w, target, n);
        for (size_t r = 0; r < coords.size(); ++r) stacked.at(r, col) = coords[r];
        const long wt = basis_weight(ModuleTag::nabla_m, basis[col]);
        if ((wt % n + n) % n != 0) stacked.at(target.size() + col, col) = Rational(1);
    }
    return static_cast<long>(basis.size()) - static_cast<long>(stacked.rank());
}

namespace detail {

PsiOrbitColumns::PsiOrbitColumns(const RatParams& params, const PsiVector& t)
    : params_(params),
      psi_(psi_m_vector(t, params.n)),
      cols_(static_cast<size_t>(params.n), mod_zero<ExactMode>(ModuleTag::nabla_m)),
      degree_(-static_cast<long>(params.n)) {}

void PsiOrbitColumns::advance_to(long k) {
    if (k != degree_ + 1) {
        throw InternalConsistencyError("psi-orbit degrees must be visited consecutively");
    }
    degree_ = k;
    const int n = params_.n;
    for (long j = std::max<long>(0, -k + 1); j < n; ++j) {
        cols_[static_cast<size_t>(j)] =
            act_nabla<ExactMode>(Gen::X, cols_[static_cast<size_t>(j)], params_);
    }
    if (k <= 0 && -k <= n - 1) {
        ModVector<ExactMode> v = psi_;
        for (long r = 0; r < -k; ++r) v = act_nabla<ExactMode>(Gen::Xi, v, params_);
        cols_[static_cast<size_t>(-k)] = v;
    }
}

const ModVector<ExactMode>& PsiOrbitColumns::column(long j) const {
    if (j < 0 || j >= params_.n || j < -degree_) {
        throw InternalConsistencyError("psi-orbit column not active at this degree");
    }
    return cols_[static_cast<size_t>(j)];
}

}  // namespace detail

HomReport delta_to_nabla_hom(const RatParams& params, const PsiVector& t, long K) {
    const int n = params.n;
    if (t.t.size() != static_cast<size_t>(n)) {
        throw PreconditionError("coefficient vector t must have length n");
    }
    if (t.t[static_cast<size_t>(n - 1)].is_zero()) {
        throw PreconditionError("the map requires t_{n-1} != 0");
    }
    if (K < 1 - static_cast<long>(n)) {
        throw PreconditionError("scan bound K must be at least 1-n");
    }
    HomReport rep;
    rep.k_min = 1 - static_cast<long>(n);
    rep.k_max = K;
    rep.iso = true;

    detail::PsiOrbitColumns cols(params, t);
    for (long k = rep.k_min; k <= K; ++k) {
        cols.advance_to(k);
        GradedMatrix<Rational> gm;
        gm.tag = ModuleTag::nabla_m;
        gm.src_degree = k;
        gm.dst_degree = k;
        gm.src_basis = graded_basis(ModuleTag::delta, k, n);
        gm.dst_basis = graded_basis(ModuleTag::nabla_m, k, n);
        gm.mat = Mat<Rational>(gm.dst_basis.size(), gm.src_basis.size());
        for (size_t col = 0; col < gm.src_basis.size(); ++col) {
            const auto coords =
                mod_entry_coords<ExactMode>(cols.column(gm.src_basis[col].j), gm.dst_basis, n);
            for (size_t r = 0; r < coords.size(); ++r) gm.mat.at(r, col) = coords[r];
        }
        const bool square = gm.mat.rows() == gm.mat.cols();
        const bool ok = square && !gm.mat.det().is_zero();
        if (!ok && !rep.first_defect_degree) {
            rep.first_defect_degree = k;
            rep.iso = false;
        }
        rep.matrices.push_back(std::move(gm));
    }

    // The columns above are exactly the spanning vectors of the generation
    // test, so the two verdicts must coincide on the shared window.
    const GenerationReport gen = generation_check(params, t, K);
    if (rep.iso != gen.brute_route) {
        throw InternalConsistencyError("hom matrices disagree with the spanning test");
    }
    if (gen.generates && !rep.iso) {
        throw InternalConsistencyError("generation criterion holds but the map is not iso");
    }
    return rep;
}

}  // namespace cherednik
