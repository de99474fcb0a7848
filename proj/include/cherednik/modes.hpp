/// @file modes.hpp
/// @brief Arithmetic-mode traits shared by the rewrite engine and modules.
///
/// Generic algebra/module code is parameterized by a mode type:
///   - ExactMode: rational parameters, cyclotomic group-ring coefficients,
///     rational matrix entries; every comparison is exact.
///   - FloatMode: complex-double everywhere; "embedded" comparisons use a
///     tolerance, strict-zero tests prune only exact 0 so nothing small is
///     silently dropped.
/// The Coeff type carries the scalars multiplying basis monomials/vectors,
/// Param the deformation parameters c_i, and Entry the matrix entries.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "cherednik/errors.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

/// Exact arithmetic: Q parameters, Q[z]/(z^n - 1) coefficients, Q entries.
struct ExactMode {
    using Param = Rational;
    using Coeff = CycloElem;
    using Entry = Rational;
    static constexpr bool is_exact = true;

    static Coeff coeff_zero(int n) { return cyclo_zero(n); }
    static Coeff coeff_one(int n) { return cyclo_one(n); }
    static Coeff zeta_pow(int n, long k) { return cyclo_zeta_pow(n, k); }
    static Coeff coeff_from_param(int n, const Param& p) { return cyclo_from_rational(n, p); }

    static Coeff add(const Coeff& a, const Coeff& b) { return cyclo_add(a, b); }
    static Coeff sub(const Coeff& a, const Coeff& b) { return cyclo_sub(a, b); }
    static Coeff mul(const Coeff& a, const Coeff& b) { return cyclo_mul(a, b); }
    static Coeff neg(const Coeff& a) { return cyclo_neg(a); }
    static Coeff scale(const Param& r, const Coeff& a) { return cyclo_scale(r, a); }

    static bool is_zero_strict(const Coeff& a) { return cyclo_is_zero(a); }
    static bool eq_embedded(const Coeff& a, const Coeff& b, double /*tol*/) {
        return cyclo_eq_embedded(a, b);
    }
    /// Rational value of the embedded coefficient, if it lies in Q.
    static std::optional<Entry> entry_of(const Coeff& a) { return cyclo_rational_value(a); }

    static Param param_from_long(long v) { return Rational(v); }
    static bool param_is_zero(const Param& p) { return p.is_zero(); }
    static bool entry_is_zero(const Entry& e, double /*tol*/) { return e.is_zero(); }

    static ComplexF embed(const Coeff& a) { return cyclo_embed(a); }
    static std::string coeff_str(const Coeff& a) { return cyclo_str(a); }
};

/// Floating arithmetic: complex doubles throughout.
struct FloatMode {
    using Param = ComplexF;
    using Coeff = ComplexF;
    using Entry = ComplexF;
    static constexpr bool is_exact = false;

    static Coeff coeff_zero(int) { return {0.0, 0.0}; }
    static Coeff coeff_one(int) { return {1.0, 0.0}; }
    static Coeff zeta_pow(int n, long k) {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(n));
    }
    static Coeff coeff_from_param(int, const Param& p) { return p; }

    static Coeff add(const Coeff& a, const Coeff& b) { return a + b; }
    static Coeff sub(const Coeff& a, const Coeff& b) { return a - b; }
    static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
    static Coeff neg(const Coeff& a) { return -a; }
    static Coeff scale(const Param& r, const Coeff& a) { return r * a; }

    static bool is_zero_strict(const Coeff& a) { return a == Coeff{0.0, 0.0}; }
    static bool eq_embedded(const Coeff& a, const Coeff& b, double tol) {
        return std::abs(a - b) <= tol;
    }
    static std::optional<Entry> entry_of(const Coeff& a) { return a; }

    static Param param_from_long(long v) { return {static_cast<double>(v), 0.0}; }
    static bool param_is_zero(const Param& p) { return p == Param{0.0, 0.0}; }
    static bool entry_is_zero(const Entry& e, double tol) { return std::abs(e) <= tol; }

    static ComplexF embed(const Coeff& a) { return a; }
    static std::string coeff_str(const Coeff& a) { return format_complex(a); }
};

}  // namespace cherednik
