/// @file scalars.hpp
/// @brief Scalar domains: cyclotomic group-ring elements and complex floats.
///
/// CycloElem represents an element of Q[z]/(z^n - 1) (z a primitive n-th root
/// of unity) as the coefficient vector (a_0, ..., a_{n-1}) of sum a_k z^k.
/// Arithmetic is exact.  Two notions of "equal" coexist:
///   - strict: identical coefficient vectors (cyclo_is_zero / operator==);
///   - embedded: equal as complex numbers, i.e. equal modulo the n-th
///     cyclotomic polynomial (cyclo_eq_embedded).  This is still exact — the
///     reduction is computed in rational arithmetic — but it identifies
///     group-ring zero divisors such as (1 + z)/2 for n = 2 with their
///     field values.
/// Quantities that must be rational numbers are extracted with
/// cyclo_rational_value, which succeeds exactly when the embedded value lies
/// in Q.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// Complex double-precision scalar used by all floating-point routes.
using ComplexF = std::complex<double>;

/// Element of Q[z]/(z^n - 1): coefficients of 1, z, ..., z^{n-1}.
using CycloElem = std::vector<Rational>;

/// The additive zero of Q[z]/(z^n - 1).
CycloElem cyclo_zero(int n);
/// The multiplicative one.
CycloElem cyclo_one(int n);
/// The constant r.
CycloElem cyclo_from_rational(int n, const Rational& r);
/// z^k for any integer k (reduced mod n).
CycloElem cyclo_zeta_pow(int n, long k);

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_neg(const CycloElem& a);
CycloElem cyclo_scale(const Rational& r, const CycloElem& a);

/// Product in Q[z]/(z^n - 1) (cyclic convolution of coefficients).
/// @throws StructuralError if the lengths differ.
CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b);

/// Numerical value sum a_k exp(2*pi*i*k/n).
ComplexF cyclo_embed(const CycloElem& a);

/// Strict componentwise zero test (group-ring zero, not embedded zero).
bool cyclo_is_zero(const CycloElem& a);

/// The n-th cyclotomic polynomial, ascending coefficients, monic.
/// Computed exactly by the recursive quotient (x^n - 1) / prod over proper
/// divisors d of n of the d-th cyclotomic polynomial; results are cached and
/// safe to read concurrently.
std::vector<Rational> cyclotomic_polynomial(int n);

/// Canonical residue of a modulo the n-th cyclotomic polynomial, zero-padded
/// back to length n.  Two CycloElems have equal embedded values iff their
/// reductions are strictly equal.
CycloElem cyclo_reduce(const CycloElem& a);

/// Exact equality of embedded values (reduction-based; no floating point).
bool cyclo_eq_embedded(const CycloElem& a, const CycloElem& b);

/// The embedded value as a rational if it lies in Q, otherwise nullopt.
std::optional<Rational> cyclo_rational_value(const CycloElem& a);

/// Human-readable "a0 + a1*z + ..." with zero terms skipped.
std::string cyclo_str(const CycloElem& a);

/// Strict parse of a complex literal: "a", "a+bi", or "a-bi" with decimal
/// (optionally exponent-suffixed) parts.
/// @throws StructuralError on any other shape.
ComplexF parse_complex(std::string_view text);

/// Round-trippable "a+bi" / "a-bi" / "a" rendering.
std::string format_complex(const ComplexF& z);

}  // namespace cherednik
