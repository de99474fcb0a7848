/// @file params.hpp
/// @brief Deformation parameters for the cyclic rational Cherednik algebra.
///
/// The algebra depends on an integer n >= 1 and scalars c = (c_1, ..., c_n)
/// with c_n = 0.  Index lookups c_i are defined for every integer i by
/// reducing i into {1, ..., n} modulo n, so c_0 = c_n = 0 and c is n-periodic.

#pragma once

#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/modes.hpp"

namespace cherednik {

/// Parameter pack (n, c_1..c_n), c_n = 0; P is Rational or ComplexF.
template <class P>
struct CyclicParams {
    int n = 1;
    std::vector<P> c;  ///< c[0] = c_1, ..., c[n-1] = c_n = 0.

    /// c_i for any integer i, with i reduced into {1, ..., n} mod n.
    const P& c_at(long i) const {
        const long idx = (((i - 1) % n) + n) % n;
        return c[static_cast<size_t>(idx)];
    }
};

using RatParams = CyclicParams<Rational>;
using CxParams = CyclicParams<ComplexF>;

namespace detail {
inline bool param_zero(const Rational& p) { return p.is_zero(); }
inline bool param_zero(const ComplexF& p) { return p == ComplexF{0.0, 0.0}; }
}  // namespace detail

/// Validated constructor: requires n >= 1, c of length n, and c_n = 0 (exact,
/// also in float mode — the normalization is part of the parameterization,
/// not a numerical quantity).
/// @throws StructuralError on violation.
template <class P>
CyclicParams<P> make_params(int n, std::vector<P> c) {
    if (n < 1) throw StructuralError("parameter order n must be >= 1");
    if (c.size() != static_cast<size_t>(n)) {
        throw StructuralError("parameter vector c must have length n");
    }
    if (!detail::param_zero(c.back())) {
        throw StructuralError("last parameter must satisfy c_n = 0");
    }
    return CyclicParams<P>{n, std::move(c)};
}

/// Exact parameters embedded into complex floats.
inline CxParams embed_params(const RatParams& p) {
    std::vector<ComplexF> c;
    c.reserve(p.c.size());
    for (const Rational& x : p.c) c.emplace_back(x.to_double(), 0.0);
    return CxParams{p.n, std::move(c)};
}

}  // namespace cherednik
