/// @file modules.hpp
/// @brief The two explicit graded modules and their generator actions.
///
/// Both modules have basis vectors v_{i,j} with i >= 0 and 0 <= j <= n-1.
///
/// Delta (polynomial representation twisted by the deformation):
///   deg v_{i,j} = i - j,         s . v_{i,j} = q^{-(i-j)} v_{i,j},
///   x . v_{i,j} = v_{i+1,j},
///   xi . v_{i,j} = v_{i,j+1} + (i + c_{i-j} - c_{-j}) v_{i-1,j},
///   with v_{i,j} = 0 whenever i < 0 or j >= n.
///
/// NablaM (the costandard-side model):
///   deg v_{i,j} = i + j - (n-1),  s . v_{i,j} = q^{-(i+j+1)} v_{i,j},
///   xi . v_{i,j} = v_{i-1,j}  (v_{-1,j} = 0),
///   x . v_{i,j} = v_{i,j+1} + (i+1 + c_{i+j+2} - c_{j+1}) v_{i+1,j},
///   with keys j >= n dropped.
///
/// The graded piece at degree k has dimension n for k >= 0, n+k for
/// 1-n <= k < 0, and 0 below; graded_basis fixes the basis ORDER the matrix
/// constructors use throughout, so matrices here are bit-comparable fixtures.

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/matrix.hpp"
#include "cherednik/modes.hpp"
#include "cherednik/params.hpp"
#include "cherednik/pbw.hpp"

namespace cherednik {

/// Which of the two explicit modules a vector lives in.
enum class ModuleTag { delta, nabla_m };

/// Basis index (i, j) of v_{i,j}.
struct BasisKey {
    long i = 0;
    long j = 0;
    auto operator<=>(const BasisKey&) const = default;
};

/// Finitely supported vector in one of the modules.
template <class Mode>
struct ModVector {
    ModuleTag tag = ModuleTag::delta;
    std::map<BasisKey, typename Mode::Coeff> entries;
};

/// Matrix between graded pieces, carrying its bases and degrees.
template <class K>
struct GradedMatrix {
    Mat<K> mat;
    ModuleTag tag = ModuleTag::delta;
    long src_degree = 0;
    long dst_degree = 0;
    std::vector<BasisKey> src_basis;
    std::vector<BasisKey> dst_basis;
};

/// Degree of v_{i,j} in the given module.
inline long basis_degree(ModuleTag tag, const BasisKey& key, int n) {
    return tag == ModuleTag::delta ? key.i - key.j : key.i + key.j - (n - 1);
}

/// s-weight exponent w of v_{i,j}: s scales the vector by q^{-w}.
inline long basis_weight(ModuleTag tag, const BasisKey& key) {
    return tag == ModuleTag::delta ? key.i - key.j : key.i + key.j + 1;
}

/// Dimension of the degree-k piece (same for both modules).
inline long graded_dim(long k, int n) {
    if (k >= 0) return n;
    if (k >= 1 - n) return n + k;
    return 0;
}

/// The frozen ordered basis of the degree-k piece; empty below degree 1-n.
/// Delta lists j descending from n-1 (keys (k+j, j)); NablaM lists j
/// ascending from 0 (keys (k+n-1-j, j)).
std::vector<BasisKey> graded_basis(ModuleTag tag, long k, int n);

template <class Mode>
ModVector<Mode> mod_zero(ModuleTag tag) {
    return ModVector<Mode>{tag, {}};
}

template <class Mode>
void mod_add_term(ModVector<Mode>& v, const BasisKey& key, const typename Mode::Coeff& coeff) {
    auto it = v.entries.find(key);
    if (it == v.entries.end()) {
        if (!Mode::is_zero_strict(coeff)) v.entries.emplace(key, coeff);
        return;
    }
    it->second = Mode::add(it->second, coeff);
    if (Mode::is_zero_strict(it->second)) v.entries.erase(it);
}

template <class Mode>
ModVector<Mode> mod_term(ModuleTag tag, const BasisKey& key, const typename Mode::Coeff& coeff) {
    ModVector<Mode> v = mod_zero<Mode>(tag);
    mod_add_term(v, key, coeff);
    return v;
}

template <class Mode>
ModVector<Mode> mod_add(const ModVector<Mode>& a, const ModVector<Mode>& b) {
    if (a.tag != b.tag) throw StructuralError("mod_add: mixed module tags");
    ModVector<Mode> out = a;
    for (const auto& [key, coeff] : b.entries) mod_add_term(out, key, coeff);
    return out;
}

template <class Mode>
ModVector<Mode> mod_scale(const typename Mode::Coeff& s, const ModVector<Mode>& a) {
    ModVector<Mode> out = mod_zero<Mode>(a.tag);
    for (const auto& [key, coeff] : a.entries) mod_add_term(out, key, Mode::mul(s, coeff));
    return out;
}

template <class Mode>
ModVector<Mode> mod_sub(const ModVector<Mode>& a, const ModVector<Mode>& b) {
    if (a.tag != b.tag) throw StructuralError("mod_sub: mixed module tags");
    ModVector<Mode> out = a;
    for (const auto& [key, coeff] : b.entries) mod_add_term(out, key, Mode::neg(coeff));
    return out;
}

template <class Mode>
bool mod_equals_strict(const ModVector<Mode>& a, const ModVector<Mode>& b) {
    return a.tag == b.tag && mod_sub(a, b).entries.empty();
}

template <class Mode>
bool mod_is_zero_embedded(const ModVector<Mode>& v, int n, double tol = 0.0) {
    const auto zero = Mode::coeff_zero(n);
    for (const auto& [key, coeff] : v.entries) {
        if (!Mode::eq_embedded(coeff, zero, tol)) return false;
    }
    return true;
}

template <class Mode>
bool mod_equals_embedded(const ModVector<Mode>& a, const ModVector<Mode>& b, int n,
                         double tol = 0.0) {
    if (a.tag != b.tag) return false;
    return mod_is_zero_embedded(mod_sub(a, b), n, tol);
}

namespace detail {

/// Action of one generator on one basis vector, accumulated into out.
template <class Mode>
void act_basis(ModuleTag tag, Gen g, const BasisKey& key, const typename Mode::Coeff& coeff,
               const CyclicParams<typename Mode::Param>& params, ModVector<Mode>& out) {
    const int n = params.n;
    switch (tag) {
        case ModuleTag::delta:
            switch (g) {
                case Gen::X:
                    mod_add_term(out, BasisKey{key.i + 1, key.j}, coeff);
                    return;
                case Gen::S:
                    mod_add_term(out, key,
                                 Mode::mul(coeff, Mode::zeta_pow(n, -(key.i - key.j))));
                    return;
                case Gen::Xi: {
                    if (key.j + 1 < n) mod_add_term(out, BasisKey{key.i, key.j + 1}, coeff);
                    if (key.i >= 1) {
                        auto factor = Mode::coeff_from_param(n, Mode::param_from_long(key.i));
                        factor = Mode::add(
                            factor, Mode::coeff_from_param(n, params.c_at(key.i - key.j)));
                        factor = Mode::sub(factor,
                                           Mode::coeff_from_param(n, params.c_at(-key.j)));
                        mod_add_term(out, BasisKey{key.i - 1, key.j}, Mode::mul(coeff, factor));
                    }
                    return;
                }
            }
            return;
        case ModuleTag::nabla_m:
            switch (g) {
                case Gen::X: {
                    if (key.j + 1 < n) mod_add_term(out, BasisKey{key.i, key.j + 1}, coeff);
                    auto factor = Mode::coeff_from_param(n, Mode::param_from_long(key.i + 1));
                    factor = Mode::add(factor,
                                       Mode::coeff_from_param(n, params.c_at(key.i + key.j + 2)));
                    factor = Mode::sub(factor, Mode::coeff_from_param(n, params.c_at(key.j + 1)));
                    mod_add_term(out, BasisKey{key.i + 1, key.j}, Mode::mul(coeff, factor));
                    return;
                }
                case Gen::S:
                    mod_add_term(out, key,
                                 Mode::mul(coeff, Mode::zeta_pow(n, -(key.i + key.j + 1))));
                    return;
                case Gen::Xi:
                    if (key.i >= 1) mod_add_term(out, BasisKey{key.i - 1, key.j}, coeff);
                    return;
            }
            return;
    }
}

template <class Mode>
ModVector<Mode> act_generic(ModuleTag tag, Gen g, const ModVector<Mode>& v,
                            const CyclicParams<typename Mode::Param>& params) {
    if (v.tag != tag) throw StructuralError("module action applied to a vector of the wrong module");
    ModVector<Mode> out = mod_zero<Mode>(tag);
    for (const auto& [key, coeff] : v.entries) act_basis<Mode>(tag, g, key, coeff, params, out);
    return out;
}

template <class Mode>
ModVector<Mode> act_generic(ModuleTag tag, const PBWElement<Mode>& elem, const ModVector<Mode>& v,
                            const CyclicParams<typename Mode::Param>& params) {
    if (v.tag != tag) throw StructuralError("module action applied to a vector of the wrong module");
    if (elem.n != params.n) throw StructuralError("module action: element order mismatch");
    ModVector<Mode> out = mod_zero<Mode>(tag);
    for (const auto& [key, coeff] : elem.terms) {
        ModVector<Mode> w = v;
        for (long r = 0; r < key.xi; ++r) w = act_generic<Mode>(tag, Gen::Xi, w, params);
        for (int r = 0; r < key.s; ++r) w = act_generic<Mode>(tag, Gen::S, w, params);
        for (long r = 0; r < key.x; ++r) w = act_generic<Mode>(tag, Gen::X, w, params);
        out = mod_add(out, mod_scale(coeff, w));
    }
    return out;
}

}  // namespace detail

/// Generator action on the Delta module.
template <class Mode>
ModVector<Mode> act_delta(Gen g, const ModVector<Mode>& v,
                          const CyclicParams<typename Mode::Param>& params) {
    return detail::act_generic<Mode>(ModuleTag::delta, g, v, params);
}

/// Normal-ordered-element action on the Delta module.
template <class Mode>
ModVector<Mode> act_delta(const PBWElement<Mode>& elem, const ModVector<Mode>& v,
                          const CyclicParams<typename Mode::Param>& params) {
    return detail::act_generic<Mode>(ModuleTag::delta, elem, v, params);
}

/// Generator action on the NablaM module.
template <class Mode>
ModVector<Mode> act_nabla(Gen g, const ModVector<Mode>& v,
                          const CyclicParams<typename Mode::Param>& params) {
    return detail::act_generic<Mode>(ModuleTag::nabla_m, g, v, params);
}

/// Normal-ordered-element action on the NablaM module.
template <class Mode>
ModVector<Mode> act_nabla(const PBWElement<Mode>& elem, const ModVector<Mode>& v,
                          const CyclicParams<typename Mode::Param>& params) {
    return detail::act_generic<Mode>(ModuleTag::nabla_m, elem, v, params);
}

/// Module-side action of the idempotent eps_k: keeps the components whose
/// s-weight exponent is congruent to k mod n.
template <class Mode>
ModVector<Mode> project_weight(long k, const ModVector<Mode>& v, int n) {
    ModVector<Mode> out = mod_zero<Mode>(v.tag);
    for (const auto& [key, coeff] : v.entries) {
        const long w = basis_weight(v.tag, key);
        if (((w - k) % n + n) % n == 0) mod_add_term(out, key, coeff);
    }
    return out;
}

/// Coordinates of v in an ordered basis.
/// @throws InternalConsistencyError if v has support outside the basis.
template <class Mode>
std::vector<typename Mode::Coeff> mod_coords(const ModVector<Mode>& v,
                                             const std::vector<BasisKey>& basis, int n) {
    std::vector<typename Mode::Coeff> out(basis.size(), Mode::coeff_zero(n));
    std::map<BasisKey, size_t> index;
    for (size_t p = 0; p < basis.size(); ++p) index.emplace(basis[p], p);
    for (const auto& [key, coeff] : v.entries) {
        auto it = index.find(key);
        if (it == index.end()) {
            throw InternalConsistencyError("vector has support outside the expected graded piece");
        }
        out[it->second] = coeff;
    }
    return out;
}

/// Coordinates extracted as matrix entries (exact mode: the embedded value
/// must be rational).
/// @throws InternalConsistencyError if a coordinate is not entry-extractable.
template <class Mode>
std::vector<typename Mode::Entry> mod_entry_coords(const ModVector<Mode>& v,
                                                   const std::vector<BasisKey>& basis, int n) {
    std::vector<typename Mode::Entry> out;
    out.reserve(basis.size());
    for (auto& coeff : mod_coords<Mode>(v, basis, n)) {
        const auto entry = Mode::entry_of(coeff);
        if (!entry) {
            throw InternalConsistencyError(
                "module coordinate is not a rational scalar after reduction");
        }
        out.push_back(*entry);
    }
    return out;
}

/// Degree shift of a generator: +1 for x, 0 for s, -1 for xi.
inline long generator_degree(Gen g) {
    switch (g) {
        case Gen::X: return 1;
        case Gen::S: return 0;
        case Gen::Xi: return -1;
    }
    return 0;
}

/// Matrix of a generator between graded pieces k and k + deg(g), in the
/// frozen graded_basis orders.  In exact mode the s-generator only has
/// rational entries when q^{-k} is rational (k = 0 mod n, or n <= 2);
/// otherwise a ModeError is thrown — use float mode for generic s-matrices.
template <class Mode>
GradedMatrix<typename Mode::Entry> generator_matrix(
    ModuleTag tag, Gen g, const CyclicParams<typename Mode::Param>& params, long k) {
    using Entry = typename Mode::Entry;
    const int n = params.n;
    const long dst_degree = k + generator_degree(g);
    GradedMatrix<Entry> out;
    out.tag = tag;
    out.src_degree = k;
    out.dst_degree = dst_degree;
    out.src_basis = graded_basis(tag, k, n);
    out.dst_basis = graded_basis(tag, dst_degree, n);
    out.mat = Mat<Entry>(out.dst_basis.size(), out.src_basis.size());
    for (size_t col = 0; col < out.src_basis.size(); ++col) {
        const auto image = detail::act_generic<Mode>(
            tag, g, mod_term<Mode>(tag, out.src_basis[col], Mode::coeff_one(n)), params);
        std::vector<Entry> coords;
        try {
            coords = mod_entry_coords<Mode>(image, out.dst_basis, n);
        } catch (const InternalConsistencyError&) {
            if constexpr (Mode::is_exact) {
                if (g == Gen::S) {
                    throw ModeError(
                        "s-generator matrix has irrational entries at this degree; "
                        "use float mode");
                }
            }
            throw;
        }
        for (size_t row = 0; row < coords.size(); ++row) out.mat.at(row, col) = coords[row];
    }
    return out;
}

/// Closed-form matrix of the grading element eu on the degree-k piece of
/// Delta: upper bidiagonal with diagonal k + (n - j) - c_j (j = 1..dim) and
/// unit superdiagonal.  Empty below degree 1-n.
template <class P>
GradedMatrix<P> eu_matrix(const CyclicParams<P>& params, long k) {
    const int n = params.n;
    const long dim = graded_dim(k, n);
    GradedMatrix<P> out;
    out.tag = ModuleTag::delta;
    out.src_degree = k;
    out.dst_degree = k;
    out.src_basis = graded_basis(ModuleTag::delta, k, n);
    out.dst_basis = out.src_basis;
    out.mat = Mat<P>(static_cast<size_t>(dim), static_cast<size_t>(dim));
    for (long j = 1; j <= dim; ++j) {
        P diag = P(0);
        diag = diag + P(k + (n - j)) - params.c_at(j);
        out.mat.at(static_cast<size_t>(j - 1), static_cast<size_t>(j - 1)) = diag;
        if (j < dim) out.mat.at(static_cast<size_t>(j - 1), static_cast<size_t>(j)) = P(1);
    }
    return out;
}

/// eu as a composed module action of its normal-ordered expansion
/// (x xi minus the weighted idempotents), for cross-checking the closed form.
template <class Mode>
GradedMatrix<typename Mode::Entry> eu_matrix_composed(
    const CyclicParams<typename Mode::Param>& params, long k) {
    using Entry = typename Mode::Entry;
    const int n = params.n;
    GradedMatrix<Entry> out;
    out.tag = ModuleTag::delta;
    out.src_degree = k;
    out.dst_degree = k;
    out.src_basis = graded_basis(ModuleTag::delta, k, n);
    out.dst_basis = out.src_basis;
    out.mat = Mat<Entry>(out.src_basis.size(), out.src_basis.size());
    const auto eu = eu_element<Mode>(params);
    for (size_t col = 0; col < out.src_basis.size(); ++col) {
        const auto v = mod_term<Mode>(ModuleTag::delta, out.src_basis[col], Mode::coeff_one(n));
        const auto image = act_delta<Mode>(eu, v, params);
        const auto coords = mod_entry_coords<Mode>(image, out.dst_basis, n);
        for (size_t row = 0; row < coords.size(); ++row) out.mat.at(row, col) = coords[row];
    }
    return out;
}

/// Diagnostic rendering of a module vector.
template <class Mode>
std::string mod_str(const ModVector<Mode>& v) {
    std::string out;
    for (const auto& [key, coeff] : v.entries) {
        if (!out.empty()) out += "  +  ";
        out += "(" + Mode::coeff_str(coeff) + ") v[" + std::to_string(key.i) + "," +
               std::to_string(key.j) + "]";
    }
    return out.empty() ? "0" : out;
}

}  // namespace cherednik
