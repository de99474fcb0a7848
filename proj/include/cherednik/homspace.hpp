/// @file homspace.hpp
/// @brief Lowest-weight vectors of NablaM and the explicit Delta -> NablaM map.
///
/// The degree-0 piece of NablaM carries an n-dimensional space of s-fixed
/// vectors killed by xi^n, spanned by psi_i = (1/(n-1)!) v_{i, n-1-i}.  A
/// choice of coefficients t = (t_0, ..., t_{n-1}) picks the vector
/// psi = sum_i t_i psi_i, and sending the canonical Delta generator v_{0,0}
/// to psi extends uniquely to a degree-preserving module map
/// Delta -> NablaM whose degree-k matrix is computed here explicitly.  The
/// map is an isomorphism up to degree K exactly when every per-degree matrix
/// is square and nonsingular, which matches the generation criterion.
///
/// All computation here is exact rational arithmetic.

#pragma once

#include <optional>
#include <vector>

#include "cherednik/modules.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// Coefficient vector t = (t_0, ..., t_{n-1}) selecting a lowest-weight
/// vector psi = sum t_i psi_i.  Generation requires t_{n-1} != 0.
struct PsiVector {
    std::vector<Rational> t;
};

/// The distinguished choice t = (0, ..., 0, 1).
PsiVector unit_psi(int n);

/// The basis lowest-weight vector psi_i = (1/(n-1)!) v_{i, n-1-i} in NablaM.
/// @throws PreconditionError unless 0 <= i <= n-1.
ModVector<ExactMode> lift_psi(long i, int n);

/// psi = sum_i t_i psi_i (degree 0 in NablaM).
ModVector<ExactMode> psi_m_vector(const PsiVector& t, int n);

/// True iff xi^n annihilates v and s fixes v, both checked exactly after
/// reduction to the embedded field.
/// @throws StructuralError if v is not a NablaM vector.
bool verify_singular(const ModVector<ExactMode>& v, const RatParams& params);

/// Dimension of { v in NablaM degree 0 : xi^n v = 0, s v = v }, computed by
/// explicit kernel intersection.  Always n; asserted by tests.
long singular_space_dimension_at_zero(const RatParams& params);

/// Per-degree matrices of the map Delta -> NablaM determined by t, for
/// degrees 1-n .. K, plus the isomorphism verdict on that window.
///
/// Each matrix is stored with tag nabla_m: dst_basis indexes NablaM
/// coordinates (rows) while src_basis lists the Delta basis keys whose
/// images form the columns.
struct HomReport {
    long k_min = 0;
    long k_max = 0;
    std::vector<GradedMatrix<Rational>> matrices;  ///< index k - k_min
    bool iso = false;                              ///< all square and nonsingular
    std::optional<long> first_defect_degree;       ///< lowest degree with a defect
};

/// Build the map's per-degree matrices for k in [1-n, K] and decide whether
/// it is an isomorphism on that window.  Cross-checked internally against
/// the generation criterion; disagreement raises InternalConsistencyError.
/// @throws PreconditionError if t has the wrong length, t_{n-1} = 0, or K < 1-n.
HomReport delta_to_nabla_hom(const RatParams& params, const PsiVector& t, long K);

namespace detail {

/// Incrementally maintained family x^{k+j} xi^j psi, one vector per
/// xi-exponent j, advanced degree by degree from 1-n upward.  These vectors
/// are simultaneously the spanning set of the generation test and the
/// columns of the Delta -> NablaM matrices (the Delta basis vector v_{i,j}
/// maps to x^i xi^j psi).
class PsiOrbitColumns {
  public:
    PsiOrbitColumns(const RatParams& params, const PsiVector& t);

    /// Step to degree k; degrees must be visited consecutively upward.
    void advance_to(long k);

    /// Column for xi-exponent j at the current degree (requires j >= -k).
    const ModVector<ExactMode>& column(long j) const;

  private:
    RatParams params_;
    ModVector<ExactMode> psi_;
    std::vector<ModVector<ExactMode>> cols_;
    long degree_;
};

}  // namespace detail

}  // namespace cherednik
