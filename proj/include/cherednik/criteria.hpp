/// @file criteria.hpp
/// @brief The good parameter set F, semisimplicity, the D_k/F_k matrix
///        families, and the generation criterion.
///
/// A parameter c = (c_1, ..., c_n), c_n = 0, lies in F when every congruence
/// c_i - c_j = (j - i) + n*m with integer m forces m = 0.  Pairs violating
/// this (m != 0) are the failing pairs; they indicate degrees where the
/// module NablaM fails to be generated by its lowest-weight vector.  The
/// same data decides semisimplicity (no congruence may hold at all for
/// i != j) and produces, for any rational c, a translate c' in F with
/// c - c' in nZ^n.
///
/// D_k (k >= 0) and F_k (1-n <= k < 0) are the per-degree matrices of the
/// generation criterion; their nonsingularity for every degree is equivalent
/// to the map x^i xi^j |-> x^i xi^j psi being onto.

#pragma once

#include <optional>
#include <vector>

#include "cherednik/homspace.hpp"
#include "cherednik/matrix.hpp"
#include "cherednik/modules.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

/// A pair 1 <= i, j <= n with c_i - c_j - (j - i) = n*m and m != 0.
struct FailingPair {
    long i = 0;
    long j = 0;
    long m = 0;
    auto operator<=>(const FailingPair&) const = default;
};

/// Aggregate verdict on one parameter vector.
struct CriterionReport {
    bool in_F = false;
    bool semisimple = false;
    std::vector<FailingPair> failing_pairs;
    std::vector<long> singular_degrees;  ///< k >= 0 where D_k is singular
};

/// Scan all pairs exactly.  in_F is true iff failing_pairs is empty.
CriterionReport in_F(const RatParams& params);

/// Float-mode scan: a congruence counts when some integer m with
/// |m| <= (|c_i - c_j| + n)/n + 1 satisfies |c_i - c_j - (j-i) - n*m| < tol.
/// @throws PreconditionError if tol <= 0.
CriterionReport in_F(const CxParams& params, double tol);

/// True iff no pair i != j satisfies the congruence for any integer m
/// (including m = 0).  Semisimple implies in_F.
bool is_semisimple(const RatParams& params);

/// Float-mode variant of is_semisimple.
/// @throws PreconditionError if tol <= 0.
bool is_semisimple(const CxParams& params, double tol);

/// Translate c to c' in F with c'_n = 0 and c_i - c'_i in nZ for all i.
/// Classes are formed under the congruence relation; the class containing n
/// keeps n as its representative, every other class is represented by its
/// largest member r, and c'_j = c_r + r - j on that class.
/// @throws InternalConsistencyError if the output fails its guarantees.
RatParams good_translate(const RatParams& params);

/// Integrality decisions cannot be made on float input.
/// @throws ModeError always.
RatParams good_translate(const CxParams& params);

/// The n x n lower-bidiagonal matrix of multiplication by x from NablaM
/// degree k to degree k+1 (k >= 0): diagonal n+k-j+c_{k+1}-c_{j+1}
/// (0-based j), unit subdiagonal.
/// @throws PreconditionError if k < 0.
GradedMatrix<Rational> build_Dk(const RatParams& params, long k);

/// The same matrix computed from the module action instead of the closed
/// form (transcription cross-check).
GradedMatrix<Rational> build_Dk_composed(const RatParams& params, long k);

/// The (n+k) x (n+k) matrix of "multiply by x, then project modulo the line
/// spanned by xi^{-(k+1)} psi" from NablaM degree k to degree k+1, for
/// 1-n <= k < 0.  Closed form: column 1 row r is
/// delta_{r,1} - (n+k+c_{k+1}-c_1) t_{n-1-r}/t_{n-1}; column j >= 2 has
/// entry n+k+1-j+c_{k+1}-c_j in row j-1 and 1 on the diagonal.
/// @throws PreconditionError if k is out of range or t_{n-1} = 0.
GradedMatrix<Rational> build_Fk(const RatParams& params, const PsiVector& t, long k);

/// The same matrix computed from act on NablaM plus the explicit projection
/// (authoritative construction backing the closed form).
GradedMatrix<Rational> build_Fk_composed(const RatParams& params, const PsiVector& t, long k);

/// Verdict of the finite nonsingularity criterion for the family {D_k},
/// with the witness degrees and the scan bound used for cross-validation.
struct DkReport {
    bool all_nonsingular = false;
    std::vector<long> singular_ks;  ///< complete list from the finite criterion
    long scan_bound = 0;            ///< determinant scan ran on [0, scan_bound]
};

/// Decide nonsingularity of every D_k (k >= 0) by the finite failing-pair
/// criterion, then cross-check against a determinant scan of build_Dk on
/// [0, scan_bound] (default 3n).
/// @throws InternalConsistencyError if criterion and scan disagree.
DkReport dk_all_nonsingular(const RatParams& params, long scan_bound = -1);

/// Outcome of the generation test for psi = sum t_i psi_i.
struct GenerationReport {
    bool generates = false;     ///< final verdict (= matrix_route)
    long K = 0;                 ///< brute-force window bound
    bool matrix_route = false;  ///< all F_k and D_k nonsingular, every degree
    bool brute_route = false;   ///< span of x^i xi^j psi fills every degree <= K
    std::optional<long> first_failure_degree;  ///< lowest deficient degree <= K
};

/// Decide whether psi generates NablaM: the matrix route (nonsingularity of
/// every F_k and D_k, the tail handled by the finite criterion) checked
/// degree-by-degree against the brute-force spanning route on [1-n, K].
/// @throws InternalConsistencyError if the routes disagree on any degree.
/// @throws PreconditionError if t has the wrong length or K < 1-n.
GenerationReport generation_check(const RatParams& params, const PsiVector& t, long K);

}  // namespace cherednik
