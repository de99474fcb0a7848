/// @file endo.hpp
/// @brief Endomorphism-ring dimension of Delta via the xi^n maps.
///
/// The s-fixed part of Delta is concentrated in degrees kn.  Multiplication
/// by xi^n maps the degree-kn piece to the degree-(k-1)n piece and is
/// lower-triangular in the bases {v_{kn+i,i}} (i ascending); its determinant
/// factors as prod_{1<=i,j<=n} (kn + (i-j) - (c_j - c_i)).  The
/// endomorphism-ring dimension is n plus the total nullity of those maps,
/// which exceeds n exactly when the parameters leave the good set F.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cherednik/modules.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// Endomorphism-ring dimension with its supporting evidence.
struct EndReport {
    long dim_end = 0;
    std::vector<std::pair<long, long>> critical_ks;  ///< (k, kernel dimension)
    std::map<long, Rational> det_values;             ///< k -> det of the xi^n map
};

/// Matrix of xi^n from Delta degree kn to degree (k-1)n in the ascending
/// bases {v_{kn+i,i}} and {v_{(k-1)n+i,i}}, computed by n-fold xi action.
/// @throws PreconditionError if k < 1.
/// @throws InternalConsistencyError if the result is not lower-triangular
///         (the composition must stay inside the expected column spans).
GradedMatrix<Rational> xi_n_matrix(const RatParams& params, long k);

/// Closed-form determinant prod_{1<=i,j<=n} (kn + (i-j) - (c_j - c_i));
/// must equal det(xi_n_matrix(params, k)) exactly.
/// @throws PreconditionError if k < 1.
Rational det_formula(const RatParams& params, long k);

/// All k >= 1 where the determinant vanishes: each pair (i, j) contributes
/// k = ((j-i) + c_j - c_i)/n when that value is a positive integer, so the
/// set is finite and complete.
std::vector<long> critical_ks(const RatParams& params);

/// dim End = n + sum of kernel dimensions over the critical degrees.
/// det_values covers [1, max(3, largest critical k)] plus every critical k;
/// within that window det = 0 exactly at the critical degrees (asserted).
/// @throws InternalConsistencyError on any internal cross-check failure.
EndReport end_dim(const RatParams& params);

/// Independent oracle: sum over k in [1, K] of
/// dim { v in Delta_{kn} : xi^n v = 0, s v = v }, computed by direct linear
/// algebra per degree (the s-condition is checked to be vacuous first).
long end_dim_scan_oracle(const RatParams& params, long K);

}  // namespace cherednik
