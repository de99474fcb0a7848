/// @file hecke.hpp
/// @brief The cyclotomic quotient C[T]/(prod_j (T - r_j)) and the operator
///        eta = s . exp((2 pi i / n) eu) acting on Delta.
///
/// Root convention: r_j = exp(-(2 pi i / n)(j + c_j)) for j = 1..n, i.e.
/// q^{-j} q_j^{-1} with q = exp(2 pi i / n) and q_j = exp((2 pi i / n) c_j).
/// The per-degree matrix of eta is q^{-k} exp((2 pi i / n) Eu_k); it is
/// upper triangular with diagonal (r_1, r_2, ...) independent of the degree,
/// is annihilated by the cyclotomic polynomial, and commutes with the x, s,
/// and xi actions.  All computation on this side is complex floating point;
/// verdicts carry explicit residuals and tolerances.

#pragma once

#include <vector>

#include "cherednik/matrix.hpp"
#include "cherednik/params.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

/// The cyclotomic quotient's defining polynomial, as roots and monic
/// coefficients (ascending powers, size n+1).
struct HeckePoly {
    std::vector<ComplexF> roots;
    std::vector<ComplexF> coeffs;
};

/// Per-degree eta matrices for k in [k_min, k_max]; mats[k - k_min].
struct EtaMatrices {
    long k_min = 0;
    long k_max = 0;
    std::vector<Mat<ComplexF>> mats;
};

/// Outcome of a residual-bounded verification.
struct ResidualCheck {
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Roots r_j = exp(-(2 pi i / n)(j + c_j)) and the expanded polynomial.
HeckePoly hecke_poly(const CxParams& params);

/// q^{-k} exp((2 pi i / n) Eu_k) on the degree-k piece of Delta.
/// @throws PreconditionError if k < 1-n.
/// @throws NumericError on non-finite entries.
Mat<ComplexF> eta_matrix(const CxParams& params, long k);

/// All eta matrices for k in [1-n, K].
EtaMatrices eta_matrices(const CxParams& params, long K);

/// Max over k in [1-n, K] of the infinity-norm of
/// prod_{j=1..n} (eta_k - r_j I); passes iff the max is below tol.
ResidualCheck check_annihilation(const CxParams& params, long K, double tol);

/// Max residual of eta commuting with the generator matrices:
/// eta_{k+1} X_k - X_k eta_k, eta_{k-1} Xi_k - Xi_k eta_k, and
/// eta_k S_k - S_k eta_k, over the valid degrees k <= K-1.
ResidualCheck check_commutation(const CxParams& params, long K, double tol);

/// The eta eigenvalue on the degree-0 eigenvector of eu with eigenvalue
/// (n-j) - c_j, for 1 <= j <= n; defined only for semisimple parameters
/// (distinct eu eigenvalues).  Equals r_j up to numerical error.
/// @throws PreconditionError if the parameters are not semisimple or j is
///         out of range.
/// @throws NumericError if the eigenvector residual check fails.
ComplexF eigenvalue_on_standard(const CxParams& params, long j);

}  // namespace cherednik
