/// @file matrix.cpp
/// @brief Complex embedding and the scaling-and-squaring matrix exponential.

#include "cherednik/matrix.hpp"

#include <array>
#include <cmath>

namespace cherednik {

Mat<ComplexF> embed_matrix(const Mat<Rational>& m) {
    Mat<ComplexF> out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            out.at(r, c) = ComplexF{m.at(r, c).to_double(), 0.0};
        }
    }
    return out;
}

namespace {

void check_finite(const Mat<ComplexF>& m, const char* where) {
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            const ComplexF& z = m.at(r, c);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw NumericError(std::string("non-finite matrix entry in ") + where);
            }
        }
    }
}

}  // namespace

Mat<ComplexF> expm(const Mat<ComplexF>& a) {
    if (a.rows() != a.cols()) throw StructuralError("expm requires a square matrix");
    const size_t n = a.rows();
    if (n == 0) return a;
    check_finite(a, "expm input");

    // Degree-13 Pade numerator coefficients (denominator uses the same values
    // with alternating signs, realized below by V - U / V + U).
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};
    // Largest 1-norm for which the degree-13 approximant meets double
    // precision without scaling.
    static constexpr double theta13 = 5.371920351148152;

    int squarings = 0;
    Mat<ComplexF> as = a;
    const double nrm = a.norm_one();
    if (nrm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        const ComplexF scale{std::ldexp(1.0, -squarings), 0.0};
        as = scale * as;
    }

    const Mat<ComplexF> id = Mat<ComplexF>::identity(n);
    const Mat<ComplexF> a2 = as * as;
    const Mat<ComplexF> a4 = a2 * a2;
    const Mat<ComplexF> a6 = a2 * a4;

    const Mat<ComplexF> u_inner =
        a6 * (ComplexF{b[13], 0} * a6 + ComplexF{b[11], 0} * a4 + ComplexF{b[9], 0} * a2) +
        ComplexF{b[7], 0} * a6 + ComplexF{b[5], 0} * a4 + ComplexF{b[3], 0} * a2 +
        ComplexF{b[1], 0} * id;
    const Mat<ComplexF> u = as * u_inner;
    const Mat<ComplexF> v =
        a6 * (ComplexF{b[12], 0} * a6 + ComplexF{b[10], 0} * a4 + ComplexF{b[8], 0} * a2) +
        ComplexF{b[6], 0} * a6 + ComplexF{b[4], 0} * a4 + ComplexF{b[2], 0} * a2 +
        ComplexF{b[0], 0} * id;

    Mat<ComplexF> result = (v - u).solve(v + u, 0.0);
    for (int s = 0; s < squarings; ++s) result = result * result;
    check_finite(result, "expm result");
    return result;
}

}  // namespace cherednik
