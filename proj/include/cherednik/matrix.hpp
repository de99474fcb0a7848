/// @file matrix.hpp
/// @brief Dense matrices over exact rationals or complex doubles.
///
/// Everything here operates at representation-theory desk scale (dimensions
/// of order n), so the implementations favor exactness and clarity: plain
/// Gaussian elimination with exact pivots in the rational case and partial
/// pivoting with a tolerance in the complex case.  The matrix exponential
/// (complex only) uses scaling-and-squaring with the degree-13 Pade
/// approximant, which handles repeated eigenvalues and nontrivial Jordan
/// structure — exactly the regime the deformation parameters of interest
/// produce.

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

namespace detail {
inline double abs_val(const Rational& x) { return std::abs(x.to_double()); }
inline double abs_val(const ComplexF& x) { return std::abs(x); }
inline bool entry_zero(const Rational& x, double /*tol*/) { return x.is_zero(); }
inline bool entry_zero(const ComplexF& x, double tol) { return std::abs(x) <= tol; }
}  // namespace detail

/// Dense row-major matrix over K in {Rational, ComplexF}.
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const K& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_same_shape(b, "matrix addition");
        Mat out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
        return out;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check_same_shape(b, "matrix subtraction");
        Mat out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (detail::entry_zero(aik, 0.0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
                }
            }
        }
        return out;
    }

    friend Mat operator*(const K& s, const Mat& m) {
        Mat out(m.rows_, m.cols_);
        for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
        return out;
    }

    /// Determinant by Gaussian elimination (square only).
    K det() const {
        if (rows_ != cols_) throw StructuralError("determinant of non-square matrix");
        Mat w = *this;
        K result(1);
        for (size_t col = 0; col < cols_; ++col) {
            const size_t p = w.pick_pivot(col, col, 0.0);
            if (p == npos) return K(0);
            if (p != col) {
                w.swap_rows(p, col);
                result = -K(1) * result;
            }
            const K& pivot = w.at(col, col);
            result = result * pivot;
            w.eliminate_below(col, col);
        }
        return result;
    }

    /// Row rank; tol is the float pivot threshold (ignored in exact mode).
    size_t rank(double tol = 0.0) const {
        Mat w = *this;
        size_t rk = 0;
        for (size_t col = 0; col < cols_ && rk < rows_; ++col) {
            const size_t p = w.pick_pivot(col, rk, tol);
            if (p == npos) continue;
            if (p != rk) w.swap_rows(p, rk);
            w.eliminate_below(rk, col);
            ++rk;
        }
        return rk;
    }

    /// Basis of the right kernel {v : A v = 0}; each vector has length cols().
    std::vector<std::vector<K>> kernel_basis(double tol = 0.0) const {
        // Reduced row echelon form, recording pivot columns.
        Mat w = *this;
        std::vector<size_t> pivot_col;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            const size_t p = w.pick_pivot(col, row, tol);
            if (p == npos) continue;
            if (p != row) w.swap_rows(p, row);
            const K pivot = w.at(row, col);
            for (size_t c = col; c < cols_; ++c) w.at(row, c) = w.at(row, c) / pivot;
            for (size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                const K factor = w.at(r, col);
                if (detail::entry_zero(factor, 0.0)) continue;
                for (size_t c = col; c < cols_; ++c) {
                    w.at(r, c) = w.at(r, c) - factor * w.at(row, c);
                }
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<std::vector<K>> basis;
        size_t next_pivot = 0;
        for (size_t col = 0; col < cols_; ++col) {
            if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
                ++next_pivot;
                continue;
            }
            // Free column: kernel vector with 1 there, minus the pivot-row
            // entries of that column at the pivot positions.
            std::vector<K> v(cols_, K(0));
            v[col] = K(1);
            for (size_t pr = 0; pr < pivot_col.size(); ++pr) {
                v[pivot_col[pr]] = -K(1) * w.at(pr, col);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Solves A * X = B for square A; partial pivoting.
    /// @throws PreconditionError (exact) / NumericError (float) if singular.
    Mat solve(const Mat& b, double tol = 0.0) const {
        if (rows_ != cols_) throw StructuralError("solve requires a square matrix");
        if (b.rows_ != rows_) throw StructuralError("solve: right-hand side shape mismatch");
        Mat w = *this;
        Mat rhs = b;
        for (size_t col = 0; col < cols_; ++col) {
            const size_t p = w.pick_pivot(col, col, tol);
            if (p == npos) {
                if constexpr (std::is_same_v<K, Rational>) {
                    throw PreconditionError("solve: singular matrix");
                } else {
                    throw NumericError("solve: pivot below tolerance");
                }
            }
            if (p != col) {
                w.swap_rows(p, col);
                rhs.swap_rows(p, col);
            }
            const K pivot = w.at(col, col);
            for (size_t r = col + 1; r < rows_; ++r) {
                const K factor = w.at(r, col) / pivot;
                if (detail::entry_zero(factor, 0.0)) continue;
                for (size_t c = col; c < cols_; ++c) w.at(r, c) = w.at(r, c) - factor * w.at(col, c);
                for (size_t c = 0; c < rhs.cols_; ++c) {
                    rhs.at(r, c) = rhs.at(r, c) - factor * rhs.at(col, c);
                }
            }
        }
        Mat x(rows_, rhs.cols_);
        for (size_t rc = rows_; rc-- > 0;) {
            for (size_t c = 0; c < rhs.cols_; ++c) {
                K acc = rhs.at(rc, c);
                for (size_t k = rc + 1; k < cols_; ++k) acc = acc - w.at(rc, k) * x.at(k, c);
                x.at(rc, c) = acc / w.at(rc, rc);
            }
        }
        return x;
    }

    /// Max absolute row sum.
    double norm_inf() const {
        double best = 0.0;
        for (size_t r = 0; r < rows_; ++r) {
            double s = 0.0;
            for (size_t c = 0; c < cols_; ++c) s += detail::abs_val(at(r, c));
            best = std::max(best, s);
        }
        return best;
    }

    /// Max absolute column sum.
    double norm_one() const {
        double best = 0.0;
        for (size_t c = 0; c < cols_; ++c) {
            double s = 0.0;
            for (size_t r = 0; r < rows_; ++r) s += detail::abs_val(at(r, c));
            best = std::max(best, s);
        }
        return best;
    }

private:
    static constexpr size_t npos = static_cast<size_t>(-1);

    void check_same_shape(const Mat& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw StructuralError(std::string(what) + ": shape mismatch");
        }
    }

    void swap_rows(size_t r1, size_t r2) {
        for (size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    /// Pivot row in [from, rows): first nonzero entry in the exact case,
    /// maximal |entry| (must exceed tol) in the float case; npos if none.
    size_t pick_pivot(size_t col, size_t from, double tol) const {
        if constexpr (std::is_same_v<K, Rational>) {
            for (size_t r = from; r < rows_; ++r) {
                if (!at(r, col).is_zero()) return r;
            }
            return npos;
        } else {
            size_t best = npos;
            double best_abs = tol;
            for (size_t r = from; r < rows_; ++r) {
                const double a = std::abs(at(r, col));
                if (a > best_abs) {
                    best_abs = a;
                    best = r;
                }
            }
            return best;
        }
    }

    /// Clears the column below the pivot at (row, col) by row operations.
    void eliminate_below(size_t row, size_t col) {
        const K pivot = at(row, col);
        for (size_t r = row + 1; r < rows_; ++r) {
            if (detail::entry_zero(at(r, col), 0.0)) continue;
            const K factor = at(r, col) / pivot;
            for (size_t c = col; c < cols_; ++c) at(r, c) = at(r, c) - factor * at(row, c);
        }
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<K> a_;
};

/// Exact matrix viewed in complex floats.
Mat<ComplexF> embed_matrix(const Mat<Rational>& m);

/// Matrix exponential via scaling-and-squaring with the degree-13 Pade
/// approximant.  Valid for any square complex matrix.
/// @throws NumericError if non-finite values appear.
Mat<ComplexF> expm(const Mat<ComplexF>& a);

}  // namespace cherednik
