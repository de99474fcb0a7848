/// @file rational.hpp
/// @brief Arbitrary-precision rational numbers in canonical form.
///
/// Thin wrapper over GMP's mpq_class that guarantees the canonical-form
/// invariant (lowest terms, positive denominator) at every construction
/// boundary and adds strict "p" / "p/q" parsing and formatting.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cherednik {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    /// Zero.
    Rational() : v_(0) {}

    /// Integer value n/1.
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design

    /// num/den reduced to canonical form.
    /// @throws PreconditionError if den == 0.
    Rational(long num, long den);

    /// Strict parse of "p" or "p/q" (optional leading '-', q > 0 digits).
    /// @throws StructuralError on any other shape, including "p/0".
    static Rational parse(std::string_view text);

    /// Underlying GMP value (canonical).
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    /// True iff the denominator is 1.
    bool is_integer() const { return v_.get_den() == 1; }
    /// -1, 0, or +1.
    int sign() const { return sgn(v_); }

    /// Integer value as long.
    /// @throws StructuralError if not an integer or out of range.
    long to_long() const;

    /// Nearest double (GMP rounding).
    double to_double() const { return v_.get_d(); }

    /// "p" if integral, else "p/q".
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    /// @throws PreconditionError on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a);

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

/// n! as an exact Rational (n small; used for lift normalizations).
Rational factorial(long n);

}  // namespace cherednik
