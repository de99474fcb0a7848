/// @file rational.cpp
/// @brief Rational construction, parsing, and formatting.

#include "cherednik/rational.hpp"

#include <cctype>
#include <ostream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        // Strict: denominator is a positive digit string with no sign or
        // leading zero-only start like "0".
        if (!all_digits(den) || den == "0" || (den.size() > 1 && den.front() == '0')) {
            throw StructuralError("malformed rational denominator in '" + std::string(text) + "'");
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits) || (digits.size() > 1 && digits.front() == '0')) {
        throw StructuralError("malformed rational '" + std::string(text) + "'");
    }
    mpq_class v;
    // mpq_class::set_str via constructor understands "p/q" in base 10.
    if (v.set_str(std::string(text), 10) != 0) {
        throw StructuralError("malformed rational '" + std::string(text) + "'");
    }
    v.canonicalize();
    Rational out;
    out.v_ = std::move(v);
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

long Rational::to_long() const {
    if (!is_integer()) throw StructuralError("rational " + str() + " is not an integer");
    const mpz_class& num = v_.get_num();
    if (!num.fits_slong_p()) throw StructuralError("integer " + str() + " out of long range");
    return num.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

Rational factorial(long n) {
    if (n < 0) throw PreconditionError("factorial of negative argument");
    Rational f(1);
    for (long i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

}  // namespace cherednik
