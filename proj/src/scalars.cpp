/// @file scalars.cpp
/// @brief Cyclotomic group-ring arithmetic and complex parsing/formatting.

#include "cherednik/scalars.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <regex>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

void check_n(int n) {
    if (n < 1) throw StructuralError("cyclotomic order must be >= 1");
}

void check_same_length(const CycloElem& a, const CycloElem& b, const char* op) {
    if (a.size() != b.size()) {
        throw StructuralError(std::string(op) + ": operand lengths differ");
    }
}

/// Dense polynomial over Q, ascending coefficients; no trailing-zero policy.
using Poly = std::vector<Rational>;

size_t poly_degree(const Poly& p) {
    size_t d = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) d = i;
    }
    return d;
}

Poly poly_trim(Poly p) {
    p.resize(poly_degree(p) + 1);
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Quotient of a by monic b (exact when the division is exact; remainder
/// returned alongside).  Only monic divisors occur here, so no coefficient
/// division beyond multiplying by the (unit) leading coefficient is needed.
std::pair<Poly, Poly> poly_divmod_monic(Poly a, const Poly& b) {
    const size_t db = poly_degree(b);
    if (!b[db].is_one()) throw InternalConsistencyError("divisor is not monic");
    Poly q(a.size(), Rational(0));
    while (true) {
        const size_t da = poly_degree(a);
        if (da < db || (da == 0 && a[0].is_zero())) break;
        const Rational lead = a[da];
        if (lead.is_zero()) break;
        const size_t shift = da - db;
        q[shift] += lead;
        for (size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
        if (!a[da].is_zero()) throw InternalConsistencyError("polynomial division failed to cancel");
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

/// Cache of cyclotomic polynomials; write-once per key under a mutex,
/// safe for concurrent readers thereafter.
std::map<int, Poly>& cyclo_poly_cache() {
    static std::map<int, Poly> cache;
    return cache;
}
std::mutex& cyclo_poly_mutex() {
    static std::mutex m;
    return m;
}

Poly cyclotomic_polynomial_impl(int n) {
    if (n == 1) return Poly{Rational(-1), Rational(1)};  // x - 1
    // x^n - 1
    Poly num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = Rational(-1);
    num[static_cast<size_t>(n)] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod_monic(std::move(num), cyclotomic_polynomial(d));
        if (!(r.size() == 1 && r[0].is_zero())) {
            throw InternalConsistencyError("cyclotomic polynomial division left a remainder");
        }
        num = std::move(q);
    }
    return num;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
    check_n(n);
    {
        std::lock_guard<std::mutex> lock(cyclo_poly_mutex());
        auto it = cyclo_poly_cache().find(n);
        if (it != cyclo_poly_cache().end()) return it->second;
    }
    // Compute outside the lock (the recursion takes the lock per level).
    Poly p = cyclotomic_polynomial_impl(n);
    std::lock_guard<std::mutex> lock(cyclo_poly_mutex());
    return cyclo_poly_cache().emplace(n, std::move(p)).first->second;
}

CycloElem cyclo_zero(int n) {
    check_n(n);
    return CycloElem(static_cast<size_t>(n), Rational(0));
}

CycloElem cyclo_one(int n) {
    CycloElem a = cyclo_zero(n);
    a[0] = Rational(1);
    return a;
}

CycloElem cyclo_from_rational(int n, const Rational& r) {
    CycloElem a = cyclo_zero(n);
    a[0] = r;
    return a;
}

CycloElem cyclo_zeta_pow(int n, long k) {
    CycloElem a = cyclo_zero(n);
    const long idx = ((k % n) + n) % n;
    a[static_cast<size_t>(idx)] = Rational(1);
    return a;
}

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b) {
    check_same_length(a, b, "cyclo_add");
    CycloElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b) {
    check_same_length(a, b, "cyclo_sub");
    CycloElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

CycloElem cyclo_neg(const CycloElem& a) {
    CycloElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

CycloElem cyclo_scale(const Rational& r, const CycloElem& a) {
    CycloElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = r * a[i];
    return out;
}

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) {
    check_same_length(a, b, "cyclo_mul");
    const size_t n = a.size();
    CycloElem out(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            out[(i + j) % n] += a[i] * b[j];
        }
    }
    return out;
}

ComplexF cyclo_embed(const CycloElem& a) {
    const double n = static_cast<double>(a.size());
    ComplexF z{0.0, 0.0};
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        z += a[k].to_double() *
             std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return z;
}

bool cyclo_is_zero(const CycloElem& a) {
    for (const Rational& x : a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

CycloElem cyclo_reduce(const CycloElem& a) {
    const int n = static_cast<int>(a.size());
    check_n(n);
    const Poly& phi = cyclotomic_polynomial(n);
    auto [q, r] = poly_divmod_monic(a, phi);
    (void)q;
    CycloElem out = cyclo_zero(n);
    for (size_t i = 0; i < r.size(); ++i) out[i] = r[i];
    return out;
}

bool cyclo_eq_embedded(const CycloElem& a, const CycloElem& b) {
    check_same_length(a, b, "cyclo_eq_embedded");
    return cyclo_is_zero(cyclo_reduce(cyclo_sub(a, b)));
}

std::optional<Rational> cyclo_rational_value(const CycloElem& a) {
    const CycloElem r = cyclo_reduce(a);
    for (size_t i = 1; i < r.size(); ++i) {
        if (!r[i].is_zero()) return std::nullopt;
    }
    return r[0];
}

std::string cyclo_str(const CycloElem& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        if (!first) os << " + ";
        os << a[k].str();
        if (k >= 1) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

const std::regex& complex_regex() {
    // "a", "a+bi", "a-bi": decimal reals with optional exponent; the
    // imaginary part requires an explicit magnitude (e.g. "3+1i", not "3+i").
    static const std::regex re(
        R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$)");
    return re;
}

}  // namespace

ComplexF parse_complex(std::string_view text) {
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, complex_regex())) {
        throw StructuralError("malformed complex literal '" + std::string(text) +
                              "' (expected a, a+bi, or a-bi)");
    }
    const double re = std::stod(m[1].str());
    const double im = m[2].matched ? std::stod(m[2].str()) : 0.0;
    return {re, im};
}

std::string format_complex(const ComplexF& z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

}  // namespace cherednik
