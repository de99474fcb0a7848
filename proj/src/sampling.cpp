/// @file sampling.cpp
/// @brief Seeded random scalar generation.

#include "cherednik/sampling.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

Rational random_rational(std::mt19937_64& rng, long max_height) {
    if (max_height < 1) throw PreconditionError("random_rational needs max_height >= 1");
    std::uniform_int_distribution<long> num(-max_height, max_height);
    std::uniform_int_distribution<long> den(1, max_height);
    return Rational(num(rng), den(rng));
}

Rational random_integer_rational(std::mt19937_64& rng, long max_height) {
    if (max_height < 1) throw PreconditionError("random_integer_rational needs max_height >= 1");
    std::uniform_int_distribution<long> num(-max_height, max_height);
    return Rational(num(rng));
}

RatParams random_rat_params(std::mt19937_64& rng, int n, long max_height) {
    std::vector<Rational> c;
    for (int i = 0; i + 1 < n; ++i) c.push_back(random_rational(rng, max_height));
    c.push_back(Rational(0));
    return make_params<Rational>(n, c);
}

RatParams random_integer_params(std::mt19937_64& rng, int n, long max_height) {
    std::vector<Rational> c;
    for (int i = 0; i + 1 < n; ++i) c.push_back(random_integer_rational(rng, max_height));
    c.push_back(Rational(0));
    return make_params<Rational>(n, c);
}

CxParams random_cx_params(std::mt19937_64& rng, int n, double radius) {
    std::uniform_real_distribution<double> coord(-radius, radius);
    std::vector<ComplexF> c;
    for (int i = 0; i + 1 < n; ++i) c.emplace_back(coord(rng), coord(rng));
    c.emplace_back(0.0, 0.0);
    return make_params<ComplexF>(n, c);
}

RatParams random_semisimple_params(std::mt19937_64& rng, int n, long max_height) {
    // With p prime and p > n, the offsets i/p keep every difference
    // c_i - c_j - (j - i) (i != j) away from the integers, so no congruence
    // mod n can hold regardless of the integer parts.
    long p = static_cast<long>(n) + 1;
    auto is_prime = [](long v) {
        if (v < 2) return false;
        for (long d = 2; d * d <= v; ++d) {
            if (v % d == 0) return false;
        }
        return true;
    };
    while (!is_prime(p)) ++p;
    std::vector<Rational> c;
    for (int i = 1; i < n; ++i) {
        c.push_back(random_integer_rational(rng, max_height) + Rational(i, p));
    }
    c.push_back(Rational(0));
    return make_params<Rational>(n, c);
}

}  // namespace cherednik
