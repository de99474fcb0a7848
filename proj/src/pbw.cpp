/// @file pbw.cpp
/// @brief Cached exact idempotents for the cyclic group algebra.

#include "cherednik/pbw.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace cherednik {
namespace detail {

namespace {

std::map<std::pair<int, long>, PBWElement<ExactMode>>& epsilon_cache() {
    static std::map<std::pair<int, long>, PBWElement<ExactMode>> cache;
    return cache;
}

std::mutex& epsilon_mutex() {
    static std::mutex m;
    return m;
}

PBWElement<ExactMode> build_epsilon(int n, long i) {
    PBWElement<ExactMode> e = pbw_zero<ExactMode>(n);
    const Rational inv_n(1, n);
    for (int l = 0; l < n; ++l) {
        pbw_add_term(e, PBWKey{0, l, 0},
                     cyclo_scale(inv_n, cyclo_zeta_pow(n, i * static_cast<long>(l))));
    }
    return e;
}

}  // namespace

PBWElement<ExactMode> epsilon_exact_cached(int n, long i) {
    if (n < 1) throw StructuralError("epsilon_element: order must be >= 1");
    const long idx = ((i % n) + n) % n;
    const std::pair<int, long> key{n, idx};
    std::lock_guard<std::mutex> lock(epsilon_mutex());
    auto it = epsilon_cache().find(key);
    if (it != epsilon_cache().end()) return it->second;
    return epsilon_cache().emplace(key, build_epsilon(n, idx)).first->second;
}

}  // namespace detail
}  // namespace cherednik
