/// @file modules.cpp
/// @brief Frozen graded-basis orders for the two modules.

#include "cherednik/modules.hpp"

namespace cherednik {

std::vector<BasisKey> graded_basis(ModuleTag tag, long k, int n) {
    if (n < 1) throw StructuralError("graded_basis: n must be at least 1");
    std::vector<BasisKey> out;
    if (k < 1 - static_cast<long>(n)) return out;
    if (tag == ModuleTag::delta) {
        const long j_min = k >= 0 ? 0 : -k;
        for (long j = n - 1; j >= j_min; --j) out.push_back(BasisKey{k + j, j});
    } else {
        const long j_max = std::min<long>(n - 1, k + n - 1);
        for (long j = 0; j <= j_max; ++j) out.push_back(BasisKey{k + n - 1 - j, j});
    }
    return out;
}

}  // namespace cherednik
