#include "core/jacobsthal.hpp"

#include <stdexcept>
#include <string>

namespace bfly {

std::int64_t jacobsthal(int n) {
    if (n < 0 || n > kJacobsthalMax) {
        throw std::invalid_argument("jacobsthal: index out of range: " + std::to_string(n));
    }
    std::int64_t a = 0, b = 1;  // J_0, J_1
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        std::int64_t next = b + 2 * a;
        a = b;
        b = next;
    }
    return b;
}

TheoremValues theorem_formulas(int r) {
    if (r < 1 || r > 56) {
        throw std::invalid_argument("theorem_formulas: r out of range: " + std::to_string(r));
    }
    const std::int64_t pow2 = std::int64_t{1} << r;
    const std::int64_t sign = (r % 2 == 0) ? 1 : -1;

    const std::int64_t mr_num = 2 * ((3 * std::int64_t{r} + 1) * pow2 - sign);
    const std::int64_t z_num = (3 * std::int64_t{r} + 7) * pow2 + 2 * sign;
    if (mr_num % 9 != 0 || z_num % 9 != 0) {
        throw std::logic_error("theorem_formulas: division by 9 not exact");
    }
    return TheoremValues{mr_num / 9, z_num / 9};
}

std::int64_t forcing_set_size(int r) { return theorem_formulas(r).zero_forcing; }

}  // namespace bfly
