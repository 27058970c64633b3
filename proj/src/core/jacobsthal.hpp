#ifndef BUTTERFLY_CORE_JACOBSTHAL_HPP
#define BUTTERFLY_CORE_JACOBSTHAL_HPP

#include <cstdint>

namespace bfly {

// J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2*J_{n-2}.
// Equivalently J_n = (2^n - (-1)^n)/3, so values fit in int64 up to n = 63.
std::int64_t jacobsthal(int n);

// Largest n for which jacobsthal(n) is representable.
inline constexpr int kJacobsthalMax = 63;

struct TheoremValues {
    std::int64_t min_rank;      // (2/9)[(3r+1)2^r - (-1)^r]
    std::int64_t zero_forcing;  // (1/9)[(3r+7)2^r + 2(-1)^r]
};

// Both closed forms; min_rank + zero_forcing == (r+1)*2^r.
// Throws std::invalid_argument if r < 1 or the values would overflow.
TheoremValues theorem_formulas(int r);

// |S^(r)|, identical to theorem_formulas(r).zero_forcing.
std::int64_t forcing_set_size(int r);

}  // namespace bfly

#endif
