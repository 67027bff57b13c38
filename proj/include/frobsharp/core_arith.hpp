// p-power sums, p-adic valuations, base-p digits and consecutive
// p-power-sum detection, all in exact arbitrary-precision arithmetic.
#pragma once

#include "frobsharp/integer.hpp"

#include <optional>
#include <vector>

namespace frobsharp {

// p^e for e >= 0.
Int p_power(const Characteristic& p, std::int64_t e);

// P_j^i = p^j + ... + p^i; 0 when i < j. Requires j >= 0.
Int p_sum(const Characteristic& p, std::int64_t j, std::int64_t i);

inline Int p_sum(const Characteristic& p, const PSumIndex& idx) {
    return p_sum(p, idx.j, idx.i);
}

// Largest e with p^e | n. Requires n >= 1 (the valuation of 0 is infinite).
std::int64_t valuation(const Characteristic& p, const Int& n);

// Base-p digits of d >= 0, least significant first, no trailing zeros;
// d = 0 gives the empty list.
std::vector<Int> base_p_digits(const Characteristic& p, const Int& d);

// The unique (j, i) with 0 <= j <= i and d = P_j^i, if d >= 1 is such a sum.
std::optional<PSumIndex> consecutive_p_power_form(const Characteristic& p, const Int& d);

// Smallest n >= 0 with p^n >= x, by exact power scan. Requires x >= 1.
std::int64_t ceil_log_p(const Characteristic& p, const Int& x);

} // namespace frobsharp
