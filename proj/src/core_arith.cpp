#include "frobsharp/core_arith.hpp"

namespace frobsharp {

Int p_power(const Characteristic& p, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("p_power: negative exponent");
    Int result = 1;
    for (std::int64_t k = 0; k < e; ++k) result *= p.value();
    return result;
}

Int p_sum(const Characteristic& p, std::int64_t j, std::int64_t i) {
    if (j < 0) throw std::invalid_argument("p_sum: j must be >= 0");
    if (i < j) return 0;
    // (p^{i+1} - p^j) / (p - 1); exact for every p >= 2.
    return (p_power(p, i + 1) - p_power(p, j)) / (p.value() - 1);
}

std::int64_t valuation(const Characteristic& p, const Int& n) {
    if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
    std::int64_t e = 0;
    Int m = n;
    while (m % p.value() == 0) {
        m /= p.value();
        ++e;
    }
    return e;
}

std::vector<Int> base_p_digits(const Characteristic& p, const Int& d) {
    if (d < 0) throw std::invalid_argument("base_p_digits: d must be >= 0");
    std::vector<Int> digits;
    Int m = d;
    while (m != 0) {
        digits.push_back(m % p.value());
        m /= p.value();
    }
    return digits;
}

std::optional<PSumIndex> consecutive_p_power_form(const Characteristic& p, const Int& d) {
    if (d < 1) throw std::invalid_argument("consecutive_p_power_form: d must be >= 1");
    // d = P_j^i  <=>  (p-1)d + p^j = p^{i+1} with j = v_p((p-1)d), since
    // (p-1)P_j^i = p^{i+1} - p^j and the second factor of p^j(p^{i+1-j} - 1)
    // is coprime to p.
    const Int scaled = (p.value() - 1) * d;
    const std::int64_t j = valuation(p, scaled);
    Int candidate = scaled + p_power(p, j);
    std::int64_t e = 0;
    while (candidate % p.value() == 0) {
        candidate /= p.value();
        ++e;
    }
    if (candidate != 1) return std::nullopt;
    return PSumIndex{j, e - 1};
}

std::int64_t ceil_log_p(const Characteristic& p, const Int& x) {
    if (x < 1) throw std::invalid_argument("ceil_log_p: x must be >= 1");
    std::int64_t n = 0;
    Int pw = 1;
    while (pw < x) {
        pw *= p.value();
        ++n;
    }
    return n;
}

} // namespace frobsharp
