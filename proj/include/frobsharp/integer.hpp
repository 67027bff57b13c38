// Exact integer foundation: arbitrary-precision Int, the prime
// characteristic, and the index pair (j, i) of a consecutive p-power sum.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace frobsharp {

using Int = boost::multiprecision::cpp_int;

namespace detail {

// Deterministic trial division; exact for any size, fast for the small
// characteristics that actually occur.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

} // namespace detail

// The ambient characteristic p, validated prime at construction.
class Characteristic {
public:
    explicit Characteristic(Int p) : p_(std::move(p)) {
        if (!detail::is_prime(p_)) {
            throw std::invalid_argument("characteristic must be a prime >= 2: " + p_.str());
        }
    }

    const Int& value() const noexcept { return p_; }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;

private:
    Int p_;
};

// Index pair of the sum P_j^i = p^j + ... + p^i; the empty sum (i < j) is 0.
struct PSumIndex {
    std::int64_t j = 0;
    std::int64_t i = -1;

    friend bool operator==(const PSumIndex&, const PSumIndex&) = default;
};

} // namespace frobsharp
