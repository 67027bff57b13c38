#include "frobsharp/partitions.hpp"

#include "frobsharp/bounds.hpp"
#include "frobsharp/core_arith.hpp"

#include <algorithm>
#include <limits>

namespace frobsharp {

Int Partition::sum() const {
    Int total = 0;
    for (const Int& part : parts) total += part;
    return total;
}

bool Partition::valid() const {
    if (parts.empty()) return false;
    for (const Int& part : parts) {
        if (part < 1) return false;
    }
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        if (p.value() * parts[k + 1] > parts[k]) return false;
    }
    // Geometric decay forces s <= floor(log_p d_1) + 1.
    std::size_t s = 0;
    for (Int c = parts.front(); c > 0; c /= p.value()) ++s;
    return parts.size() <= s;
}

namespace {

// Largest total reachable with a decay chain whose first part is <= c.
Int max_tail_sum(const Int& p, Int c) {
    Int total = 0;
    while (c > 0) {
        total += c;
        c /= p;
    }
    return total;
}

void enumerate(const Int& p, const Int& remaining, const Int& cap, std::vector<Int>& prefix,
               const std::function<void(std::span<const Int>)>& visit) {
    for (Int k = cap < remaining ? cap : remaining; k > 0; --k) {
        if (max_tail_sum(p, k) < remaining) break; // smaller k cannot reach the sum either
        prefix.push_back(k);
        if (k == remaining) {
            visit(std::span<const Int>(prefix.data(), prefix.size()));
        } else {
            enumerate(p, remaining - k, k / p, prefix, visit);
        }
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(const Characteristic& p, const Int& d,
                        const std::function<void(std::span<const Int>)>& visit) {
    if (d < 1) throw std::invalid_argument("for_each_partition: d must be >= 1");
    std::vector<Int> prefix;
    enumerate(p.value(), d, d, prefix, visit);
}

std::vector<Partition> enumerate_partitions(const Characteristic& p, const Int& d) {
    std::vector<Partition> result;
    for_each_partition(p, d, [&](std::span<const Int> parts) {
        result.push_back(Partition{p, {parts.begin(), parts.end()}});
    });
    return result;
}

namespace {

// Branch-and-bound maximization of s + min_valuation over the enumeration
// tree above, generic over the integer type (int64 fast path, Int fallback).
template <typename T>
class OracleSearch {
public:
    explicit OracleSearch(T p) : p_(p) {}

    std::int64_t run(const T& d) {
        best_ = 0;
        descend(d, d, 0, std::numeric_limits<std::int64_t>::max());
        return best_;
    }

private:
    std::int64_t valuation_of(T n) const {
        std::int64_t v = 0;
        while (n % p_ == 0) {
            n /= p_;
            ++v;
        }
        return v;
    }

    T max_tail(T c) const {
        T total = 0;
        while (c > 0) {
            total += c;
            c /= p_;
        }
        return total;
    }

    // Max added parts: the cheapest decay chain of length t sums to
    // 1 + p + ... + p^{t-1}, and parts <= cap force p^{t-1} <= cap.
    std::int64_t max_added_parts(const T& m, const T& cap) const {
        std::int64_t by_sum = 0;
        T chain = 0, pw = 1;
        while (chain + pw <= m) {
            chain += pw;
            pw *= p_;
            ++by_sum;
        }
        std::int64_t by_cap = 0;
        for (T c = cap; c > 0; c /= p_) ++by_cap;
        return std::min(by_sum, by_cap);
    }

    // Upper bound on (added parts) + min(v_cur, min valuation added) over
    // all extensions with parts <= cap summing to m: added parts of min
    // valuation w are all multiples of p^w, so p^w | m and the length bound
    // applies to m / p^w with cap / p^w.
    std::int64_t future_bound(T m, T cap, std::int64_t v_cur) const {
        std::int64_t bound = 0;
        std::int64_t w = 0;
        while (cap > 0) {
            if (max_tail(cap) >= m) {
                const std::int64_t t = max_added_parts(m, cap);
                if (t >= 1) bound = std::max(bound, std::min(v_cur, w) + t);
            }
            if (m % p_ != 0) break;
            m /= p_;
            cap /= p_;
            ++w;
        }
        return bound;
    }

    void descend(const T& m, const T& cap, std::int64_t parts, std::int64_t v_cur) {
        for (T k = cap < m ? cap : m; k > 0; --k) {
            if (max_tail(k) < m) break;
            const std::int64_t v_next = std::min(v_cur, valuation_of(k));
            if (k == m) {
                best_ = std::max(best_, parts + 1 + v_next);
                continue;
            }
            const T rest = m - k;
            const T next_cap = k / p_;
            if (parts + 1 + future_bound(rest, next_cap, v_next) > best_) {
                descend(rest, next_cap, parts + 1, v_next);
            }
        }
    }

    T p_;
    std::int64_t best_ = 0;
};

} // namespace

std::int64_t tau_oracle(const Characteristic& p, const Int& d) {
    if (d < 1) throw std::invalid_argument("tau_oracle: d must be >= 1");
    // All intermediate values stay <= 2d, so int64 is exact well below the
    // type's range; larger inputs take the arbitrary-precision path.
    static const Int kFastLimit = Int(1) << 60;
    if (d <= kFastLimit && p.value() <= kFastLimit) {
        OracleSearch<std::int64_t> search(static_cast<std::int64_t>(p.value()));
        return search.run(static_cast<std::int64_t>(d));
    }
    OracleSearch<Int> search(p.value());
    return search.run(d);
}

Int LemmaRepresentation::reconstruct(const Characteristic& p) const {
    if (form == Form::A) {
        return r * p_sum(p, 0, i) + ell * p_power(p, i);
    }
    return r * p_sum(p, 0, i) + p_sum(p, j, i) + r_prime * p_power(p, j) +
           ell * p_power(p, j + 1);
}

LemmaRepresentation decompose_lemma(const Characteristic& p, const Int& d, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("decompose_lemma: i must be >= 1");
    if (d < 1 || !is_admissible(p, d)) {
        throw std::invalid_argument("decompose_lemma: d must be admissible");
    }
    const Int r = d % p.value();
    if (r * p_sum(p, 0, i) + p_sum(p, 1, i) - 2 * p.value() >= d) {
        throw std::invalid_argument("decompose_lemma: hypothesis r*P_0^i + P_1^i - 2p < d fails");
    }

    LemmaRepresentation rep;
    rep.i = i;
    rep.r = r;

    // e > P_1^i - 2p and e = 0 mod p (P_0^i = 1 mod p), hence e >= 0.
    const Int e = d - r * p_sum(p, 0, i);
    if (e == 0) {
        rep.form = LemmaRepresentation::Form::A;
        rep.ell = 0;
        return rep;
    }
    const std::int64_t v = valuation(p, e);
    if (v == 0) throw std::logic_error("decompose_lemma: e coprime to p"); // impossible: p | e
    if (v >= i) {
        rep.form = LemmaRepresentation::Form::A;
        rep.ell = e / p_power(p, i);
        return rep;
    }
    rep.form = LemmaRepresentation::Form::B;
    rep.j = v;
    rep.r_prime = (e / p_power(p, v)) % p.value() - 1;
    rep.ell = (e - p_sum(p, v, i) - rep.r_prime * p_power(p, v)) / p_power(p, v + 1);
    if (rep.ell < 0) throw std::logic_error("decompose_lemma: negative ell"); // excluded by the hypothesis
    return rep;
}

} // namespace frobsharp
