// Geometric-decay partitions of d (p * d_{k+1} <= d_k), the brute-force
// partition maximum that cross-validates tau, and the constructive
// two-form decomposition behind the lower-bound lemma.
#pragma once

#include "frobsharp/integer.hpp"

#include <functional>
#include <span>
#include <vector>

namespace frobsharp {

struct Partition {
    Characteristic p;
    std::vector<Int> parts; // descending, p * parts[k+1] <= parts[k]

    Int sum() const;
    // Type invariants: nonempty positive parts, geometric decay, and the
    // forced length bound s <= floor(log_p parts[0]) + 1.
    bool valid() const;
};

// Visits every partition of d with p * d_{k+1} <= d_k exactly once, in
// lexicographically decreasing order of the part lists ([d] first).
// The span is only valid during the call.
void for_each_partition(const Characteristic& p, const Int& d,
                        const std::function<void(std::span<const Int>)>& visit);

std::vector<Partition> enumerate_partitions(const Characteristic& p, const Int& d);

// max{ s + min(v_p(d_1), ..., v_p(d_s)) } over all decay-constrained
// partitions d = d_1 + ... + d_s, by branch-and-bound over the full
// enumeration tree. Never consults the closed forms in bounds.
std::int64_t tau_oracle(const Characteristic& p, const Int& d);

// A decomposition of d produced by decompose_lemma:
//   Form A:  d = r*P_0^i + ell*p^i
//   Form B:  d = r*P_0^i + P_j^i + r_prime*p^j + ell*p^{j+1},  0 < j < i
// j and r_prime are meaningful for Form B only.
struct LemmaRepresentation {
    enum class Form { A, B };
    Form form = Form::A;
    std::int64_t i = 0;
    std::int64_t j = 0;
    Int r;
    Int r_prime;
    Int ell;

    // Re-evaluates the representation; equals the decomposed d.
    Int reconstruct(const Characteristic& p) const;
};

// Finds the Form A / Form B representation of d at level i, resolving the
// ambiguity by the valuation of e = d - r*P_0^i: Form B iff 0 < v_p(e) < i.
// Requires d admissible and the lemma hypothesis r*P_0^i + P_1^i - 2p < d.
LemmaRepresentation decompose_lemma(const Characteristic& p, const Int& d, std::int64_t i);

} // namespace frobsharp
