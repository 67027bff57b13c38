// Admissibility, the pullback-count bound tau_p(d) in both closed forms,
// the sharp bound lambda_p(d) with its sharpness classification, the
// constructive lower bound, and the separability bound.
#pragma once

#include "frobsharp/integer.hpp"

#include <optional>

namespace frobsharp {

enum class Sharpness { Sharp, NonSharp };

// Full per-(p, d) record. r, lambda and classification are present iff d is
// admissible; witness_i is present iff classification is NonSharp.
struct BoundReport {
    Int p;
    Int d;
    bool admissible = false;
    std::optional<Int> r;
    std::int64_t tau = 0;
    std::optional<std::int64_t> lambda;
    std::optional<Sharpness> classification;
    std::optional<std::int64_t> witness_i;
};

// d is admissible iff d mod p != p - 1. Requires d >= 1.
bool is_admissible(const Characteristic& p, const Int& d);

// tau via the case split on P-sum windows: i+1 if d = P_j^i, else the unique
// i with P_0^{i-1} < d < P_0^i.
std::int64_t tau_piecewise(const Characteristic& p, const Int& d);

// tau via ceil(log_p((p-1)d + 1)), minus one when d is not a consecutive
// p-power sum. Agrees with tau_piecewise; kept as an independent route.
std::int64_t tau_log(const Characteristic& p, const Int& d);

// Total report for any d >= 1; non-admissible d gets tau only.
BoundReport bound_report(const Characteristic& p, const Int& d);

// The sharp bound lambda_p(d). Rejects non-admissible d: lambda is only
// defined there, and a sentinel would poison downstream tables.
//
// lambda = tau - 1 exactly when some i > 1 has P_0^{i-1} < d < (r+1)P_0^{i-1}
// and d avoids every r*P_0^{i-1} + P_j^{i-1} for 0 < j <= i (with
// P_i^{i-1} = 0); otherwise lambda = tau.
BoundReport lambda(const Characteristic& p, const Int& d);

// 1 + max{ i > 0 : r*P_0^i + P_1^i - 2p < d }, or 1 when no i qualifies.
// A certified lower bound: lemma_lower_bound(p, d) <= lambda_p(d).
// Rejects non-admissible d.
std::int64_t lemma_lower_bound(const Characteristic& p, const Int& d);

// A singularity degree delta and the separable residue degree it is spread
// over. 2*delta must be divisible by (p-1)*sep_degree.
struct SeparabilityQuery {
    Int delta;
    Int sep_degree;
    Characteristic p;
};

// lambda_p of the reduced integer 2*delta / ((p-1)*sep_degree). A smooth
// point (delta = 0) needs no pullbacks, so the result is 0 by convention.
// Rejects queries violating the divisibility invariant and non-admissible
// reduced values.
std::int64_t sep_bound(const SeparabilityQuery& q);

} // namespace frobsharp
