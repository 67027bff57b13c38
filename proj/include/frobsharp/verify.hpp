// Exhaustive cross-validation sweep: for every admissible d up to a cap,
// both closed tau forms, the partition oracle, the sharpness window, the
// lemma lower bound and the mod-p corollaries must agree.
#pragma once

#include "frobsharp/integer.hpp"

#include <string>
#include <vector>

namespace frobsharp {

struct Mismatch {
    Int p;
    Int d;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t values_checked = 0; // admissible d examined
    std::vector<Mismatch> mismatches; // ordered by (position of p in input, d)
};

// Runs the sweep for each characteristic over 1 <= d <= d_max. Work fans
// out over up to `threads` workers; results are merged in d-ascending order
// so the report is identical for every thread count.
VerifyReport run_verify(const std::vector<Characteristic>& ps, const Int& d_max,
                        unsigned threads = 1);

// Worker cap: FROBSHARP_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned worker_limit();

} // namespace frobsharp
