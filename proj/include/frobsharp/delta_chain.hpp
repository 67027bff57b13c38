// Replays the singularity-degree recurrence
//   delta_n = p * delta_{n+1} + ((p-1)/2) * v_n
// over explicit towers of extension steps, and generates the two explicit
// example families together with their closed-form totals.
#pragma once

#include "frobsharp/integer.hpp"

#include <vector>

namespace frobsharp {

// Whether the prime at this level is ramified (residue field unchanged) or
// unramified (residue degree multiplies by p) over the next pullback.
enum class StepKind { Ramified, Unramified };

struct ExtensionStep {
    std::int64_t level = 0;   // the step from level n to n+1
    StepKind kind = StepKind::Unramified;
    Int diff_order;           // order of the relevant exact differential, >= 0

    friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

// A finite tower with a rational top: delta_h = 0, deg_h = 1, and the
// recurrence unrolled down to level 0. Invariants, checked at construction:
//   delta_n = p * delta_{n+1} + ((p-1)/2) * v_n
//   deg_n   = deg_{n+1} * p (unramified) or deg_{n+1} (ramified)
//   Delta_n = delta_n - delta_{n+1} >= 0, divisible by (p-1)/2 for odd p,
//   p * Delta_{n+1} <= Delta_n, and sum Delta_n = delta_0.
struct DeltaChain {
    Characteristic p;
    std::int64_t height = 1;
    std::vector<ExtensionStep> steps; // levels height-1 down to 0
    std::vector<Int> deltas;          // delta_0 .. delta_height
    std::vector<Int> degrees;         // deg_0 .. deg_height

    const Int& total_delta() const { return deltas.front(); }
    const Int& delta_at(std::int64_t level) const;
    const Int& degree_at(std::int64_t level) const;
    const ExtensionStep& step_at(std::int64_t level) const;
    Int partial_difference(std::int64_t level) const; // Delta_n
};

// Builds the chain from a full set of steps for levels 0..height-1 (any
// input order). Rejects gaps, duplicates, negative diff_order, odd
// diff_order when p = 2 (the factor (p-1)/2 must stay integral), and step
// lists whose resulting chain would violate a DeltaChain invariant.
DeltaChain simulate(const Characteristic& p, std::int64_t height,
                    std::vector<ExtensionStep> steps);

enum class Family { A, B };

// Parameters of the two example families.
//   Family A: i >= j > 0, r in {0..p-2}, ell >= 0  (r_prime unused)
//   Family B: i >  j > 0, r, r_prime in {0..p-2}, ell >= 0
struct ExampleParams {
    Family family = Family::A;
    Characteristic p;
    std::int64_t i = 1;
    std::int64_t j = 1;
    Int r;
    Int r_prime;
    Int ell;
};

struct FamilyChain {
    DeltaChain chain;
    // Family A: r*P_0^i + ell*P_j^i; Family B: r*P_0^i + P_j^i + r_prime*p^j
    // + ell*p^{j+1}. Always equals (2/(p-1)) * total_delta.
    Int expected_d;
};

// Builds the height-(i+1) chain realizing the family's delta formula:
// Family A is all-unramified with diff orders r + ell*p^j then r; Family B
// is unramified at level 0, ramified through level i-j, unramified above.
FamilyChain example_family(const ExampleParams& params);

// Degree bookkeeping stand-in for the residue-field argument: the level-i
// restriction is non-rational while level i+1 is rational.
bool non_rationality_witness(const DeltaChain& chain, std::int64_t i);

inline bool non_rationality_witness(const FamilyChain& fc, const ExampleParams& params) {
    return non_rationality_witness(fc.chain, params.i);
}

} // namespace frobsharp
