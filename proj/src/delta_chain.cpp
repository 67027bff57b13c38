#include "frobsharp/delta_chain.hpp"

#include "frobsharp/core_arith.hpp"

#include <algorithm>

namespace frobsharp {

namespace {

void check_level(std::int64_t level, std::int64_t height, const char* what) {
    if (level < 0 || level > height) {
        throw std::out_of_range(std::string(what) + ": level out of range");
    }
}

} // namespace

const Int& DeltaChain::delta_at(std::int64_t level) const {
    check_level(level, height, "delta_at");
    return deltas[static_cast<std::size_t>(level)];
}

const Int& DeltaChain::degree_at(std::int64_t level) const {
    check_level(level, height, "degree_at");
    return degrees[static_cast<std::size_t>(level)];
}

const ExtensionStep& DeltaChain::step_at(std::int64_t level) const {
    if (level < 0 || level >= height) throw std::out_of_range("step_at: level out of range");
    // steps run from level height-1 down to 0
    return steps[static_cast<std::size_t>(height - 1 - level)];
}

Int DeltaChain::partial_difference(std::int64_t level) const {
    if (level < 0 || level >= height) {
        throw std::out_of_range("partial_difference: level out of range");
    }
    return delta_at(level) - delta_at(level + 1);
}

DeltaChain simulate(const Characteristic& p, std::int64_t height,
                    std::vector<ExtensionStep> steps) {
    if (height < 1) throw std::invalid_argument("simulate: height must be >= 1");
    if (std::cmp_not_equal(steps.size(), height)) {
        throw std::invalid_argument("simulate: need exactly one step per level 0..height-1");
    }
    std::sort(steps.begin(), steps.end(),
              [](const ExtensionStep& a, const ExtensionStep& b) { return a.level > b.level; });
    for (std::int64_t n = 0; n < height; ++n) {
        const ExtensionStep& step = steps[static_cast<std::size_t>(height - 1 - n)];
        if (step.level != n) {
            throw std::invalid_argument("simulate: step levels must cover 0..height-1 exactly once");
        }
        if (step.diff_order < 0) {
            throw std::invalid_argument("simulate: diff_order must be >= 0");
        }
        if (p.value() == 2 && step.diff_order % 2 != 0) {
            throw std::invalid_argument(
                "simulate: p = 2 requires even diff_order (the factor (p-1)/2 is 1/2)");
        }
    }

    DeltaChain chain{p, height, std::move(steps), {}, {}};
    const std::size_t h = static_cast<std::size_t>(height);
    chain.deltas.assign(h + 1, 0);
    chain.degrees.assign(h + 1, 1);

    for (std::int64_t n = height - 1; n >= 0; --n) {
        const ExtensionStep& step = chain.step_at(n);
        const std::size_t at = static_cast<std::size_t>(n);
        // (p-1)*v is even here for every p (validated above for p = 2).
        chain.deltas[at] =
            p.value() * chain.deltas[at + 1] + (p.value() - 1) * step.diff_order / 2;
        chain.degrees[at] = step.kind == StepKind::Unramified
                                ? chain.degrees[at + 1] * p.value()
                                : chain.degrees[at + 1];
    }

    // Delta-decay: p*Delta_{n+1} <= Delta_n, equivalent to non-increasing
    // diff orders; arbitrary step lists can break it, the type cannot.
    for (std::int64_t n = 0; n + 1 < height; ++n) {
        if (p.value() * chain.partial_difference(n + 1) > chain.partial_difference(n)) {
            throw std::invalid_argument(
                "simulate: diff orders violate the partial-difference decay p*D_{n+1} <= D_n");
        }
    }

    // Closed-form unrolling of the recurrence.
    Int weighted = 0;
    for (std::int64_t n = 0; n < height; ++n) {
        weighted += chain.step_at(n).diff_order * p_power(p, n);
    }
    if (chain.total_delta() * 2 != (p.value() - 1) * weighted) {
        throw std::logic_error("simulate: recurrence disagrees with closed-form total");
    }
    return chain;
}

namespace {

void check_family_params(const ExampleParams& params) {
    const Int& pv = params.p.value();
    if (params.j < 1) throw std::invalid_argument("example_family: j must be > 0");
    if (params.family == Family::A) {
        if (params.i < params.j) throw std::invalid_argument("example_family: family A needs i >= j");
    } else {
        if (params.i <= params.j) throw std::invalid_argument("example_family: family B needs i > j");
        if (params.r_prime < 0 || params.r_prime > pv - 2) {
            throw std::invalid_argument("example_family: r_prime must lie in {0,...,p-2}");
        }
    }
    if (params.r < 0 || params.r > pv - 2) {
        throw std::invalid_argument("example_family: r must lie in {0,...,p-2}");
    }
    if (params.ell < 0) throw std::invalid_argument("example_family: ell must be >= 0");
}

} // namespace

FamilyChain example_family(const ExampleParams& params) {
    check_family_params(params);
    const Characteristic& p = params.p;
    const std::int64_t i = params.i;
    const std::int64_t j = params.j;

    std::vector<ExtensionStep> steps;
    steps.reserve(static_cast<std::size_t>(i + 1));
    Int expected_d;
    if (params.family == Family::A) {
        const Int low_order = params.r + params.ell * p_power(p, j);
        for (std::int64_t n = 0; n <= i; ++n) {
            steps.push_back({n, StepKind::Unramified, n <= i - j ? low_order : params.r});
        }
        expected_d = params.r * p_sum(p, 0, i) + params.ell * p_sum(p, j, i);
    } else {
        const Int top_order =
            (params.r_prime + 1) * p_power(p, j) + params.r + params.ell * p_power(p, j + 1);
        const Int mid_order = p_power(p, j) + params.r;
        steps.push_back({0, StepKind::Unramified, top_order});
        for (std::int64_t n = 1; n <= i - j; ++n) {
            steps.push_back({n, StepKind::Ramified, mid_order});
        }
        for (std::int64_t n = i - j + 1; n <= i; ++n) {
            steps.push_back({n, StepKind::Unramified, params.r});
        }
        expected_d = params.r * p_sum(p, 0, i) + p_sum(p, j, i) +
                     params.r_prime * p_power(p, j) + params.ell * p_power(p, j + 1);
    }

    FamilyChain fc{simulate(p, i + 1, std::move(steps)), std::move(expected_d)};
    if (fc.chain.total_delta() * 2 != (p.value() - 1) * fc.expected_d) {
        throw std::logic_error("example_family: total disagrees with the closed delta formula");
    }
    return fc;
}

bool non_rationality_witness(const DeltaChain& chain, std::int64_t i) {
    if (i < 0 || i + 1 > chain.height) return false;
    return chain.degree_at(i) > 1 && chain.degree_at(i + 1) == 1;
}

} // namespace frobsharp
