#include "frobsharp/bounds.hpp"

#include "frobsharp/core_arith.hpp"

namespace frobsharp {

namespace {

void require_positive(const Int& d, const char* op) {
    if (d < 1) throw std::invalid_argument(std::string(op) + ": d must be >= 1");
}

void require_admissible(const Characteristic& p, const Int& d, const char* op) {
    require_positive(d, op);
    if (!is_admissible(p, d)) {
        throw std::invalid_argument(std::string(op) + ": non-admissible d = " + d.str() +
                                    " (d = -1 mod " + p.value().str() + ")");
    }
}

} // namespace

bool is_admissible(const Characteristic& p, const Int& d) {
    require_positive(d, "is_admissible");
    return d % p.value() != p.value() - 1;
}

std::int64_t tau_piecewise(const Characteristic& p, const Int& d) {
    require_positive(d, "tau_piecewise");
    if (auto form = consecutive_p_power_form(p, d)) {
        return form->i + 1;
    }
    // Not a P-sum, so P_0^{i-1} < d < P_0^i for exactly one i.
    std::int64_t i = 1;
    while (p_sum(p, 0, i) < d) ++i;
    return i;
}

std::int64_t tau_log(const Characteristic& p, const Int& d) {
    require_positive(d, "tau_log");
    const std::int64_t n = ceil_log_p(p, (p.value() - 1) * d + 1);
    return consecutive_p_power_form(p, d) ? n : n - 1;
}

BoundReport bound_report(const Characteristic& p, const Int& d) {
    require_positive(d, "bound_report");
    BoundReport report;
    report.p = p.value();
    report.d = d;
    report.tau = tau_piecewise(p, d);
    report.admissible = is_admissible(p, d);
    if (!report.admissible) return report;

    const Int r = d % p.value();
    report.r = r;

    // Window scan for the non-sharpness witness. The windows
    // (P_0^{i-1}, (r+1)P_0^{i-1}) are nested inside the disjoint intervals
    // (P_0^{i-1}, P_0^i), so at most one i can hit; scanned in full anyway
    // and the uniqueness asserted.
    std::optional<std::int64_t> witness;
    int window_hits = 0;
    for (std::int64_t i = 2; i <= report.tau + 1; ++i) {
        const Int base = p_sum(p, 0, i - 1);
        if (!(base < d && d < (r + 1) * base)) continue;
        if (++window_hits > 1) throw std::logic_error("bound_report: non-unique sharpness window");
        bool excluded = false;
        for (std::int64_t j = 1; j <= i; ++j) {
            if (d == r * base + p_sum(p, j, i - 1)) {
                excluded = true;
                break;
            }
        }
        if (!excluded) witness = i;
    }

    if (witness) {
        report.classification = Sharpness::NonSharp;
        report.witness_i = *witness;
        report.lambda = report.tau - 1;
    } else {
        report.classification = Sharpness::Sharp;
        report.lambda = report.tau;
    }
    return report;
}

BoundReport lambda(const Characteristic& p, const Int& d) {
    require_admissible(p, d, "lambda");
    return bound_report(p, d);
}

std::int64_t lemma_lower_bound(const Characteristic& p, const Int& d) {
    require_admissible(p, d, "lemma_lower_bound");
    const Int r = d % p.value();
    // r*P_0^i + P_1^i - 2p is strictly increasing in i, so the qualifying i
    // form a prefix of 1, 2, ...
    std::int64_t bound = 1;
    for (std::int64_t i = 1;; ++i) {
        if (r * p_sum(p, 0, i) + p_sum(p, 1, i) - 2 * p.value() >= d) break;
        bound = i + 1;
    }
    return bound;
}

std::int64_t sep_bound(const SeparabilityQuery& q) {
    if (q.delta < 0) throw std::invalid_argument("sep_bound: delta must be >= 0");
    if (q.sep_degree < 1) throw std::invalid_argument("sep_bound: sep_degree must be >= 1");
    if (q.delta == 0) return 0;
    const Int divisor = (q.p.value() - 1) * q.sep_degree;
    if (2 * q.delta % divisor != 0) {
        throw std::invalid_argument("sep_bound: 2*delta not divisible by (p-1)*sep_degree");
    }
    const Int d = 2 * q.delta / divisor;
    return *lambda(q.p, d).lambda;
}

} // namespace frobsharp
