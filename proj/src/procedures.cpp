#include "procedures.hpp"

#include <algorithm>
#include <vector>

#include "errors.hpp"

namespace msfdr {

namespace {

// Keeps adaptive levels q* >= 1 meaningful: p-values of exactly 1 are never
// rejected, everything else is.
constexpr double kAlphaCap = 1.0 - 1e-12;

void check_level(double q) {
    if (!(q > 0.0 && q < 1.0)) throw Error(Errc::domain, "q must lie in (0,1)");
}

// Linear step-up schedule i*level/m capped at `cap`; `level` may exceed 1.
std::size_t capped_linear_step_up_k(std::span<const double> sorted, double level, double cap) {
    const std::size_t m = sorted.size();
    std::vector<double> alphas(m);
    for (std::size_t i = 1; i <= m; ++i)
        alphas[i - 1] = std::min(static_cast<double>(i) * level / static_cast<double>(m), cap);
    return step_up_k(sorted, alphas);
}

}  // namespace

RejectionSet bh_procedure(const OrderedPValues& ordered, double q) {
    check_level(q);
    if (ordered.size() == 0) return {};
    return step_up(ordered, bh_constants(ordered.size(), q));
}

RejectionSet ms_procedure(const OrderedPValues& ordered, double q) {
    check_level(q);
    if (ordered.size() == 0) return {};
    return step_down(ordered, ms_constants(ordered.size(), q, 1.0));
}

RejectionSet two_stage_bky(const OrderedPValues& ordered, double q) {
    check_level(q);
    const std::size_t m = ordered.size();
    if (m == 0) return {};
    const double q1 = q / (1.0 + q);
    const std::size_t r1 = step_up_k(ordered.sorted_values, bh_constants(m, q1).alphas);
    if (r1 == 0) return make_rejection_set(ordered, 0);
    if (r1 == m) return make_rejection_set(ordered, m);
    const double m0_hat = static_cast<double>(m - r1);
    const double q_star = q1 * static_cast<double>(m) / m0_hat;
    return make_rejection_set(ordered,
                              capped_linear_step_up_k(ordered.sorted_values, q_star, kAlphaCap));
}

RejectionSet sts_procedure(const OrderedPValues& ordered, double q, double lambda) {
    check_level(q);
    if (!(lambda > 0.0 && lambda < 1.0))
        throw Error(Errc::domain, "lambda must lie in (0,1)");
    const std::size_t m = ordered.size();
    if (m == 0) return {};
    const auto& sorted = ordered.sorted_values;
    const std::size_t r_lambda = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), lambda) - sorted.begin());
    const double m0_hat =
        (static_cast<double>(m) + 1.0 - static_cast<double>(r_lambda)) / (1.0 - lambda);
    const double q_star = q * static_cast<double>(m) / m0_hat;
    // capping at lambda enforces the p <= lambda selection requirement
    return make_rejection_set(ordered, capped_linear_step_up_k(sorted, q_star, lambda));
}

RejectionSet oracle_bh(const OrderedPValues& ordered, double q, std::size_t m0) {
    check_level(q);
    const std::size_t m = ordered.size();
    if (m0 > m) throw Error(Errc::domain, "m0 exceeds the number of hypotheses");
    if (m == 0) return {};
    if (m0 == 0) {
        // no true nulls exist: reject everything short of p = 1
        std::size_t k = m;
        while (k > 0 && ordered.sorted_values[k - 1] >= 1.0) --k;
        return make_rejection_set(ordered, k);
    }
    const double level = q * static_cast<double>(m) / static_cast<double>(m0);
    return make_rejection_set(ordered,
                              capped_linear_step_up_k(ordered.sorted_values, level, kAlphaCap));
}

RejectionSet prds_procedure(const OrderedPValues& ordered, double q) {
    check_level(q);
    if (ordered.size() == 0) return {};
    return step_down(ordered, prds_constants(ordered.size(), q));
}

RejectionSet apply_procedure(Procedure proc, const OrderedPValues& ordered,
                             const ProcedureParams& params) {
    switch (proc) {
        case Procedure::BH: return bh_procedure(ordered, params.q);
        case Procedure::TS: return two_stage_bky(ordered, params.q);
        case Procedure::MS: return ms_procedure(ordered, params.q);
        case Procedure::STS: return sts_procedure(ordered, params.q, params.lambda);
        case Procedure::ORC: return oracle_bh(ordered, params.q, params.m0);
        case Procedure::PRDS: return prds_procedure(ordered, params.q);
    }
    throw Error(Errc::invalid_argument, "unknown procedure");
}

RejectionSet bh_procedure(const PValueVector& pv, double q) {
    return bh_procedure(sort_pvalues(pv), q);
}
RejectionSet ms_procedure(const PValueVector& pv, double q) {
    return ms_procedure(sort_pvalues(pv), q);
}
RejectionSet two_stage_bky(const PValueVector& pv, double q) {
    return two_stage_bky(sort_pvalues(pv), q);
}
RejectionSet sts_procedure(const PValueVector& pv, double q, double lambda) {
    return sts_procedure(sort_pvalues(pv), q, lambda);
}
RejectionSet oracle_bh(const PValueVector& pv, double q, std::size_t m0) {
    return oracle_bh(sort_pvalues(pv), q, m0);
}
RejectionSet prds_procedure(const PValueVector& pv, double q) {
    return prds_procedure(sort_pvalues(pv), q);
}
RejectionSet apply_procedure(Procedure proc, const PValueVector& pv,
                             const ProcedureParams& params) {
    return apply_procedure(proc, sort_pvalues(pv), params);
}

}  // namespace msfdr
