#include "engines.hpp"

#include "errors.hpp"

namespace msfdr {

namespace {
void check_lengths(std::size_t np, std::size_t na) {
    if (np != na)
        throw Error(Errc::length_mismatch, "p-value and constants lengths differ");
}
}  // namespace

std::size_t step_down_k(std::span<const double> sorted_pvalues, std::span<const double> alphas) {
    check_lengths(sorted_pvalues.size(), alphas.size());
    std::size_t k = 0;
    while (k < sorted_pvalues.size() && sorted_pvalues[k] <= alphas[k]) ++k;
    return k;
}

std::size_t step_up_k(std::span<const double> sorted_pvalues, std::span<const double> alphas) {
    check_lengths(sorted_pvalues.size(), alphas.size());
    for (std::size_t i = sorted_pvalues.size(); i > 0; --i) {
        if (sorted_pvalues[i - 1] <= alphas[i - 1]) return i;
    }
    return 0;
}

RejectionSet make_rejection_set(const OrderedPValues& ordered, std::size_t k) {
    RejectionSet rs;
    rs.k = k;
    rs.rejected_ids.assign(ordered.rank_to_id.begin(),
                           ordered.rank_to_id.begin() + static_cast<std::ptrdiff_t>(k));
    rs.threshold = k > 0 ? ordered.sorted_values[k - 1] : 0.0;
    return rs;
}

RejectionSet step_down(const OrderedPValues& ordered, const CriticalConstants& c) {
    return make_rejection_set(ordered, step_down_k(ordered.sorted_values, c.alphas));
}

RejectionSet step_up(const OrderedPValues& ordered, const CriticalConstants& c) {
    return make_rejection_set(ordered, step_up_k(ordered.sorted_values, c.alphas));
}

RejectionSet step_down(const PValueVector& pv, const CriticalConstants& c) {
    return step_down(sort_pvalues(pv), c);
}

RejectionSet step_up(const PValueVector& pv, const CriticalConstants& c) {
    return step_up(sort_pvalues(pv), c);
}

}  // namespace msfdr
