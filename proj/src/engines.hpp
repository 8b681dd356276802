#pragma once

#include <span>

#include "types.hpp"

namespace msfdr {

// Longest-prefix rule: k = max{ i : p_(j) <= alpha_j for all j <= i }, 0 when
// the first comparison already fails. Inputs must be sorted nondecreasing.
std::size_t step_down_k(std::span<const double> sorted_pvalues, std::span<const double> alphas);

// Last-crossing rule: k = max{ i : p_(i) <= alpha_i }, 0 when no index
// qualifies. Inputs must be sorted nondecreasing.
std::size_t step_up_k(std::span<const double> sorted_pvalues, std::span<const double> alphas);

// Builds the rejection set for ranks 1..k of an ordered vector.
RejectionSet make_rejection_set(const OrderedPValues& ordered, std::size_t k);

RejectionSet step_down(const OrderedPValues& ordered, const CriticalConstants& c);
RejectionSet step_up(const OrderedPValues& ordered, const CriticalConstants& c);

// Convenience overloads that sort first.
RejectionSet step_down(const PValueVector& pv, const CriticalConstants& c);
RejectionSet step_up(const PValueVector& pv, const CriticalConstants& c);

}  // namespace msfdr
