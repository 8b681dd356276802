#pragma once

#include "constants.hpp"
#include "engines.hpp"
#include "types.hpp"

namespace msfdr {

// Parameters consumed by apply_procedure; lambda is read only by STS and
// m0 only by ORC.
struct ProcedureParams {
    double q = 0.05;
    double lambda = 0.5;
    std::size_t m0 = 0;
};

// Linear step-up at level q.
RejectionSet bh_procedure(const OrderedPValues& ordered, double q);

// Step-down with the multiple-stage adaptive constants.
RejectionSet ms_procedure(const OrderedPValues& ordered, double q);

// Two-stage adaptive step-up: stage one at q' = q/(1+q) estimates the number
// of true nulls as m - r1, stage two reruns the linear step-up at q'*m/(m-r1).
RejectionSet two_stage_bky(const OrderedPValues& ordered, double q);

// Adaptive lambda-based step-up: m0 is estimated as (m+1-r(lambda))/(1-lambda)
// and the step-up runs at q*m/m0hat with constants capped at lambda, which also
// bars any p-value above lambda from rejection.
RejectionSet sts_procedure(const OrderedPValues& ordered, double q, double lambda = 0.5);

// Linear step-up at level q*m/m0 with the true null count m0. With m0 = 0
// every hypothesis with p < 1 is rejected.
RejectionSet oracle_bh(const OrderedPValues& ordered, double q, std::size_t m0);

// Step-down with the positive-dependence-safe constants.
RejectionSet prds_procedure(const OrderedPValues& ordered, double q);

RejectionSet apply_procedure(Procedure proc, const OrderedPValues& ordered,
                             const ProcedureParams& params);

// Convenience overloads that sort first.
RejectionSet bh_procedure(const PValueVector& pv, double q);
RejectionSet ms_procedure(const PValueVector& pv, double q);
RejectionSet two_stage_bky(const PValueVector& pv, double q);
RejectionSet sts_procedure(const PValueVector& pv, double q, double lambda = 0.5);
RejectionSet oracle_bh(const PValueVector& pv, double q, std::size_t m0);
RejectionSet prds_procedure(const PValueVector& pv, double q);
RejectionSet apply_procedure(Procedure proc, const PValueVector& pv,
                             const ProcedureParams& params);

}  // namespace msfdr
