#include "msfdr/msfdr.h"

#include <algorithm>
#include <new>
#include <vector>

#include "constants.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "procedures.hpp"
#include "simulate.hpp"
#include "types.hpp"

namespace {

using namespace msfdr;

msfdr_status to_status(Errc code) {
    switch (code) {
        case Errc::invalid_pvalue: return MSFDR_ERROR_INVALID_PVALUE;
        case Errc::length_mismatch: return MSFDR_ERROR_LENGTH_MISMATCH;
        case Errc::domain: return MSFDR_ERROR_DOMAIN;
        case Errc::size_guard: return MSFDR_ERROR_SIZE_GUARD;
        case Errc::tolerance: return MSFDR_ERROR_TOLERANCE;
        case Errc::invalid_argument: return MSFDR_ERROR_INVALID_ARGUMENT;
    }
    return MSFDR_ERROR_INVALID_ARGUMENT;
}

template <typename F>
msfdr_status guarded(F&& f) {
    try {
        f();
        return MSFDR_OK;
    } catch (const Error& e) {
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        return MSFDR_ERROR_INVALID_ARGUMENT;
    } catch (...) {
        return MSFDR_ERROR_INVALID_ARGUMENT;
    }
}

// Copies a rejection outcome into the caller's buffers.
void emit(const PValueVector& pv, const OrderedPValues& ordered, const RejectionSet& rs,
          uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k, double* out_threshold) {
    const std::size_t m = pv.size();
    if (out_rejected) {
        std::fill(out_rejected, out_rejected + m, uint8_t{0});
        for (std::uint32_t id : rs.rejected_ids) out_rejected[id] = 1;
    }
    if (out_ranks) {
        for (std::size_t r = 0; r < m; ++r)
            out_ranks[ordered.rank_to_id[r]] = static_cast<uint32_t>(r + 1);
    }
    if (out_k) *out_k = rs.k;
    if (out_threshold) *out_threshold = rs.threshold;
}

bool to_procedure(msfdr_procedure proc, Procedure& out) {
    switch (proc) {
        case MSFDR_PROC_BH: out = Procedure::BH; return true;
        case MSFDR_PROC_TS: out = Procedure::TS; return true;
        case MSFDR_PROC_MS: out = Procedure::MS; return true;
        case MSFDR_PROC_STS: out = Procedure::STS; return true;
        case MSFDR_PROC_ORC: out = Procedure::ORC; return true;
        case MSFDR_PROC_PRDS: out = Procedure::PRDS; return true;
    }
    return false;
}

msfdr_procedure from_procedure(Procedure proc) {
    switch (proc) {
        case Procedure::BH: return MSFDR_PROC_BH;
        case Procedure::TS: return MSFDR_PROC_TS;
        case Procedure::MS: return MSFDR_PROC_MS;
        case Procedure::STS: return MSFDR_PROC_STS;
        case Procedure::ORC: return MSFDR_PROC_ORC;
        case Procedure::PRDS: return MSFDR_PROC_PRDS;
    }
    return MSFDR_PROC_BH;
}

msfdr_status run_engine(bool down, const double* pvalues, const double* alphas, size_t m,
                        uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k,
                        double* out_threshold) {
    if ((!pvalues || !alphas) && m > 0) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        PValueVector pv = PValueVector::from_values(std::vector<double>(pvalues, pvalues + m));
        CriticalConstants c;
        c.alphas.assign(alphas, alphas + m);
        OrderedPValues ordered = sort_pvalues(pv);
        RejectionSet rs = down ? step_down(ordered, c) : step_up(ordered, c);
        emit(pv, ordered, rs, out_rejected, out_ranks, out_k, out_threshold);
    });
}

}  // namespace

extern "C" {

const char* msfdr_strerror(msfdr_status status) {
    switch (status) {
        case MSFDR_OK: return "ok";
        case MSFDR_ERROR_NULL_POINTER: return "null pointer argument";
        case MSFDR_ERROR_INVALID_PVALUE: return "p-value outside [0,1] or not finite";
        case MSFDR_ERROR_LENGTH_MISMATCH: return "input lengths differ";
        case MSFDR_ERROR_DOMAIN: return "parameter outside its legal range";
        case MSFDR_ERROR_SIZE_GUARD: return "input too large for this routine";
        case MSFDR_ERROR_TOLERANCE: return "quadrature failed to converge";
        case MSFDR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    }
    return "unknown status";
}

const char* msfdr_version(void) { return "1.0.0"; }

msfdr_status msfdr_constants(msfdr_family family, size_t m, double q, double beta,
                             double* out_alphas) {
    if (!out_alphas && m > 0) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        CriticalConstants c;
        switch (family) {
            case MSFDR_FAMILY_MS: c = ms_constants(m, q, beta); break;
            case MSFDR_FAMILY_BH: c = bh_constants(m, q); break;
            case MSFDR_FAMILY_PRDS: c = prds_constants(m, q); break;
            default: throw Error(Errc::invalid_argument, "unknown family");
        }
        std::copy(c.alphas.begin(), c.alphas.end(), out_alphas);
    });
}

msfdr_status msfdr_theorem1_check(const double* alphas, size_t m, double q, double* out_bounds,
                                  int* out_holds) {
    if ((!alphas && m > 0) || !out_holds) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        CriticalConstants c;
        c.alphas.assign(alphas, alphas + m);
        c.q = q;
        if (out_bounds)
            for (size_t i = 1; i <= m; ++i) out_bounds[i - 1] = theorem1_bound(i, m, q);
        *out_holds = check_theorem1_condition(c, q) ? 1 : 0;
    });
}

msfdr_status msfdr_step_down(const double* pvalues, const double* alphas, size_t m,
                             uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k,
                             double* out_threshold) {
    return run_engine(true, pvalues, alphas, m, out_rejected, out_ranks, out_k, out_threshold);
}

msfdr_status msfdr_step_up(const double* pvalues, const double* alphas, size_t m,
                           uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k,
                           double* out_threshold) {
    return run_engine(false, pvalues, alphas, m, out_rejected, out_ranks, out_k, out_threshold);
}

msfdr_status msfdr_apply(msfdr_procedure proc, const double* pvalues, size_t m, double q,
                         double lambda, size_t m0, uint8_t* out_rejected, uint32_t* out_ranks,
                         size_t* out_k, double* out_threshold) {
    if (!pvalues && m > 0) return MSFDR_ERROR_NULL_POINTER;
    Procedure p;
    if (!to_procedure(proc, p)) return MSFDR_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        PValueVector pv = PValueVector::from_values(std::vector<double>(pvalues, pvalues + m));
        OrderedPValues ordered = sort_pvalues(pv);
        ProcedureParams params;
        params.q = q;
        params.lambda = lambda > 0.0 ? lambda : 0.5;
        params.m0 = m0;
        RejectionSet rs = apply_procedure(p, ordered, params);
        emit(pv, ordered, rs, out_rejected, out_ranks, out_k, out_threshold);
    });
}

msfdr_status msfdr_exact_fdr_step_down(const double* alphas, size_t m, size_t m0, double alt_mu,
                                       double tol, double* out_fdr) {
    if ((!alphas && m > 0) || !out_fdr) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        ExactFdrSpec spec;
        spec.constants.alphas.assign(alphas, alphas + m);
        spec.m0 = m0;
        spec.alt.mu = alt_mu;
        if (tol > 0.0) spec.abs_tol = tol;
        *out_fdr = exact_fdr_stepdown(spec);
    });
}

struct msfdr_experiment {
    std::vector<Scenario> grid;
    std::vector<Procedure> procs;
    std::vector<ResultCell> cells;
    bool ran = false;
};

msfdr_experiment* msfdr_experiment_create(void) {
    return new (std::nothrow) msfdr_experiment();
}

void msfdr_experiment_destroy(msfdr_experiment* exp) { delete exp; }

msfdr_status msfdr_experiment_add_scenario(msfdr_experiment* exp, const msfdr_scenario* s) {
    if (!exp || !s) return MSFDR_ERROR_NULL_POINTER;
    if (s->mu_pattern_len > 0 && !s->mu_pattern) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        Scenario sc;
        sc.m = s->m;
        sc.pi0 = s->pi0;
        sc.rho = s->rho;
        sc.q = s->q;
        sc.reps = s->reps;
        sc.master_seed = s->master_seed;
        if (s->mu_pattern && s->mu_pattern_len > 0)
            sc.mu_pattern.assign(s->mu_pattern, s->mu_pattern + s->mu_pattern_len);
        exp->grid.push_back(std::move(sc));
        exp->ran = false;
    });
}

msfdr_status msfdr_experiment_add_procedure(msfdr_experiment* exp, msfdr_procedure proc) {
    if (!exp) return MSFDR_ERROR_NULL_POINTER;
    Procedure p;
    if (!to_procedure(proc, p)) return MSFDR_ERROR_INVALID_ARGUMENT;
    exp->procs.push_back(p);
    exp->ran = false;
    return MSFDR_OK;
}

msfdr_status msfdr_experiment_run(msfdr_experiment* exp, unsigned workers) {
    if (!exp) return MSFDR_ERROR_NULL_POINTER;
    return guarded([&] {
        exp->cells = run_experiment(exp->grid, exp->procs, workers);
        exp->ran = true;
    });
}

size_t msfdr_experiment_cell_count(const msfdr_experiment* exp) {
    return exp ? exp->cells.size() : 0;
}

msfdr_status msfdr_experiment_cell(const msfdr_experiment* exp, size_t index,
                                   msfdr_result_cell* out) {
    if (!exp || !out) return MSFDR_ERROR_NULL_POINTER;
    if (!exp->ran || index >= exp->cells.size()) return MSFDR_ERROR_INVALID_ARGUMENT;
    const ResultCell& c = exp->cells[index];
    out->procedure = from_procedure(c.procedure);
    out->m = c.scenario.m;
    out->pi0 = c.scenario.pi0;
    out->rho = c.scenario.rho;
    out->q = c.scenario.q;
    out->reps = c.scenario.reps;
    out->master_seed = c.scenario.master_seed;
    out->fdr_hat = c.fdr_hat;
    out->fdr_se = c.fdr_se;
    out->power_hat = c.power_hat;
    out->power_se = c.power_se;
    out->rel_power = c.rel_power;
    out->power_defined = c.power_defined ? 1 : 0;
    return MSFDR_OK;
}

}  // extern "C"
