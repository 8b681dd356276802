/* msfdr — false discovery rate procedures with adaptive step-down control.
 *
 * C interface to the msfdr core. All functions return msfdr_status; output
 * buffers are caller-allocated unless stated otherwise. Experiments are
 * driven through an opaque handle.
 */
#ifndef MSFDR_H
#define MSFDR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msfdr_status {
    MSFDR_OK = 0,
    MSFDR_ERROR_NULL_POINTER = 1,
    MSFDR_ERROR_INVALID_PVALUE = 2,   /* value outside [0,1] or not finite */
    MSFDR_ERROR_LENGTH_MISMATCH = 3,
    MSFDR_ERROR_DOMAIN = 4,           /* parameter outside its legal range */
    MSFDR_ERROR_SIZE_GUARD = 5,       /* problem too large for this routine */
    MSFDR_ERROR_TOLERANCE = 6,        /* quadrature failed to converge */
    MSFDR_ERROR_INVALID_ARGUMENT = 7
} msfdr_status;

typedef enum msfdr_family {
    MSFDR_FAMILY_MS = 0,   /* iq/(m + beta - i(1-q)), adaptive step-down */
    MSFDR_FAMILY_BH = 1,   /* iq/m, linear step-up */
    MSFDR_FAMILY_PRDS = 2  /* ms family at beta = m(1-q); dependence-safe */
} msfdr_family;

typedef enum msfdr_procedure {
    MSFDR_PROC_BH = 0,   /* linear step-up at level q */
    MSFDR_PROC_TS = 1,   /* two-stage adaptive step-up */
    MSFDR_PROC_MS = 2,   /* multiple-stage adaptive step-down */
    MSFDR_PROC_STS = 3,  /* adaptive lambda-based step-up */
    MSFDR_PROC_ORC = 4,  /* step-up at q*m/m0 with the true m0 */
    MSFDR_PROC_PRDS = 5  /* step-down with dependence-safe constants */
} msfdr_procedure;

const char* msfdr_strerror(msfdr_status status);
const char* msfdr_version(void);

/* Critical constants for one family; out_alphas must hold m doubles.
 * beta is read by the MS family only (pass 1.0 for the standard schedule). */
msfdr_status msfdr_constants(msfdr_family family, size_t m, double q, double beta,
                             double* out_alphas);

/* Step-down control condition alpha_i/(1-alpha_i) <= iq/(m+1-i).
 * out_bounds (optional, m doubles) receives the right-hand sides;
 * out_holds receives 1 when the condition holds at every index. */
msfdr_status msfdr_theorem1_check(const double* alphas, size_t m, double q,
                                  double* out_bounds, int* out_holds);

/* Generic engines over explicit constants. For each hypothesis,
 * out_rejected (optional) gets 0/1 and out_ranks (optional) its 1-based
 * rank in the p-value ordering; out_k and out_threshold (optional) get the
 * rejection count and the largest rejected p-value (0 when none). */
msfdr_status msfdr_step_down(const double* pvalues, const double* alphas, size_t m,
                             uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k,
                             double* out_threshold);
msfdr_status msfdr_step_up(const double* pvalues, const double* alphas, size_t m,
                           uint8_t* out_rejected, uint32_t* out_ranks, size_t* out_k,
                           double* out_threshold);

/* One of the named procedures at level q. lambda is read by STS only
 * (pass 0 for the default 0.5); m0 is read by ORC only. */
msfdr_status msfdr_apply(msfdr_procedure proc, const double* pvalues, size_t m, double q,
                         double lambda, size_t m0, uint8_t* out_rejected, uint32_t* out_ranks,
                         size_t* out_k, double* out_threshold);

/* Exact FDR of the step-down procedure with the given constants under
 * independence, m <= 3. m0 p-values are uniform; the rest follow the
 * Gaussian-shift alternative with mean alt_mu (alt_mu = 0 means uniform).
 * tol <= 0 selects the default absolute tolerance 1e-6. */
msfdr_status msfdr_exact_fdr_step_down(const double* alphas, size_t m, size_t m0,
                                       double alt_mu, double tol, double* out_fdr);

/* ------------------------------------------------------------------ */
/* Monte Carlo experiments                                             */

typedef struct msfdr_scenario {
    size_t m;
    double pi0;              /* fraction of true nulls; m0 = round(m*pi0) */
    double rho;              /* equicorrelation, in [0,1) */
    double q;
    size_t reps;
    uint64_t master_seed;
    const double* mu_pattern; /* NULL for the default shifts 1,2,3,4 */
    size_t mu_pattern_len;
} msfdr_scenario;

typedef struct msfdr_result_cell {
    msfdr_procedure procedure;
    size_t m;
    double pi0;
    double rho;
    double q;
    size_t reps;
    uint64_t master_seed;
    double fdr_hat;
    double fdr_se;
    double power_hat;        /* NaN when power_defined is 0 */
    double power_se;
    double rel_power;        /* relative to the oracle on the same replications */
    int power_defined;
} msfdr_result_cell;

typedef struct msfdr_experiment msfdr_experiment;

msfdr_experiment* msfdr_experiment_create(void);
void msfdr_experiment_destroy(msfdr_experiment* exp);

msfdr_status msfdr_experiment_add_scenario(msfdr_experiment* exp, const msfdr_scenario* s);
msfdr_status msfdr_experiment_add_procedure(msfdr_experiment* exp, msfdr_procedure proc);

/* Runs every scenario with every added procedure. workers = 0 uses the
 * hardware concurrency; results do not depend on the worker count. */
msfdr_status msfdr_experiment_run(msfdr_experiment* exp, unsigned workers);

size_t msfdr_experiment_cell_count(const msfdr_experiment* exp);
msfdr_status msfdr_experiment_cell(const msfdr_experiment* exp, size_t index,
                                   msfdr_result_cell* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MSFDR_H */
