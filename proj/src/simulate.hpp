#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace msfdr {

// One simulation cell of the equicorrelated Gaussian model:
// Y_i = sqrt(rho) Z + sqrt(1-rho) Z_i + mu_i, p_i = 1 - Phi(Y_i),
// with mu_i = 0 for the m0 = round(m*pi0) true nulls and shifts drawn
// round-robin from mu_pattern for the rest.
struct Scenario {
    std::size_t m = 0;
    double pi0 = 1.0;
    double rho = 0.0;
    double q = 0.05;
    std::size_t reps = 5000;
    std::uint64_t master_seed = 0;
    std::vector<double> mu_pattern = {1.0, 2.0, 3.0, 4.0};

    std::size_t m0() const;
    std::size_t m1() const { return m - m0(); }
};

// Stable digest of the cell geometry (m, pi0, rho, q, mu_pattern). The
// replication count and master seed stay out on purpose: raising reps
// extends the existing streams instead of reshuffling them.
std::uint64_t scenario_hash(const Scenario& s);

struct ResultCell {
    Procedure procedure = Procedure::BH;
    Scenario scenario;
    double fdr_hat = 0.0;
    double fdr_se = 0.0;
    double power_hat = 0.0;   // NaN when power_defined is false
    double power_se = 0.0;
    double rel_power = 0.0;   // power relative to the oracle on the same replications
    bool power_defined = false;
};

// Deterministic dataset for one replication; the stream depends only on
// (master_seed, scenario geometry, rep_index). Truth labels attached,
// true nulls first.
PValueVector generate_dataset(const Scenario& s, std::size_t rep_index);

// Evaluates every procedure on one shared dataset (common random numbers).
// The oracle is given the true m0. Returns counts aligned with `procs`.
std::vector<ConfusionCounts> run_replication(const Scenario& s, std::span<const Procedure> procs,
                                             std::size_t rep_index);

// Aggregates `reps` replications per scenario and procedure. Replications
// may run on any number of workers; accumulation happens in ascending
// rep_index order afterwards, so results are bit-identical for any worker
// count. workers = 0 picks the hardware concurrency.
std::vector<ResultCell> run_experiment(std::span<const Scenario> grid,
                                       std::span<const Procedure> procs, unsigned workers = 0);

}  // namespace msfdr
