#include "simulate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "errors.hpp"
#include "normal.hpp"
#include "procedures.hpp"
#include "rng.hpp"

namespace msfdr {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void validate_scenario(const Scenario& s) {
    if (!(s.q > 0.0 && s.q < 1.0)) throw Error(Errc::domain, "q must lie in (0,1)");
    if (!(s.pi0 >= 0.0 && s.pi0 <= 1.0)) throw Error(Errc::domain, "pi0 must lie in [0,1]");
    if (!(s.rho >= 0.0 && s.rho < 1.0)) throw Error(Errc::domain, "rho must lie in [0,1)");
    if (s.reps < 1) throw Error(Errc::domain, "reps must be >= 1");
    if (s.m1() > 0 && s.mu_pattern.empty())
        throw Error(Errc::domain, "mu_pattern must be nonempty when false nulls exist");
}

}  // namespace

std::size_t Scenario::m0() const {
    const double r = std::round(static_cast<double>(m) * pi0);
    const double clamped = std::clamp(r, 0.0, static_cast<double>(m));
    return static_cast<std::size_t>(clamped);
}

std::uint64_t scenario_hash(const Scenario& s) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(s.m));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(s.pi0));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(s.rho));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(s.q));
    for (double mu : s.mu_pattern) h = mix64(h ^ std::bit_cast<std::uint64_t>(mu));
    return h;
}

PValueVector generate_dataset(const Scenario& s, std::size_t rep_index) {
    validate_scenario(s);
    const std::size_t m = s.m;
    const std::size_t m0 = s.m0();

    RandomStream rng(stream_seed(s.master_seed, scenario_hash(s), rep_index));

    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = rng.normal();
    const double z_common = rng.normal();

    const double w_common = std::sqrt(s.rho);
    const double w_own = std::sqrt(1.0 - s.rho);

    std::vector<Truth> truth(m);
    for (std::size_t i = 0; i < m; ++i) {
        double mu = 0.0;
        if (i >= m0) {
            mu = s.mu_pattern[(i - m0) % s.mu_pattern.size()];
            truth[i] = Truth::FalseNull;
        } else {
            truth[i] = Truth::TrueNull;
        }
        y[i] = w_common * z_common + w_own * y[i] + mu;
        y[i] = normal_sf(y[i]);  // reuse the buffer for p-values
    }
    return PValueVector::from_values(std::move(y), std::move(truth));
}

std::vector<ConfusionCounts> run_replication(const Scenario& s, std::span<const Procedure> procs,
                                             std::size_t rep_index) {
    const PValueVector pv = generate_dataset(s, rep_index);
    const OrderedPValues ordered = sort_pvalues(pv);
    const std::uint32_t m0 = static_cast<std::uint32_t>(s.m0());
    const std::uint32_t m1 = static_cast<std::uint32_t>(s.m1());

    ProcedureParams params;
    params.q = s.q;
    params.lambda = 0.5;
    params.m0 = m0;

    std::vector<ConfusionCounts> out;
    out.reserve(procs.size());
    for (Procedure proc : procs) {
        const RejectionSet rs = apply_procedure(proc, ordered, params);
        ConfusionCounts cc;
        cc.m0 = m0;
        cc.m1 = m1;
        for (std::uint32_t id : rs.rejected_ids) {
            // ids are positional here (generate_dataset numbers 0..m-1, nulls first)
            if (id < m0) ++cc.V;
            else ++cc.S;
        }
        out.push_back(cc);
    }
    return out;
}

namespace {

struct Moments {
    double mean = kNan;
    double se = kNan;
};

// Mean and standard error, accumulated in index order.
template <typename F>
Moments moments(std::size_t n, F&& value) {
    Moments mo;
    if (n == 0) return mo;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += value(i);
    mo.mean = sum / static_cast<double>(n);
    if (n < 2) return mo;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = value(i) - mo.mean;
        ss += d * d;
    }
    mo.se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    return mo;
}

}  // namespace

std::vector<ResultCell> run_experiment(std::span<const Scenario> grid,
                                       std::span<const Procedure> procs, unsigned workers) {
    for (const Scenario& s : grid) validate_scenario(s);

    // The oracle is always evaluated: relative power is measured against it.
    std::vector<Procedure> eval(procs.begin(), procs.end());
    std::size_t orc_slot = procs.size();
    if (auto it = std::find(eval.begin(), eval.end(), Procedure::ORC); it != eval.end()) {
        orc_slot = static_cast<std::size_t>(it - eval.begin());
    } else {
        eval.push_back(Procedure::ORC);
    }
    const std::size_t np = eval.size();

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<ResultCell> cells;
    cells.reserve(grid.size() * procs.size());

    for (const Scenario& s : grid) {
        std::vector<ConfusionCounts> counts(s.reps * np);

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        constexpr std::size_t kBlock = 16;

        auto worker = [&]() {
            try {
                for (;;) {
                    const std::size_t begin = next.fetch_add(kBlock);
                    if (begin >= s.reps) return;
                    const std::size_t end = std::min(begin + kBlock, s.reps);
                    for (std::size_t rep = begin; rep < end; ++rep) {
                        auto row = run_replication(s, eval, rep);
                        std::copy(row.begin(), row.end(), counts.begin() + rep * np);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };

        const unsigned nthreads =
            static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(s.reps, 1)));
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);

        const std::size_t m1 = s.m1();

        // Aggregate in ascending rep order; bitwise identical for any worker count.
        std::vector<Moments> fdr(np), power(np);
        for (std::size_t j = 0; j < np; ++j) {
            auto fdp = [&](std::size_t rep) {
                const ConfusionCounts& cc = counts[rep * np + j];
                return cc.R() > 0 ? static_cast<double>(cc.V) / static_cast<double>(cc.R()) : 0.0;
            };
            fdr[j] = moments(s.reps, fdp);
            if (m1 > 0) {
                auto pow = [&](std::size_t rep) {
                    const ConfusionCounts& cc = counts[rep * np + j];
                    return static_cast<double>(cc.S) / static_cast<double>(m1);
                };
                power[j] = moments(s.reps, pow);
            }
        }

        const double orc_power = power[orc_slot].mean;
        for (std::size_t j = 0; j < procs.size(); ++j) {
            ResultCell cell;
            cell.procedure = eval[j];
            cell.scenario = s;
            cell.fdr_hat = fdr[j].mean;
            cell.fdr_se = fdr[j].se;
            cell.power_defined = m1 > 0;
            cell.power_hat = power[j].mean;
            cell.power_se = power[j].se;
            cell.rel_power =
                (m1 > 0 && orc_power > 0.0) ? power[j].mean / orc_power : kNan;
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace msfdr
