#pragma once

#include <cstdint>
#include <random>

#include "normal.hpp"

namespace msfdr {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of the per-replication random stream. Replications are independent
// and reproducible in any execution order because each stream depends only
// on (master_seed, scenario_hash, rep_index).
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t scenario_hash,
                                 std::uint64_t rep_index) {
    return mix64(mix64(mix64(master_seed) ^ scenario_hash) ^ rep_index);
}

// Deterministic random stream. The underlying engine (mt19937_64) is fully
// specified by the standard; uniforms and normals are mapped from raw engine
// output here rather than through std distributions, whose algorithms are
// implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on the open interval (0,1).
    double uniform() {
        const std::uint64_t x = engine_();
        return static_cast<double>(x >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    // Standard normal via the inverse cdf.
    double normal() { return normal_quantile(uniform()); }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace msfdr
