#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace tras {

// Deterministic random source. mt19937_64 supplies the raw bits; the
// uniform/normal conversions are done here rather than through
// std::*_distribution because the standard leaves those algorithms
// implementation-defined and we need bit-identical streams for the
// reproducibility guarantees.
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Derives an independent stream from a master seed and a stream id
    // (splitmix64 over seed ^ id so nearby seeds do not collide).
    static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). Rejection-free modulo bias is negligible
    // for n << 2^64 but we reject anyway to keep draws exact.
    std::uint64_t below(std::uint64_t n);

    // Standard normal via Marsaglia polar; the spare value is cached.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Engine + cache serialization, used by checkpoints.
    std::string save_state() const;
    void restore_state(const std::string& text);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace tras
