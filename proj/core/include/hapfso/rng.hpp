#ifndef HAPFSO_RNG_HPP
#define HAPFSO_RNG_HPP

#include <cstdint>

namespace hapfso::rng {

// Deterministic per-trial random stream: (seed, stream_id) -> xoshiro256++
// state through SplitMix64. Each Monte-Carlo trial owns one stream keyed by
// its trial index, so results do not depend on how trials are batched or
// which worker thread runs them.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double();

    // Uniform in (0, 1]; never returns 0 (safe for log()).
    double next_double_open();

    // Standard normal via Box-Muller; generated in pairs, one cached.
    double next_normal();

    // Gamma(shape, scale=1) via Marsaglia-Tsang, with the usual
    // power-of-uniform boost for shape < 1.
    double next_gamma(double shape);

private:
    std::uint64_t s_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hapfso::rng

#endif
