#pragma once

#include "noma/types.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace noma {

/// Identifies one independent random stream. The same triple always yields
/// the same draws, independent of evaluation order or thread count.
struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t sweep_point = 0;
    std::uint64_t trial = 0;
};

/// 64-bit seed for the stream named by spec (splitmix64 chained over the
/// three fields).
std::uint64_t derive_stream_seed(const SeedSpec& spec) noexcept;

/// m independent Exp(1) variates in draw order. |h|^2 of a unit-variance
/// circularly symmetric complex Gaussian is exponential with mean one.
std::vector<double> draw_exponential(std::size_t m, const SeedSpec& spec);

/// Rayleigh-fading power gains for m users, sorted ascending (weakest first).
/// Gains are normalized to unit mean.
ChannelGains sample_rayleigh_gains(std::size_t m, const SeedSpec& spec);

}  // namespace noma
