#include "noma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace noma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_stream_seed(const SeedSpec& spec) noexcept {
    std::uint64_t h = splitmix64(spec.seed);
    h = splitmix64(h ^ spec.sweep_point);
    h = splitmix64(h ^ spec.trial);
    return h;
}

std::vector<double> draw_exponential(std::size_t m, const SeedSpec& spec) {
    std::mt19937_64 engine(derive_stream_seed(spec));
    std::vector<double> out(m);
    for (double& v : out) {
        // 53-bit uniform in [0, 1), inverse-CDF transform. Must not go through
        // std::exponential_distribution: its output is vendor-specific.
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        v = -std::log1p(-u);
        if (v == 0.0) {
            v = std::numeric_limits<double>::min();
        }
    }
    return out;
}

ChannelGains sample_rayleigh_gains(std::size_t m, const SeedSpec& spec) {
    if (m < 2) {
        throw ValidationError("need at least two users to sample");
    }
    auto gains = draw_exponential(m, spec);
    std::sort(gains.begin(), gains.end());
    return ChannelGains(std::move(gains));
}

}  // namespace noma
