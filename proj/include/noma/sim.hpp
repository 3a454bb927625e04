#pragma once

#include "noma/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noma {

enum class SweepMode {
    two_user_rates,   ///< per-user NOMA and OMA rates, two users
    two_user_sum,     ///< NOMA and OMA sum rates, two users
    four_user_cases,  ///< sum rate of the three four-user matchings
    m_user_group,     ///< M users on one resource vs M-way OMA
};

std::string_view to_string(SweepMode mode) noexcept;
std::optional<SweepMode> parse_sweep_mode(std::string_view name) noexcept;

inline constexpr std::size_t kDefaultTrials = 10000;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// -10 dB to 30 dB in 5 dB steps.
std::vector<double> default_snr_grid();

struct SweepConfig {
    std::vector<double> snr_db = default_snr_grid();
    std::size_t trials = kDefaultTrials;
    std::size_t users = 2;
    SweepMode mode = SweepMode::two_user_sum;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()
};

/// Throws ValidationError when the config cannot be run.
void validate(const SweepConfig& config);

struct SweepRow {
    double snr_db = 0.0;
    std::vector<double> means;       ///< one per series
    std::vector<double> std_errors;  ///< standard error of each mean
};

struct SweepResult {
    SweepMode mode = SweepMode::two_user_sum;
    std::size_t users = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> series;
    std::vector<SweepRow> rows;

    /// Column position of a series name; throws std::out_of_range if absent.
    std::size_t series_index(std::string_view name) const;
};

/// Ergodic per-user rates (two-user-rates) or sum rates (two-user-sum)
/// with the optimal two-user allocation on every draw.
SweepResult sweep_two_user(const SweepConfig& config);

/// Ergodic sum rates of the three four-user matchings.
SweepResult sweep_four_user_cases(const SweepConfig& config);

/// Ergodic M-user NOMA sum rate under the recursive allocation against
/// the OMA sum (1/M) sum_i log2(1 + rho*g_i).
SweepResult sweep_m_user(const SweepConfig& config);

/// Dispatches on config.mode.
SweepResult run_sweep(const SweepConfig& config);

/// Stream used for trial `trial` at grid index `point`.
inline SeedSpec trial_seed(const SweepConfig& config, std::size_t point, std::size_t trial) {
    return {config.seed, point, trial};
}

}  // namespace noma
