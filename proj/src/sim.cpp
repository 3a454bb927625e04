#include "noma/sim.hpp"

#include "noma/pairing.hpp"
#include "noma/power_alloc.hpp"
#include "noma/rates.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace noma {

std::string_view to_string(SweepMode mode) noexcept {
    switch (mode) {
        case SweepMode::two_user_rates: return "two-user-rates";
        case SweepMode::two_user_sum: return "two-user-sum";
        case SweepMode::four_user_cases: return "four-user-cases";
        case SweepMode::m_user_group: return "m-user-group";
    }
    return "unknown";
}

std::optional<SweepMode> parse_sweep_mode(std::string_view name) noexcept {
    for (const auto mode : {SweepMode::two_user_rates, SweepMode::two_user_sum,
                            SweepMode::four_user_cases, SweepMode::m_user_group}) {
        if (to_string(mode) == name) {
            return mode;
        }
    }
    return std::nullopt;
}

std::vector<double> default_snr_grid() {
    std::vector<double> grid;
    for (int db = -10; db <= 30; db += 5) {
        grid.push_back(static_cast<double>(db));
    }
    return grid;
}

void validate(const SweepConfig& config) {
    if (config.snr_db.empty()) {
        throw ValidationError("SNR grid is empty");
    }
    for (std::size_t i = 0; i < config.snr_db.size(); ++i) {
        if (!std::isfinite(config.snr_db[i])) {
            throw ValidationError("SNR grid contains a non-finite value");
        }
        if (i > 0 && !(config.snr_db[i] > config.snr_db[i - 1])) {
            throw ValidationError("SNR grid must be strictly ascending");
        }
    }
    if (config.trials < 1) {
        throw ValidationError("trials must be at least 1");
    }
    switch (config.mode) {
        case SweepMode::two_user_rates:
        case SweepMode::two_user_sum:
            if (config.users != 2) {
                throw ValidationError(std::string(to_string(config.mode)) + " needs users = 2");
            }
            break;
        case SweepMode::four_user_cases:
            if (config.users != 4) {
                throw ValidationError("four-user-cases needs users = 4");
            }
            break;
        case SweepMode::m_user_group:
            if (config.users < 2) {
                throw ValidationError("m-user-group needs users >= 2");
            }
            break;
    }
}

std::size_t SweepResult::series_index(std::string_view name) const {
    const auto it = std::find(series.begin(), series.end(), name);
    if (it == series.end()) {
        throw std::out_of_range("no series named " + std::string(name));
    }
    return static_cast<std::size_t>(it - series.begin());
}

namespace {

// Fills out[0..series) with the per-trial values for one channel draw.
using TrialFn = std::function<void(const ChannelGains&, TransmitSnr, double* out)>;

SweepResult run_trials(const SweepConfig& config, std::vector<std::string> series,
                       const TrialFn& trial_fn) {
    validate(config);
    const std::size_t n_series = series.size();
    const std::size_t n_trials = config.trials;

    unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_trials)));

    SweepResult result;
    result.mode = config.mode;
    result.users = config.users;
    result.trials = n_trials;
    result.seed = config.seed;
    result.series = std::move(series);

    // Per-trial values are stored by index and reduced in trial order, so the
    // result is bit-identical for any worker count.
    std::vector<double> values(n_trials * n_series);
    for (std::size_t point = 0; point < config.snr_db.size(); ++point) {
        const TransmitSnr snr = TransmitSnr::from_db(config.snr_db[point]);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const auto work = [&](std::size_t begin, std::size_t end) {
            try {
                for (std::size_t t = begin; t < end; ++t) {
                    const auto gains =
                        sample_rayleigh_gains(config.users, trial_seed(config, point, t));
                    trial_fn(gains, snr, values.data() + t * n_series);
                }
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        };
        if (workers == 1) {
            work(0, n_trials);
        } else {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (n_trials + workers - 1) / workers;
            for (std::size_t begin = 0; begin < n_trials; begin += chunk) {
                pool.emplace_back(work, begin, std::min(n_trials, begin + chunk));
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }

        SweepRow row;
        row.snr_db = config.snr_db[point];
        row.means.assign(n_series, 0.0);
        row.std_errors.assign(n_series, 0.0);
        for (std::size_t s = 0; s < n_series; ++s) {
            double sum = 0.0;
            for (std::size_t t = 0; t < n_trials; ++t) {
                sum += values[t * n_series + s];
            }
            const double mean = sum / static_cast<double>(n_trials);
            double squares = 0.0;
            for (std::size_t t = 0; t < n_trials; ++t) {
                const double d = values[t * n_series + s] - mean;
                squares += d * d;
            }
            row.means[s] = mean;
            if (n_trials > 1) {
                const double variance = squares / static_cast<double>(n_trials - 1);
                row.std_errors[s] = std::sqrt(variance / static_cast<double>(n_trials));
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace

SweepResult sweep_two_user(const SweepConfig& config) {
    if (config.mode == SweepMode::two_user_rates) {
        return run_trials(config, {"R1_noma", "R1_oma", "R2_noma", "R2_oma"},
                          [](const ChannelGains& gains, TransmitSnr snr, double* out) {
                              const auto report =
                                  rate_report(gains, optimal_two_user(snr, gains[0]), snr);
                              out[0] = report.noma_rates[0];
                              out[1] = report.oma_rates[0];
                              out[2] = report.noma_rates[1];
                              out[3] = report.oma_rates[1];
                          });
    }
    if (config.mode == SweepMode::two_user_sum) {
        return run_trials(config, {"sum_noma", "sum_oma"},
                          [](const ChannelGains& gains, TransmitSnr snr, double* out) {
                              const auto report =
                                  rate_report(gains, optimal_two_user(snr, gains[0]), snr);
                              out[0] = report.noma_sum;
                              out[1] = report.oma_sum;
                          });
    }
    throw ValidationError("sweep_two_user needs mode two-user-rates or two-user-sum");
}

SweepResult sweep_four_user_cases(const SweepConfig& config) {
    if (config.mode != SweepMode::four_user_cases) {
        throw ValidationError("sweep_four_user_cases needs mode four-user-cases");
    }
    return run_trials(config, {"case1", "case2", "case3"},
                      [](const ChannelGains& gains, TransmitSnr snr, double* out) {
                          const auto cases = four_user_cases(gains, snr);
                          out[0] = cases.case1;
                          out[1] = cases.case2;
                          out[2] = cases.case3;
                      });
}

SweepResult sweep_m_user(const SweepConfig& config) {
    if (config.mode != SweepMode::m_user_group) {
        throw ValidationError("sweep_m_user needs mode m-user-group");
    }
    const std::size_t m = config.users;
    return run_trials(config, {"sum_noma", "sum_oma"},
                      [m](const ChannelGains& gains, TransmitSnr snr, double* out) {
                          const auto report =
                              rate_report(gains, optimal_m_user(snr, gains[0], m), snr);
                          out[0] = report.noma_sum;
                          out[1] = report.oma_sum;
                      });
}

SweepResult run_sweep(const SweepConfig& config) {
    switch (config.mode) {
        case SweepMode::two_user_rates:
        case SweepMode::two_user_sum: return sweep_two_user(config);
        case SweepMode::four_user_cases: return sweep_four_user_cases(config);
        case SweepMode::m_user_group: return sweep_m_user(config);
    }
    throw ValidationError("unknown sweep mode");
}

}  // namespace noma
