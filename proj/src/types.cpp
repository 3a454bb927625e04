#include "noma/types.hpp"

#include <cmath>
#include <numeric>

namespace noma {

TransmitSnr::TransmitSnr(double rho) : rho_(rho) {
    if (!std::isfinite(rho) || rho <= 0.0) {
        throw ValidationError("transmit SNR must be finite and strictly positive, got " +
                              std::to_string(rho));
    }
}

TransmitSnr TransmitSnr::from_db(double snr_db) {
    if (!std::isfinite(snr_db)) {
        throw ValidationError("SNR in dB must be finite");
    }
    return TransmitSnr(std::pow(10.0, snr_db / 10.0));
}

double TransmitSnr::db() const noexcept { return 10.0 * std::log10(rho_); }

ChannelGains::ChannelGains(std::vector<double> gains) : gains_(std::move(gains)) {
    if (gains_.size() < 2) {
        throw ValidationError("channel gains need at least two users");
    }
    for (std::size_t i = 0; i < gains_.size(); ++i) {
        if (!std::isfinite(gains_[i]) || gains_[i] <= 0.0) {
            throw ValidationError("channel gain " + std::to_string(i + 1) +
                                  " must be finite and positive");
        }
        if (i > 0 && gains_[i] < gains_[i - 1]) {
            throw ValidationError("channel gains must be sorted ascending (weakest user first)");
        }
    }
}

PowerAllocation::PowerAllocation(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) {
        throw ValidationError("power allocation is empty");
    }
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (!(alphas_[i] > 0.0 && alphas_[i] < 1.0)) {
            throw ValidationError("power coefficient " + std::to_string(i + 1) +
                                  " must lie in (0, 1)");
        }
    }
    const double total = std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw ValidationError("power coefficients must sum to one");
    }
}

PowerAllocation PowerAllocation::unchecked(std::vector<double> alphas) {
    return PowerAllocation(std::move(alphas), NoCheck{});
}

}  // namespace noma
