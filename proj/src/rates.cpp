#include "noma/rates.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace noma {

namespace {

void require_same_length(const ChannelGains& gains, const PowerAllocation& alloc) {
    if (gains.size() != alloc.size()) {
        throw DimensionError("gains have " + std::to_string(gains.size()) +
                             " users but the allocation has " + std::to_string(alloc.size()));
    }
}

}  // namespace

double log2_1p(double x) noexcept { return std::log1p(x) / std::numbers::ln2; }

std::vector<double> noma_rates(const ChannelGains& gains, const PowerAllocation& alloc,
                               TransmitSnr snr) {
    require_same_length(gains, alloc);
    const double rho = snr.linear();
    std::vector<double> rates(gains.size());
    double interference = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        const double received = rho * alloc[i] * gains[i];
        rates[i] = log2_1p(received / (1.0 + interference));
        interference += received;
    }
    return rates;
}

std::vector<double> oma_rates(const ChannelGains& gains, TransmitSnr snr) {
    const double share = 1.0 / static_cast<double>(gains.size());
    std::vector<double> rates(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) {
        rates[i] = share * log2_1p(snr.linear() * gains[i]);
    }
    return rates;
}

double noma_sum_rate(const ChannelGains& gains, const PowerAllocation& alloc, TransmitSnr snr) {
    require_same_length(gains, alloc);
    double received = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        received += snr.linear() * alloc[i] * gains[i];
    }
    return log2_1p(received);
}

RateReport rate_report(const ChannelGains& gains, const PowerAllocation& alloc, TransmitSnr snr) {
    RateReport report;
    report.noma_rates = noma_rates(gains, alloc, snr);
    report.oma_rates = oma_rates(gains, snr);
    report.noma_sum = std::accumulate(report.noma_rates.begin(), report.noma_rates.end(), 0.0);
    report.oma_sum = std::accumulate(report.oma_rates.begin(), report.oma_rates.end(), 0.0);
    return report;
}

}  // namespace noma
