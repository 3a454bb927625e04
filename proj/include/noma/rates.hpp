#pragma once

#include "noma/types.hpp"

#include <vector>

namespace noma {

/// Uplink SIC rates, weakest user first. The base station decodes the
/// strongest user first, so user i only sees interference from users j < i:
///
///   R_i = log2(1 + rho*a_i*g_i / (1 + sum_{j<i} rho*a_j*g_j))
std::vector<double> noma_rates(const ChannelGains& gains, const PowerAllocation& alloc,
                               TransmitSnr snr);

/// Equal-share orthogonal rates, (1/M) log2(1 + rho*g_i).
std::vector<double> oma_rates(const ChannelGains& gains, TransmitSnr snr);

/// log2(1 + sum_i rho*a_i*g_i). Equals the sum of noma_rates by telescoping.
double noma_sum_rate(const ChannelGains& gains, const PowerAllocation& alloc, TransmitSnr snr);

/// Both rate vectors and their sums for one allocation.
RateReport rate_report(const ChannelGains& gains, const PowerAllocation& alloc, TransmitSnr snr);

/// log2(1 + x) with full precision near zero.
double log2_1p(double x) noexcept;

}  // namespace noma
