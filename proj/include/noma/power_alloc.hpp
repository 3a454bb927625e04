#pragma once

#include "noma/types.hpp"

#include <cstddef>

namespace noma {

/// Feasible range of the strong user's coefficient in a two-user pair.
struct FeasibleInterval {
    double lower;  ///< from R2 >= OMA2
    double upper;  ///< from R1 >= OMA1
};

/// Bounds on alpha_2 implied by requiring both users to reach at least
/// their half-band OMA rate. Requires 0 < g1 <= g2.
///
/// Throws InfeasibleError when lower > upper. For g1 == g2 the two bounds
/// coincide analytically, so a relative slack of kBoundSlack is allowed
/// for rounding; the returned values are never clamped.
FeasibleInterval alpha2_bounds(TransmitSnr snr, double g1, double g2);

inline constexpr double kBoundSlack = 1e-12;

/// Sum-rate-optimal uplink allocation for two users with the weak user
/// held at its OMA rate. Depends on rho*g1 only.
///   alpha_1 = (sqrt(1 + rho*g1) - 1) / (rho*g1),  alpha_2 = 1 - alpha_1
PowerAllocation optimal_two_user(TransmitSnr snr, double g1);

/// Downlink counterpart: the uplink coefficients with roles swapped, so
/// the returned vector is {weak, strong} = {uplink alpha_2, uplink alpha_1}.
PowerAllocation downlink_two_user(TransmitSnr snr, double g1);

/// Counters filled in by optimal_m_user.
struct RecursionDiagnostics {
    std::size_t renormalizations = 0;
    double max_sum_error = 0.0;  ///< largest |sum - 1| seen before any renormalization
};

/// M users sharing one resource. Starts from the two-user optimum and adds
/// users one at a time; the newcomer takes
///   alpha_new = (1 + rho*alpha_1*g1 - (1 + rho*g1)^(1/M')) / (rho*alpha_1*g1)
/// and every existing coefficient is scaled by (1 - alpha_new). The weak
/// user ends at ((1 + rho*g1)^(1/m) - 1) / (rho*g1).
///
/// If an intermediate vector drifts from unit sum by more than
/// PowerAllocation::kSumTolerance it is renormalized and a warning is
/// written to std::clog.
PowerAllocation optimal_m_user(TransmitSnr snr, double g1, std::size_t m,
                               RecursionDiagnostics* diagnostics = nullptr);

/// ((1 + rho*g1)^(1/m) - 1) / (rho*g1), the weak user's share after the
/// recursion, computed directly.
double weak_user_coefficient(TransmitSnr snr, double g1, std::size_t m);

}  // namespace noma
