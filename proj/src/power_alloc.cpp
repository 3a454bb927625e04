#include "noma/power_alloc.hpp"

#include <cmath>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

namespace noma {

namespace {

void require_positive_gain(double g, const char* name) {
    if (!std::isfinite(g) || g <= 0.0) {
        throw ValidationError(std::string(name) + " must be finite and positive");
    }
}

// (1 + x)^(1/m) - 1 without cancellation for small x.
double root_minus_one(double x, std::size_t m) {
    return std::expm1(std::log1p(x) / static_cast<double>(m));
}

}  // namespace

FeasibleInterval alpha2_bounds(TransmitSnr snr, double g1, double g2) {
    require_positive_gain(g1, "g1");
    require_positive_gain(g2, "g2");
    if (g2 < g1) {
        throw ValidationError("alpha2_bounds expects g1 <= g2");
    }
    const double x1 = snr.linear() * g1;
    const double x2 = snr.linear() * g2;
    const double s1m1 = root_minus_one(x1, 2);  // sqrt(1 + x1) - 1
    const double s2m1 = root_minus_one(x2, 2);

    FeasibleInterval bounds{};
    bounds.upper = (1.0 + s1m1) * s1m1 / x1;
    bounds.lower = (1.0 + x1) * s2m1 / (x2 + x1 * s2m1);

    if (bounds.lower > bounds.upper * (1.0 + kBoundSlack)) {
        throw InfeasibleError("empty feasible interval for alpha_2: lower " +
                              std::to_string(bounds.lower) + " > upper " +
                              std::to_string(bounds.upper));
    }
    return bounds;
}

double weak_user_coefficient(TransmitSnr snr, double g1, std::size_t m) {
    require_positive_gain(g1, "g1");
    if (m < 1) {
        throw ValidationError("group size must be at least 1");
    }
    const double x = snr.linear() * g1;
    return root_minus_one(x, m) / x;
}

PowerAllocation optimal_two_user(TransmitSnr snr, double g1) {
    const double weak = weak_user_coefficient(snr, g1, 2);
    return PowerAllocation({weak, 1.0 - weak});
}

PowerAllocation downlink_two_user(TransmitSnr snr, double g1) {
    const auto uplink = optimal_two_user(snr, g1);
    return PowerAllocation({uplink[1], uplink[0]});
}

PowerAllocation optimal_m_user(TransmitSnr snr, double g1, std::size_t m,
                               RecursionDiagnostics* diagnostics) {
    require_positive_gain(g1, "g1");
    if (m < 2) {
        throw ValidationError("optimal_m_user needs m >= 2");
    }
    const double x = snr.linear() * g1;

    std::vector<double> alphas;
    alphas.reserve(m);
    const double weak = root_minus_one(x, 2) / x;
    alphas.push_back(weak);
    alphas.push_back(1.0 - weak);

    for (std::size_t group = 3; group <= m; ++group) {
        // y = rho * alpha_1^(group-1) * g1; the numerator (1 + y) - (1 + x)^(1/group)
        // is formed as y - ((1 + x)^(1/group) - 1) to keep precision.
        const double y = x * alphas.front();
        const double newcomer = (y - root_minus_one(x, group)) / y;
        const double keep = 1.0 - newcomer;
        for (double& a : alphas) {
            a *= keep;
        }
        alphas.push_back(newcomer);

        const double total = std::accumulate(alphas.begin(), alphas.end(), 0.0);
        const double error = std::abs(total - 1.0);
        if (diagnostics != nullptr && error > diagnostics->max_sum_error) {
            diagnostics->max_sum_error = error;
        }
        if (error > PowerAllocation::kSumTolerance) {
            std::clog << "noma: warning: renormalizing " << group
                      << "-user allocation, |sum - 1| = " << error << '\n';
            for (double& a : alphas) {
                a /= total;
            }
            if (diagnostics != nullptr) {
                ++diagnostics->renormalizations;
            }
        }
    }
    return PowerAllocation(std::move(alphas));
}

}  // namespace noma
