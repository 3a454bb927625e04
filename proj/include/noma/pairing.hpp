#pragma once

#include "noma/types.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace noma {

/// A perfect matching of users 1..2K into K two-user NOMA pairs.
/// Indices are 1-based and each pair is stored as (weak, strong) with
/// weak < strong. Pairs are kept sorted by their weak index.
class PairingPolicy {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    explicit PairingPolicy(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t user_count() const noexcept { return 2 * pairs_.size(); }

    /// "(1,4),(2,3)"
    std::string to_string() const;

    friend bool operator==(const PairingPolicy&, const PairingPolicy&) = default;

private:
    std::vector<Pair> pairs_;
};

/// Pair the k-th weakest with the k-th strongest: {(1,2K), (2,2K-1), ..., (K,K+1)}.
PairingPolicy near_far_policy(std::size_t k);

inline constexpr std::size_t kMaxEnumeratedUsers = 12;

/// All (n-1)!! perfect matchings of n users, each exactly once.
/// n must be even and within [2, kMaxEnumeratedUsers].
std::vector<PairingPolicy> enumerate_matchings(std::size_t n_users);

/// How the OMA reference rate is split when several pairs share the band.
enum class OmaBaseline {
    per_pair,  ///< each user gets half of its pair's resource: (1/2) log2(1 + rho*g)
    network,   ///< each user gets 1/(2K) of the whole band
};

/// Network rates when every pair runs the optimal two-user allocation on its
/// own orthogonal resource. Rates are indexed by user (weakest first).
RateReport pairing_sum_rate(const ChannelGains& gains, const PairingPolicy& policy,
                            TransmitSnr snr, OmaBaseline baseline = OmaBaseline::per_pair);

/// NOMA sum rates of the three four-user matchings.
struct FourUserCases {
    double case1;  ///< {(1,2),(3,4)}
    double case2;  ///< {(1,3),(2,4)}
    double case3;  ///< {(1,4),(2,3)}
};

FourUserCases four_user_cases(const ChannelGains& gains, TransmitSnr snr);

struct MonotonicityReport {
    bool monotone = true;           ///< case2 - case1 nondecreasing over the grid
    double worst_step = 0.0;        ///< most negative step seen (0 if none)
    std::vector<double> differences;  ///< case2 - case1 at every grid point
    double high_snr_limit = 0.0;    ///< log2(g3 / g2)
    double limit_relative_gap = 0.0;  ///< |difference at last point - limit| / limit
};

inline constexpr double kMonotoneStepTolerance = 1e-9;

/// Evaluates case2 - case1 along an ascending rho grid and compares the
/// last value with its rho -> infinity limit log2(g3 / g2).
MonotonicityReport case_gap_monotonicity_check(const ChannelGains& gains,
                                                const std::vector<double>& rho_grid);

/// One row of an exhaustive matching comparison.
struct RankedMatching {
    PairingPolicy policy;
    RateReport rates;
    bool near_far = false;
};

/// Every matching of gains.size() users sorted by descending NOMA sum rate.
/// Matchings within kTieTolerance of each other keep the near-far policy first.
std::vector<RankedMatching> rank_matchings(const ChannelGains& gains, TransmitSnr snr,
                                           OmaBaseline baseline = OmaBaseline::per_pair);

inline constexpr double kTieTolerance = 1e-9;

}  // namespace noma
