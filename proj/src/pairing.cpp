#include "noma/pairing.hpp"

#include "noma/power_alloc.hpp"
#include "noma/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace noma {

PairingPolicy::PairingPolicy(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) {
        throw ValidationError("pairing policy has no pairs");
    }
    const std::size_t n = 2 * pairs_.size();
    std::vector<bool> seen(n + 1, false);
    for (auto& [a, b] : pairs_) {
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 1 || b > n || a == b) {
            throw ValidationError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") is out of range for " + std::to_string(n) + " users");
        }
        if (seen[a] || seen[b]) {
            throw ValidationError("pairs overlap: not a perfect matching");
        }
        seen[a] = seen[b] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

std::string PairingPolicy::to_string() const {
    std::string out;
    for (const auto& [a, b] : pairs_) {
        if (!out.empty()) {
            out += ',';
        }
        out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
    }
    return out;
}

PairingPolicy near_far_policy(std::size_t k) {
    if (k < 1) {
        throw ValidationError("near_far_policy needs k >= 1");
    }
    std::vector<PairingPolicy::Pair> pairs;
    pairs.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        pairs.emplace_back(i, 2 * k - i + 1);
    }
    return PairingPolicy(std::move(pairs));
}

namespace {

// Pairs the lowest free user with each remaining candidate in turn.
void extend_matchings(std::vector<std::size_t>& free_users,
                      std::vector<PairingPolicy::Pair>& partial,
                      std::vector<PairingPolicy>& out) {
    if (free_users.empty()) {
        out.emplace_back(partial);
        return;
    }
    const std::size_t first = free_users.front();
    for (std::size_t c = 1; c < free_users.size(); ++c) {
        const std::size_t partner = free_users[c];
        std::vector<std::size_t> rest;
        rest.reserve(free_users.size() - 2);
        for (std::size_t i = 1; i < free_users.size(); ++i) {
            if (i != c) {
                rest.push_back(free_users[i]);
            }
        }
        partial.emplace_back(first, partner);
        extend_matchings(rest, partial, out);
        partial.pop_back();
    }
}

}  // namespace

std::vector<PairingPolicy> enumerate_matchings(std::size_t n_users) {
    if (n_users < 2 || n_users % 2 != 0) {
        throw ValidationError("matching enumeration needs an even number of users >= 2");
    }
    if (n_users > kMaxEnumeratedUsers) {
        throw ValidationError("matching enumeration is capped at " +
                              std::to_string(kMaxEnumeratedUsers) + " users");
    }
    std::vector<std::size_t> users(n_users);
    std::iota(users.begin(), users.end(), std::size_t{1});
    std::vector<PairingPolicy::Pair> partial;
    std::vector<PairingPolicy> out;
    extend_matchings(users, partial, out);
    return out;
}

RateReport pairing_sum_rate(const ChannelGains& gains, const PairingPolicy& policy,
                            TransmitSnr snr, OmaBaseline baseline) {
    if (gains.size() != policy.user_count()) {
        throw DimensionError("policy covers " + std::to_string(policy.user_count()) +
                             " users but " + std::to_string(gains.size()) + " gains were given");
    }
    const std::size_t n = gains.size();
    const double oma_share =
        baseline == OmaBaseline::per_pair ? 0.5 : 1.0 / static_cast<double>(n);

    RateReport report;
    report.noma_rates.assign(n, 0.0);
    report.oma_rates.assign(n, 0.0);
    for (const auto& [weak, strong] : policy.pairs()) {
        const double g_weak = gains[weak - 1];
        const double g_strong = gains[strong - 1];
        const auto alloc = optimal_two_user(snr, g_weak);
        const auto rates = noma_rates(ChannelGains({g_weak, g_strong}), alloc, snr);
        report.noma_rates[weak - 1] = rates[0];
        report.noma_rates[strong - 1] = rates[1];
        report.oma_rates[weak - 1] = oma_share * log2_1p(snr.linear() * g_weak);
        report.oma_rates[strong - 1] = oma_share * log2_1p(snr.linear() * g_strong);
    }
    report.noma_sum = std::accumulate(report.noma_rates.begin(), report.noma_rates.end(), 0.0);
    report.oma_sum = std::accumulate(report.oma_rates.begin(), report.oma_rates.end(), 0.0);
    return report;
}

FourUserCases four_user_cases(const ChannelGains& gains, TransmitSnr snr) {
    if (gains.size() != 4) {
        throw DimensionError("four_user_cases needs exactly 4 gains, got " +
                             std::to_string(gains.size()));
    }
    const auto sum = [&](std::vector<PairingPolicy::Pair> pairs) {
        return pairing_sum_rate(gains, PairingPolicy(std::move(pairs)), snr).noma_sum;
    };
    return {sum({{1, 2}, {3, 4}}), sum({{1, 3}, {2, 4}}), sum({{1, 4}, {2, 3}})};
}

MonotonicityReport case_gap_monotonicity_check(const ChannelGains& gains,
                                                const std::vector<double>& rho_grid) {
    if (gains.size() != 4) {
        throw DimensionError("monotonicity check needs exactly 4 gains");
    }
    if (rho_grid.empty()) {
        throw ValidationError("rho grid is empty");
    }
    for (std::size_t i = 1; i < rho_grid.size(); ++i) {
        if (!(rho_grid[i] > rho_grid[i - 1])) {
            throw ValidationError("rho grid must be strictly ascending");
        }
    }

    MonotonicityReport report;
    report.differences.reserve(rho_grid.size());
    for (const double rho : rho_grid) {
        const auto cases = four_user_cases(gains, TransmitSnr(rho));
        report.differences.push_back(cases.case2 - cases.case1);
    }
    for (std::size_t i = 1; i < report.differences.size(); ++i) {
        const double step = report.differences[i] - report.differences[i - 1];
        report.worst_step = std::min(report.worst_step, step);
        if (step < -kMonotoneStepTolerance) {
            report.monotone = false;
        }
    }
    report.high_snr_limit = std::log2(gains[2] / gains[1]);
    const double gap = std::abs(report.differences.back() - report.high_snr_limit);
    report.limit_relative_gap =
        report.high_snr_limit > 0.0 ? gap / report.high_snr_limit : gap;
    return report;
}

std::vector<RankedMatching> rank_matchings(const ChannelGains& gains, TransmitSnr snr,
                                           OmaBaseline baseline) {
    const auto near_far = near_far_policy(gains.size() / 2);
    std::vector<RankedMatching> ranked;
    for (auto& policy : enumerate_matchings(gains.size())) {
        auto rates = pairing_sum_rate(gains, policy, snr, baseline);
        const bool is_near_far = policy == near_far;
        ranked.push_back({std::move(policy), std::move(rates), is_near_far});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.rates.noma_sum > b.rates.noma_sum;
    });

    // Move near-far ahead of any matching it ties with.
    const auto nf = std::find_if(ranked.begin(), ranked.end(),
                                 [](const auto& r) { return r.near_far; });
    const double nf_sum = nf->rates.noma_sum;
    const auto first_tie = std::find_if(ranked.begin(), nf, [&](const auto& r) {
        return r.rates.noma_sum <= nf_sum + kTieTolerance;
    });
    std::rotate(first_tie, nf, nf + 1);
    return ranked;
}

}  // namespace noma
