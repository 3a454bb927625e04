// Acceptance suite: one pass/fail line per criterion, nonzero exit if any fail.

#include "oracles.hpp"

#include "noma/channel.hpp"
#include "noma/output.hpp"
#include "noma/pairing.hpp"
#include "noma/power_alloc.hpp"
#include "noma/rates.hpp"
#include "noma/sim.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace noma;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Records the first few failures in the detail string.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 3) {
                notes_ << (failures_ > 1 ? "; " : "") << what;
            }
        }
    }
    std::size_t failures() const { return failures_; }
    Verdict verdict(const std::string& summary) const {
        std::ostringstream s;
        s << summary << " (" << checks_ << " checks, " << failures_ << " failures";
        if (failures_ > 0) {
            s << ": " << notes_.str() << (failures_ > 3 ? "; ..." : "");
        }
        s << ")";
        return {failures_ == 0, s.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Verdict closed_form_anchors() {
    Tally t;
    const auto a = optimal_two_user(TransmitSnr(10.0), 0.3);
    t.check(std::abs(a[0] - 1.0 / 3.0) <= 1e-12, "alpha1(rho=10,g1=0.3)");
    t.check(std::abs(a[1] - 2.0 / 3.0) <= 1e-12, "alpha2(rho=10,g1=0.3)");
    const auto b = optimal_two_user(TransmitSnr(10.0), 0.8);
    t.check(std::abs(b[0] - 0.25) <= 1e-12, "alpha1(rho=10,g1=0.8)");
    t.check(std::abs(b[1] - 0.75) <= 1e-12, "alpha2(rho=10,g1=0.8)");
    return t.verdict("(1/3, 2/3) and (1/4, 3/4) within 1e-12");
}

Verdict weak_user_equality() {
    Tally t;
    double worst = 0.0;
    for (const double rho : oracle::log_grid(1e-2, 1e4, 20)) {
        for (const double g1 : oracle::log_grid(1e-3, 1e2, 20)) {
            const TransmitSnr snr(rho);
            const ChannelGains gains({g1, 2.0 * g1});
            const auto noma = noma_rates(gains, optimal_two_user(snr, g1), snr);
            const auto oma = oma_rates(gains, snr);
            const double rel = std::abs(noma[0] - oma[0]) / oma[0];
            worst = std::max(worst, rel);
            t.check(rel <= 1e-9, "rho=" + fmt(rho) + " g1=" + fmt(g1));
        }
    }
    return t.verdict("20x20 grid, worst |R1-OMA1|/OMA1 = " + fmt(worst));
}

Verdict oma_floor() {
    Tally t;
    double worst = INFINITY;
    for (const double rho : oracle::log_grid(1e-2, 1e4, 20)) {
        for (const double g1 : oracle::log_grid(1e-3, 1e2, 20)) {
            for (const double ratio : {1.0, 2.0, 10.0}) {
                const TransmitSnr snr(rho);
                const ChannelGains gains({g1, ratio * g1});
                const auto noma = noma_rates(gains, optimal_two_user(snr, g1), snr);
                const auto oma = oma_rates(gains, snr);
                worst = std::min(worst, noma[1] - oma[1]);
                t.check(noma[1] >= oma[1] - 1e-9, "rho=" + fmt(rho) + " g1=" + fmt(g1));
            }
        }
    }
    return t.verdict("R2 >= OMA2 - 1e-9, smallest margin " + fmt(worst));
}

Verdict optimality_oracle() {
    Tally t;
    std::mt19937_64 rng(20240601);
    double worst = -INFINITY;
    for (int draw = 0; draw < 1000; ++draw) {
        const double rho = oracle::log_uniform(rng, 1e-2, 1e4);
        const auto g = oracle::random_ascending_gains(rng, 2);
        const TransmitSnr snr(rho);
        const double closed = noma_sum_rate(ChannelGains(g), optimal_two_user(snr, g[0]), snr);
        const double scanned = oracle::scan_best_two_user_sum(rho, g[0], g[1], 10000);
        worst = std::max(worst, scanned - closed);
        t.check(scanned <= closed + 1e-7, "draw " + std::to_string(draw));
    }
    return t.verdict("1000 draws, max(scan - closed form) = " + fmt(worst) + " bits");
}

Verdict m_user_recursion() {
    Tally t;
    std::size_t floor_violations = 0;
    std::size_t vectors = 0;
    const std::vector<double> rhos{1.0, 10.0, 100.0};
    for (const std::size_t m : {3u, 4u, 8u, 12u, 32u}) {
        for (std::uint64_t draw = 0; draw < 100; ++draw) {
            const double rho = rhos[draw % rhos.size()];
            const auto gains = sample_rayleigh_gains(m, {555, m, draw});
            const TransmitSnr snr(rho);
            const auto alloc = optimal_m_user(snr, gains[0], m);
            const auto& a = alloc.vector();
            const std::string tag = "M=" + std::to_string(m) + " draw " + std::to_string(draw);

            const double total = std::accumulate(a.begin(), a.end(), 0.0);
            t.check(std::abs(total - 1.0) <= 1e-12, tag + " sum");

            const double x = rho * gains[0];
            const double closed = std::expm1(std::log1p(x) / static_cast<double>(m)) / x;
            t.check(std::abs(a[0] - closed) <= 1e-12 * closed, tag + " alpha1");

            const auto rates = oracle::sic_rates(gains.vector(), a, rho);
            const double share = std::log1p(x) / std::log(2.0) / static_cast<double>(m);
            t.check(std::abs(rates[0] - share) <= 1e-9 * share, tag + " user-1 rate");

            bool vector_ok = true;
            for (std::size_t i = 1; i < m; ++i) {
                const double oma = oracle::oma_share(rho, gains[i], m);
                if (rates[i] < oma - 1e-9) {
                    vector_ok = false;
                    t.check(false, tag + " user " + std::to_string(i + 1) + " below OMA share");
                    break;
                }
            }
            if (vector_ok) {
                t.check(true, "");
            } else {
                ++floor_violations;
            }
            ++vectors;
        }
    }
    return t.verdict("sum/alpha1/user-1 rate; per-user OMA floor violated in " +
                     std::to_string(floor_violations) + " of " + std::to_string(vectors) +
                     " gain vectors");
}

Verdict near_far_oracle() {
    Tally t;
    std::mt19937_64 rng(77);
    for (const std::size_t k : {2u, 3u, 4u}) {
        const auto matchings = enumerate_matchings(2 * k);
        const auto near_far = near_far_policy(k);
        for (const double rho : {1.0, 10.0, 100.0}) {
            for (int draw = 0; draw < 1000; ++draw) {
                const ChannelGains gains(oracle::random_ascending_gains(rng, 2 * k));
                const TransmitSnr snr(rho);
                double best = -INFINITY;
                for (const auto& p : matchings) {
                    best = std::max(best, pairing_sum_rate(gains, p, snr).noma_sum);
                }
                const double nf = pairing_sum_rate(gains, near_far, snr).noma_sum;
                t.check(nf >= best - 1e-9, "K=" + std::to_string(k) + " rho=" + fmt(rho));
            }
        }
    }
    return t.verdict("near-far >= best of all matchings - 1e-9 for K = 2, 3, 4");
}

Verdict case_ordering() {
    Tally t;
    std::mt19937_64 rng(1601);
    for (const double rho : {1.0, 10.0, 100.0}) {
        for (int draw = 0; draw < 10000; ++draw) {
            const ChannelGains gains(oracle::random_ascending_gains(rng, 4));
            const auto c = four_user_cases(gains, TransmitSnr(rho));
            t.check(c.case1 <= c.case2 + 1e-9 && c.case2 <= c.case3 + 1e-9,
                    "rho=" + fmt(rho) + " draw " + std::to_string(draw));
        }
    }
    return t.verdict("case1 <= case2 <= case3 on 3 x 10^4 draws");
}

Verdict case_gap_limits() {
    Tally t;
    const ChannelGains gains({0.3, 0.8, 2.0, 5.0});
    const auto low = four_user_cases(gains, TransmitSnr(1e-6));
    const double low_gap = low.case2 - low.case1;
    t.check(low_gap < 1e-5, "rho=1e-6 gap " + fmt(low_gap));

    const auto high = four_user_cases(gains, TransmitSnr(1e6));
    const double high_gap = high.case2 - high.case1;
    const double limit = std::log2(2.0 / 0.8);
    t.check(std::abs(high_gap - limit) <= 0.01 * limit, "rho=1e6 gap " + fmt(high_gap));

    const auto report = case_gap_monotonicity_check(gains, oracle::log_grid(1e-6, 1e6, 50));
    t.check(report.monotone, "nondecreasing on 50-point grid");
    return t.verdict("gap(1e-6) = " + fmt(low_gap) + ", gap(1e6) = " + fmt(high_gap) +
                     " vs " + fmt(limit) + ", worst step " + fmt(report.worst_step));
}

Verdict figure_reproduction() {
    Tally t;
    const auto run = [](SweepMode mode, std::size_t users) {
        SweepConfig c;
        c.mode = mode;
        c.users = users;
        return run_sweep(c);
    };

    const auto rates = run(SweepMode::two_user_rates, 2);
    for (const auto& row : rates.rows) {
        const auto r1 = rates.series_index("R1_noma");
        const auto o1 = rates.series_index("R1_oma");
        const auto r2 = rates.series_index("R2_noma");
        const auto o2 = rates.series_index("R2_oma");
        const double se = std::max(row.std_errors[r1], row.std_errors[o1]);
        t.check(std::abs(row.means[r1] - row.means[o1]) <= 3.0 * se, "R1 vs OMA1 @" + fmt(row.snr_db));
        t.check(row.means[r2] >= row.means[o2], "R2 vs OMA2 @" + fmt(row.snr_db));
    }
    const auto sums = run(SweepMode::two_user_sum, 2);
    for (const auto& row : sums.rows) {
        t.check(row.means[0] >= row.means[1], "M=2 sum @" + fmt(row.snr_db));
    }
    const auto cases = run(SweepMode::four_user_cases, 4);
    for (const auto& row : cases.rows) {
        t.check(row.means[0] <= row.means[1] && row.means[1] <= row.means[2],
                "case order @" + fmt(row.snr_db));
    }
    const auto group = run(SweepMode::m_user_group, 12);
    for (const auto& row : group.rows) {
        t.check(row.means[0] >= row.means[1], "M=12 sum @" + fmt(row.snr_db));
    }
    return t.verdict("default grid -10:5:30 dB, 10^4 trials, seed " + std::to_string(kDefaultSeed));
}

Verdict determinism() {
    Tally t;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "noma_acceptance";
    fs::create_directories(dir);
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    for (const auto mode : {SweepMode::two_user_rates, SweepMode::two_user_sum,
                            SweepMode::four_user_cases, SweepMode::m_user_group}) {
        SweepConfig c;
        c.mode = mode;
        c.users = mode == SweepMode::four_user_cases ? 4 : mode == SweepMode::m_user_group ? 12 : 2;
        c.trials = 2000;
        for (const auto format : {OutputFormat::csv, OutputFormat::json}) {
            const auto a = dir / "a.out";
            const auto b = dir / "b.out";
            c.threads = 1;
            write_atomically(a, render(sweep_record(run_sweep(c)), format));
            c.threads = 0;
            write_atomically(b, render(sweep_record(run_sweep(c)), format));
            t.check(slurp(a) == slurp(b) && !slurp(a).empty(), std::string(to_string(mode)));
        }
    }
    fs::remove_all(dir);
    return t.verdict("repeated sweeps produce byte-identical CSV and JSON files");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 closed-form anchors", closed_form_anchors},
        {"2 weak-user equality", weak_user_equality},
        {"3 OMA floor, two users", oma_floor},
        {"4 optimality oracle", optimality_oracle},
        {"5 M-user recursion", m_user_recursion},
        {"6 near-far vs all matchings", near_far_oracle},
        {"7 four-user case ordering", case_ordering},
        {"8 case2-case1 limits and monotonicity", case_gap_limits},
        {"9 figure reproduction", figure_reproduction},
        {"10 determinism", determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %-40s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", c.name, secs,
                    v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
