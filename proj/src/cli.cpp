#include "noma/cli.hpp"

#include "noma/output.hpp"
#include "noma/pairing.hpp"
#include "noma/power_alloc.hpp"
#include "noma/rates.hpp"
#include "noma/sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace noma::cli {

namespace {

const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv},
                                                   {"json", OutputFormat::json}};

const std::map<std::string, OmaBaseline> kBaselines{{"per-pair", OmaBaseline::per_pair},
                                                    {"network", OmaBaseline::network}};

struct AllocArgs {
    double snr_db = 0.0;
    double g1 = 0.0;
    std::optional<double> g2;
    std::size_t m = 2;
    OutputFormat format = OutputFormat::csv;
};

struct PairArgs {
    std::vector<double> gains;
    double snr_db = 0.0;
    bool oracle = false;
    OmaBaseline baseline = OmaBaseline::per_pair;
    OutputFormat format = OutputFormat::csv;
};

struct SweepArgs {
    std::string mode = "two-user-sum";
    std::optional<std::size_t> users;
    std::vector<double> snr_list;
    double snr_start = -10.0;
    double snr_stop = 30.0;
    double snr_step = 5.0;
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    OutputFormat format = OutputFormat::csv;
    std::string output;
};

OutputRecord alloc_record(const AllocArgs& args) {
    const auto snr = TransmitSnr::from_db(args.snr_db);
    const auto alloc = optimal_m_user(snr, args.g1, args.m);

    // Weak user's NOMA rate against its 1/m OMA share, relative.
    const double weak_noma = log2_1p(snr.linear() * alloc[0] * args.g1);
    const double weak_oma = log2_1p(snr.linear() * args.g1) / static_cast<double>(args.m);
    const double residual = (weak_noma - weak_oma) / weak_oma;

    OutputRecord record;
    record.columns = {"m", "snr_db", "g1"};
    std::vector<Cell> row{static_cast<std::int64_t>(args.m), args.snr_db, args.g1};
    for (std::size_t i = 0; i < alloc.size(); ++i) {
        record.columns.push_back("alpha_" + std::to_string(i + 1));
        row.emplace_back(alloc[i]);
    }
    record.columns.push_back("weak_oma_residual");
    row.emplace_back(residual);

    if (args.g2) {
        if (args.m != 2) {
            throw ValidationError("--g2 is only meaningful with --m 2");
        }
        const auto bounds = alpha2_bounds(snr, args.g1, *args.g2);
        record.columns.insert(record.columns.end(), {"g2", "alpha2_lower", "alpha2_upper"});
        row.insert(row.end(), {Cell{*args.g2}, Cell{bounds.lower}, Cell{bounds.upper}});
    }
    record.rows.push_back(std::move(row));
    return record;
}

OutputRecord pair_record(const PairArgs& args) {
    if (args.gains.size() < 2 || args.gains.size() % 2 != 0) {
        throw ValidationError("pairing needs an even number (>= 2) of gains, got " +
                              std::to_string(args.gains.size()));
    }
    if (args.oracle && args.gains.size() > kMaxEnumeratedUsers) {
        throw ValidationError("--oracle supports at most " +
                              std::to_string(kMaxEnumeratedUsers) + " users");
    }
    const ChannelGains gains(args.gains);
    const auto snr = TransmitSnr::from_db(args.snr_db);

    OutputRecord record;
    record.columns = {"rank", "policy", "noma_sum", "oma_sum", "near_far"};
    record.meta = {{"snr_db", args.snr_db},
                   {"users", static_cast<std::int64_t>(gains.size())},
                   {"oma_baseline", args.baseline == OmaBaseline::per_pair ? "per-pair" : "network"}};

    const auto add_row = [&](std::size_t rank, const PairingPolicy& policy, const RateReport& r,
                             bool near_far) {
        record.rows.push_back({static_cast<std::int64_t>(rank), policy.to_string(), r.noma_sum,
                               r.oma_sum, static_cast<std::int64_t>(near_far ? 1 : 0)});
    };

    if (args.oracle) {
        const auto ranked = rank_matchings(gains, snr, args.baseline);
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            add_row(i + 1, ranked[i].policy, ranked[i].rates, ranked[i].near_far);
        }
    } else {
        const auto policy = near_far_policy(gains.size() / 2);
        add_row(1, policy, pairing_sum_rate(gains, policy, snr, args.baseline), true);
    }
    return record;
}

SweepConfig sweep_config(const SweepArgs& args) {
    SweepConfig config;
    const auto mode = parse_sweep_mode(args.mode);
    if (!mode) {
        throw ValidationError("unknown sweep mode '" + args.mode + "'");
    }
    config.mode = *mode;
    switch (config.mode) {
        case SweepMode::two_user_rates:
        case SweepMode::two_user_sum: config.users = args.users.value_or(2); break;
        case SweepMode::four_user_cases: config.users = args.users.value_or(4); break;
        case SweepMode::m_user_group: config.users = args.users.value_or(12); break;
    }
    if (!args.snr_list.empty()) {
        config.snr_db = args.snr_list;
    } else {
        if (!(args.snr_step > 0.0) || args.snr_stop < args.snr_start) {
            throw ValidationError("SNR range needs step > 0 and stop >= start");
        }
        const auto count =
            static_cast<std::size_t>(std::floor((args.snr_stop - args.snr_start) / args.snr_step +
                                                1e-9)) + 1;
        config.snr_db.clear();
        for (std::size_t i = 0; i < count; ++i) {
            config.snr_db.push_back(args.snr_start + static_cast<double>(i) * args.snr_step);
        }
    }
    config.trials = args.trials;
    config.seed = args.seed;
    config.threads = args.threads;
    validate(config);
    return config;
}

void add_format_option(CLI::App* sub, OutputFormat& target) {
    sub->add_option("--format", target, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

std::string option_key(const std::string& arg) {
    if (arg.rfind("--", 0) != 0) {
        return {};
    }
    return arg.substr(2, arg.find('=') - 2);
}

// Inserts config-file entries, right after the subcommand name, for flags the
// command line does not already set.
std::vector<std::string> apply_config(const std::vector<std::string>& args, CLI::App& app) {
    std::string path;
    std::size_t sub_pos = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
        if (sub_pos == args.size() && app.get_subcommand_no_throw(args[i]) != nullptr) {
            sub_pos = i;
        }
    }
    if (path.empty() || sub_pos == args.size()) {
        return args;
    }
    CLI::App* sub = app.get_subcommand(args[sub_pos]);

    std::vector<std::string> injected;
    for (const auto& [key, value] : read_config_file(path)) {
        if (key == "config") {
            continue;
        }
        const bool on_command_line = std::any_of(args.begin(), args.end(), [&](const auto& a) {
            return option_key(a) == key;
        });
        bool known_anywhere = false;
        for (const auto* candidate : app.get_subcommands({})) {
            known_anywhere |= candidate->get_option_no_throw("--" + key) != nullptr;
        }
        if (!known_anywhere) {
            throw ValidationError("config file " + path + ": unknown key '" + key + "'");
        }
        if (on_command_line || sub->get_option_no_throw("--" + key) == nullptr) {
            continue;
        }
        injected.push_back("--" + key + "=" + value);
    }
    std::vector<std::string> merged(args.begin(), args.begin() + static_cast<long>(sub_pos) + 1);
    merged.insert(merged.end(), injected.begin(), injected.end());
    merged.insert(merged.end(), args.begin() + static_cast<long>(sub_pos) + 1, args.end());
    return merged;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read config file " + path);
    }
    const auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            return std::string{};
        }
        const auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    };
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) {
            key = key.substr(2);
        }
        entries.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal uplink NOMA power allocation, user pairing and Monte Carlo sweeps",
                 "noma"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "key = value file supplying any subcommand flag");

    AllocArgs alloc_args;
    auto* alloc = app.add_subcommand("alloc", "Optimal power coefficients for one group");
    alloc->add_option("--snr-db", alloc_args.snr_db, "Transmit SNR in dB")->required();
    alloc->add_option("--g1", alloc_args.g1, "Weakest user's channel gain |h1|^2")->required();
    alloc->add_option("--g2", alloc_args.g2, "Strong user's gain; adds the alpha_2 bounds (m = 2)");
    alloc->add_option("--m", alloc_args.m, "Users sharing the resource")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    add_format_option(alloc, alloc_args.format);

    PairArgs pair_args;
    auto* pair = app.add_subcommand("pair", "Near-far pairing and optional exhaustive ranking");
    pair->add_option("--gains", pair_args.gains, "Ascending channel gains, comma separated")
        ->required()
        ->delimiter(',');
    pair->add_option("--snr-db", pair_args.snr_db, "Transmit SNR in dB")->required();
    pair->add_flag("--oracle", pair_args.oracle, "Rank every perfect matching");
    pair->add_option("--oma-baseline", pair_args.baseline, "OMA reference split")
        ->transform(CLI::CheckedTransformer(kBaselines, CLI::ignore_case));
    add_format_option(pair, pair_args.format);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over transmit SNR");
    sweep->add_option("--mode", sweep_args.mode,
                      "two-user-rates | two-user-sum | four-user-cases | m-user-group");
    sweep->add_option("--users", sweep_args.users, "Users per draw (default by mode: 2, 2, 4, 12)");
    sweep->add_option("--snr-db", sweep_args.snr_list, "Explicit SNR points in dB")
        ->delimiter(',');
    sweep->add_option("--snr-start", sweep_args.snr_start, "First SNR point in dB");
    sweep->add_option("--snr-stop", sweep_args.snr_stop, "Last SNR point in dB");
    sweep->add_option("--snr-step", sweep_args.snr_step, "SNR spacing in dB");
    sweep->add_option("--trials", sweep_args.trials, "Channel draws per SNR point");
    sweep->add_option("--seed", sweep_args.seed, "Base seed")->envname(kSeedEnv);
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");
    sweep->add_option("--output", sweep_args.output, "Output file (default: stdout)");
    add_format_option(sweep, sweep_args.format);

    try {
        std::vector<std::string> merged;
        try {
            merged = apply_config(args, app);
        } catch (const CLI::Error&) {
            merged = args;  // let the real parse report it
        }
        std::vector<const char*> argv{"noma"};
        for (const auto& a : merged) {
            argv.push_back(a.c_str());
        }
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadArguments;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (alloc->parsed()) {
            out << render(alloc_record(alloc_args), alloc_args.format);
        } else if (pair->parsed()) {
            out << render(pair_record(pair_args), pair_args.format);
        } else if (sweep->parsed()) {
            const auto config = sweep_config(sweep_args);
            const auto text = render(sweep_record(run_sweep(config)), sweep_args.format);
            if (sweep_args.output.empty()) {
                out << text;
            } else {
                write_atomically(sweep_args.output, text);
            }
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const OutputError& e) {
        err << "output error: " << e.what() << '\n';
        return kOutputFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}

}  // namespace noma::cli
