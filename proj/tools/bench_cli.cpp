#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ofdma/assignment.hpp"
#include "ofdma/bench.hpp"
#include "ofdma/channel.hpp"
#include "ofdma/core.hpp"
#include "ofdma/fixtures.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/scenario_io.hpp"
#include "ofdma/solvers.hpp"

namespace {

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += ofdma::format_double(v[i]);
    }
    return out;
}

void print_row(const ofdma::ComparisonRow& row, bool timings) {
    std::cout << "method " << ofdma::method_name(row.method) << '\n';
    if (row.report) {
        std::cout << "  per_user_power_totals_w: "
                  << join_doubles(row.allocation->per_user_total) << '\n'
                  << "  per_user_rates_bps_hz: "
                  << join_doubles(row.report->per_user_rate) << '\n'
                  << "  total_capacity_bps_hz: "
                  << ofdma::format_double(row.report->total_capacity) << '\n'
                  << "  proportionality_error: "
                  << ofdma::format_double(row.report->proportionality_error) << '\n'
                  << "  physical_total_rate_bps: "
                  << ofdma::format_double(row.report->physical_total_rate_bps)
                  << '\n';
    } else {
        std::cout << "  status: " << row.status << '\n';
    }
    if (timings)
        std::cout << "  runtime_us: " << ofdma::format_double(row.runtime_us) << '\n';
}

int cmd_run(const std::string& config_path, bool compare, bool timings) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot open config '" << config_path << "'\n";
        return 1;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto scenario = ofdma::parse_scenario(buffer.str());

    const auto channel =
        ofdma::generate_channel(scenario.num_users, scenario.num_subcarriers,
                                scenario.mean_snr_db, scenario.seed);
    const auto quotas =
        ofdma::compute_quotas(scenario.proportions, scenario.num_subcarriers);
    const auto assignment =
        ofdma::assign_subcarriers(channel, quotas, scenario.total_power_w);

    std::cout << "scenario users=" << scenario.num_users
              << " subcarriers=" << scenario.num_subcarriers
              << " total_power_w=" << ofdma::format_double(scenario.total_power_w)
              << " mean_snr_db=" << ofdma::format_double(scenario.mean_snr_db)
              << " seed=" << scenario.seed << '\n';
    std::cout << "quotas:";
    for (int q : quotas.counts) std::cout << ' ' << q;
    std::cout << '\n';

    if (compare) {
        const auto cmp = ofdma::compare_methods(scenario, channel, assignment);
        for (const auto& row : cmp.rows) print_row(row, timings);
        return 0;
    }

    ofdma::ComparisonRow row;
    row.method = scenario.method;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto alloc = ofdma::solve(scenario.method, channel, assignment,
                                  scenario.proportions, scenario.total_power_w,
                                  scenario.ga, scenario.seed);
        row.report = ofdma::make_rate_report(channel, assignment, alloc,
                                             scenario.proportions, scenario.profile);
        row.allocation = std::move(alloc);
    } catch (const std::exception& e) {
        row.status = e.what();
    }
    row.runtime_us = std::chrono::duration<double, std::micro>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    print_row(row, timings);
    return row.report ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proportional-rate OFDMA power/subcarrier allocation benchmark"};
    app.require_subcommand(1);
    bool no_timings = false;
    app.add_flag("--no-timings", no_timings,
                 "omit wall-clock timings for byte-reproducible output");

    // run
    auto* run = app.add_subcommand("run", "run a scenario from a config file");
    run->fallthrough();
    std::string config_path;
    bool compare = false;
    run->add_option("--config", config_path, "scenario config file")->required();
    run->add_flag("--compare", compare, "run all four methods");

    // fixture
    auto* fixture = app.add_subcommand("fixture", "replicate a published desk experiment");
    fixture->fallthrough();
    std::string fixture_name, fixture_method = "all";
    fixture->add_option("name", fixture_name, "table4|table5|table6")->required();
    fixture->add_option("--method", fixture_method,
                        "linear|rootfind|active_set|ga|all");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo capacity sweep over user counts");
    sweep->fallthrough();
    std::string users_range = "1..8", methods_list = "linear,rootfind,active_set,ga";
    std::string out_path;
    int trials = 1, subcarriers = 64;
    double total_power = 1.0, mean_snr_db = 50.0;
    std::uint64_t seed = 0;
    sweep->add_option("--users", users_range, "inclusive range A..B");
    sweep->add_option("--trials", trials, "trials per user count");
    sweep->add_option("--methods", methods_list, "comma-separated method subset");
    sweep->add_option("--seed", seed, "base seed");
    sweep->add_option("--subcarriers", subcarriers, "subcarriers per symbol");
    sweep->add_option("--total-power-w", total_power, "power budget in watts");
    sweep->add_option("--mean-snr-db", mean_snr_db, "mean subchannel SNR in dB");
    sweep->add_option("--out", out_path, "CSV output path (means go to *.means.csv)")
        ->required();

    // channel
    auto* channel = app.add_subcommand("channel", "export/import channel CSV grids");
    channel->fallthrough();
    std::string export_path, import_path;
    int ch_users = 2, ch_subcarriers = 64;
    double ch_snr = 50.0;
    std::uint64_t ch_seed = 0;
    channel->add_option("--export", export_path, "write a generated matrix here");
    channel->add_option("--import", import_path, "read and validate a matrix");
    channel->add_option("--users", ch_users, "users (export)");
    channel->add_option("--subcarriers", ch_subcarriers, "subcarriers (export)");
    channel->add_option("--mean-snr-db", ch_snr, "mean SNR in dB (export)");
    channel->add_option("--seed", ch_seed, "seed (export)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, compare, !no_timings);

        if (fixture->parsed()) {
            std::cout << ofdma::fixture_report(fixture_name, fixture_method,
                                               !no_timings);
            return 0;
        }

        if (sweep->parsed()) {
            const auto dots = users_range.find("..");
            if (dots == std::string::npos) {
                std::cerr << "error: --users expects A..B\n";
                return 1;
            }
            ofdma::SweepSpec spec;
            spec.users_min = std::stoi(users_range.substr(0, dots));
            spec.users_max = std::stoi(users_range.substr(dots + 2));
            spec.trials = trials;
            spec.emit_timings = !no_timings;
            spec.methods.clear();
            std::stringstream ms(methods_list);
            std::string item;
            while (std::getline(ms, item, ','))
                spec.methods.push_back(ofdma::method_from_name(item));
            spec.base.num_users = 1;  // overwritten per sweep point
            spec.base.num_subcarriers = subcarriers;
            spec.base.total_power_w = total_power;
            spec.base.mean_snr_db = mean_snr_db;
            spec.base.seed = seed;

            std::ofstream rows(out_path, std::ios::binary);
            if (!rows) {
                std::cerr << "error: cannot open '" << out_path << "'\n";
                return 1;
            }
            std::string means_path = out_path;
            const auto dot = means_path.rfind(".csv");
            if (dot != std::string::npos && dot == means_path.size() - 4)
                means_path.replace(dot, 4, ".means.csv");
            else
                means_path += ".means.csv";
            std::ofstream means(means_path, std::ios::binary);
            ofdma::run_sweep(spec, rows, means);
            std::cout << "wrote " << out_path << " and " << means_path << '\n';
            return 0;
        }

        if (channel->parsed()) {
            if (export_path.empty() == import_path.empty()) {
                std::cerr << "error: channel needs exactly one of --export/--import\n";
                return 1;
            }
            if (!export_path.empty()) {
                const auto ch =
                    ofdma::generate_channel(ch_users, ch_subcarriers, ch_snr, ch_seed);
                std::ofstream out(export_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot open '" << export_path << "'\n";
                    return 1;
                }
                ofdma::write_channel_csv(out, ch);
                std::cout << "wrote " << export_path << " (users=" << ch.users
                          << " subcarriers=" << ch.subcarriers << ")\n";
            } else {
                std::ifstream in(import_path, std::ios::binary);
                if (!in) {
                    std::cerr << "error: cannot open '" << import_path << "'\n";
                    return 1;
                }
                const auto ch = ofdma::read_channel_csv(in);
                std::cout << "read " << import_path << " (users=" << ch.users
                          << " subcarriers=" << ch.subcarriers << ")\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
