#include "ofdma/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ofdma/assignment.hpp"
#include "ofdma/channel.hpp"
#include "ofdma/core.hpp"
#include "ofdma/fixtures.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/scenario_io.hpp"
#include "ofdma/solvers.hpp"

#include <chrono>

namespace ofdma {
namespace {

std::string sanitize_status(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string join(const std::vector<double>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += format_double(v[i]);
    }
    return out;
}

struct TrialResult {
    bool ok = false;
    double capacity = 0.0;
    double prop_error = 0.0;
    double runtime_us = 0.0;
    std::string status = "ok";
};

TrialResult run_one(Method method, const Scenario& scenario,
                    const ChannelMatrix& channel,
                    const AssignmentMatrix& assignment) {
    TrialResult r;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto alloc = solve(method, channel, assignment, scenario.proportions,
                                 scenario.total_power_w, scenario.ga, scenario.seed);
        const auto report = make_rate_report(channel, assignment, alloc,
                                             scenario.proportions, scenario.profile);
        r.ok = true;
        r.capacity = report.total_capacity;
        r.prop_error = report.proportionality_error;
    } catch (const std::exception& e) {
        r.status = sanitize_status(e.what());
    }
    r.runtime_us = std::chrono::duration<double, std::micro>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

}  // namespace

std::uint64_t sweep_seed(std::uint64_t base_seed, int users, int trial) {
    return base_seed ^ (static_cast<std::uint64_t>(users) * (1ull << 32) +
                        static_cast<std::uint64_t>(trial));
}

void run_sweep(const SweepSpec& spec, std::ostream& rows_csv,
               std::ostream& means_csv) {
    if (spec.users_min < 1 || spec.users_max < spec.users_min)
        throw InvalidInputError("user range must be nonempty");
    if (spec.trials < 1) throw InvalidInputError("trials must be >= 1");
    if (spec.methods.empty()) throw InvalidInputError("method list must be nonempty");

    rows_csv << "method,users,trial,capacity_bps_hz,prop_error,runtime_us,status\n";
    means_csv << "method,users,trials,mean_capacity_bps_hz,stderr_capacity_bps_hz\n";

    for (Method method : spec.methods) {
        for (int users = spec.users_min; users <= spec.users_max; ++users) {
            double sum = 0.0, sum_sq = 0.0;
            int ok_count = 0;
            for (int trial = 0; trial < spec.trials; ++trial) {
                Scenario sc = spec.base;
                sc.num_users = users;
                sc.proportions.clear();  // uniform
                sc.seed = sweep_seed(spec.base.seed, users, trial);
                sc.validate();

                const auto channel = generate_channel(users, sc.num_subcarriers,
                                                      sc.mean_snr_db, sc.seed);
                const auto quotas = compute_quotas(sc.proportions, sc.num_subcarriers);
                const auto assignment =
                    assign_subcarriers(channel, quotas, sc.total_power_w);

                const auto r = run_one(method, sc, channel, assignment);
                rows_csv << method_name(method) << ',' << users << ',' << trial << ',';
                if (r.ok)
                    rows_csv << format_double(r.capacity) << ','
                             << format_double(r.prop_error);
                else
                    rows_csv << ',';
                rows_csv << ','
                         << format_double(spec.emit_timings ? r.runtime_us : 0.0)
                         << ',' << r.status << '\n';
                if (r.ok) {
                    sum += r.capacity;
                    sum_sq += r.capacity * r.capacity;
                    ++ok_count;
                }
            }
            if (ok_count > 0) {
                const double mean = sum / ok_count;
                double se = 0.0;
                if (ok_count > 1) {
                    const double var =
                        std::max(0.0, (sum_sq - ok_count * mean * mean) / (ok_count - 1));
                    se = std::sqrt(var / ok_count);
                }
                means_csv << method_name(method) << ',' << users << ',' << ok_count
                          << ',' << format_double(mean) << ',' << format_double(se)
                          << '\n';
            }
        }
    }
}

std::string fixture_report(const std::string& fixture_name,
                           const std::string& method_or_all, bool emit_timings) {
    const Fixture fixture = channel_from_fixture(fixture_name);

    std::vector<Method> methods;
    if (method_or_all == "all")
        methods = {Method::linear, Method::rootfind, Method::active_set, Method::ga};
    else
        methods = {method_from_name(method_or_all)};

    std::ostringstream out;
    out << "fixture " << fixture.name << " (users=" << fixture.scenario.num_users
        << ", subcarriers=" << fixture.scenario.num_subcarriers
        << ", total_power_w=" << format_double(fixture.scenario.total_power_w)
        << ", proportions=" << join(fixture.scenario.proportions, " ") << ")\n";

    struct Solved {
        bool ok = false;
        RateReport report;
        PowerAllocation alloc;
    };
    std::vector<std::pair<Method, Solved>> solved;

    for (Method m : methods) {
        Solved s;
        const auto start = std::chrono::steady_clock::now();
        std::string status = "ok";
        try {
            s.alloc = solve(m, fixture.channel, fixture.assignment,
                            fixture.scenario.proportions,
                            fixture.scenario.total_power_w, fixture.scenario.ga,
                            fixture.scenario.seed);
            s.report = make_rate_report(fixture.channel, fixture.assignment, s.alloc,
                                        fixture.scenario.proportions,
                                        fixture.scenario.profile);
            s.ok = true;
        } catch (const std::exception& e) {
            status = e.what();
        }
        const double runtime_us = std::chrono::duration<double, std::micro>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
        out << "method " << method_name(m) << '\n';
        if (s.ok) {
            out << "  per_user_power_totals_w: " << join(s.alloc.per_user_total)
                << '\n'
                << "  per_user_rates_bps_hz: " << join(s.report.per_user_rate)
                << '\n'
                << "  total_capacity_bps_hz: "
                << format_double(s.report.total_capacity) << '\n'
                << "  proportionality_error: "
                << format_double(s.report.proportionality_error) << '\n';
        } else {
            out << "  status: " << status << '\n';
        }
        if (emit_timings) out << "  runtime_us: " << format_double(runtime_us) << '\n';
        solved.emplace_back(m, std::move(s));
    }

    out << "published-value comparison:\n";
    bool any = false;
    for (const auto& pub : fixture.published) {
        const Method m = method_from_name(pub.method);
        const auto it =
            std::find_if(solved.begin(), solved.end(),
                         [&](const auto& pr) { return pr.first == m; });
        if (it == solved.end()) continue;
        any = true;
        const auto& s = it->second;

        std::vector<double> computed;
        if (!s.ok) {
            out << "  [not-run]        " << pub.method << ' ' << pub.quantity
                << ": solver failed\n";
            continue;
        }
        if (pub.quantity == "power_totals") {
            computed = s.alloc.per_user_total;
        } else if (pub.quantity == "per_user_rates") {
            computed = s.report.per_user_rate;
        } else if (pub.quantity == "capacity") {
            computed = {s.report.total_capacity};
        } else if (pub.quantity == "rate_ratio") {
            computed = {s.report.per_user_rate[0] / s.report.per_user_rate[1]};
        } else if (pub.quantity == "capacity_pairs") {
            const auto& r = s.report.per_user_rate;
            const double n = fixture.scenario.num_subcarriers;
            computed = {(r[0] + r[1]) / n, (r[2] + r[3]) / n};
        }

        bool within = computed.size() == pub.values.size();
        for (std::size_t i = 0; within && i < computed.size(); ++i) {
            const double diff = std::fabs(computed[i] - pub.values[i]);
            const double tol = pub.abs_tolerance > 0
                                   ? pub.abs_tolerance
                                   : pub.rel_tolerance * std::fabs(pub.values[i]);
            within = diff <= tol;
        }
        out << (within ? "  [reproduced]     " : "  [not-reproduced] ")
            << pub.method << ' ' << pub.quantity << ": computed {"
            << join(computed, ", ") << "} vs published {" << join(pub.values, ", ")
            << "}";
        if (pub.abs_tolerance > 0)
            out << " (tol " << format_double(pub.abs_tolerance) << ")";
        else
            out << " (tol " << format_double(pub.rel_tolerance * 100) << "%)";
        if (!pub.expected_reproducible && !pub.note.empty())
            out << "\n                   note: " << pub.note;
        out << '\n';
    }
    if (!any) out << "  (no published values for the selected method)\n";
    return out.str();
}

}  // namespace ofdma
