#include "ofdma/metrics.hpp"

#include <chrono>
#include <cmath>

#include "ofdma/solvers.hpp"
#include "solver_util.hpp"

namespace ofdma {

double user_rate(const std::vector<double>& gains,
                 const std::vector<double>& powers) {
    if (gains.size() != powers.size())
        throw InvalidInputError("gains/powers length mismatch");
    double rate = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        if (!(gains[i] > 0)) throw InvalidInputError("gains must be positive");
        if (powers[i] < 0) throw InvalidInputError("powers must be >= 0");
        rate += std::log2(1.0 + powers[i] * gains[i]);
    }
    return rate;
}

double total_capacity(const ChannelMatrix& channel,
                      const AssignmentMatrix& assignment, const Matrix& powers) {
    detail::check_dimensions(channel, assignment);
    if (powers.rows() != static_cast<std::size_t>(channel.users) ||
        powers.cols() != static_cast<std::size_t>(channel.subcarriers))
        throw InvalidInputError("power grid dimension mismatch");
    double sum = 0.0;
    for (int n = 0; n < channel.subcarriers; ++n) {
        const int k = assignment.owner[n];
        sum += std::log2(1.0 + powers(k, n) * channel.h(k, n));
    }
    return sum / channel.subcarriers;
}

double proportionality_error(const std::vector<double>& rates,
                             const std::vector<double>& proportions) {
    if (rates.size() != proportions.size())
        throw InvalidInputError("rates/proportions length mismatch");
    double total = 0.0;
    for (double r : rates) total += r;
    if (!(total > 0)) throw UndefinedMetricError("all rates are zero");
    double gap = 0.0;
    for (std::size_t k = 0; k < rates.size(); ++k)
        gap = std::max(gap, std::fabs(rates[k] / total - proportions[k]));
    return gap;
}

RateReport make_rate_report(const ChannelMatrix& channel,
                            const AssignmentMatrix& assignment,
                            const PowerAllocation& allocation,
                            const std::vector<double>& proportions,
                            const OfdmaProfile& profile) {
    RateReport report;
    report.per_user_rate.assign(channel.users, 0.0);
    for (int n = 0; n < channel.subcarriers; ++n) {
        const int k = assignment.owner[n];
        report.per_user_rate[k] +=
            std::log2(1.0 + allocation.p(k, n) * channel.h(k, n));
    }
    report.total_capacity = 0.0;
    for (double r : report.per_user_rate) report.total_capacity += r;
    report.total_capacity /= channel.subcarriers;
    report.proportionality_error =
        proportionality_error(report.per_user_rate, proportions);
    report.physical_total_rate_bps =
        report.total_capacity * profile.bandwidth_mhz * 1e6;
    return report;
}

MethodComparison compare_methods(const Scenario& scenario,
                                 const ChannelMatrix& channel,
                                 const AssignmentMatrix& assignment) {
    MethodComparison cmp;
    for (Method m : {Method::linear, Method::rootfind, Method::active_set,
                     Method::ga}) {
        ComparisonRow row;
        row.method = m;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto alloc = solve(m, channel, assignment, scenario.proportions,
                               scenario.total_power_w, scenario.ga, scenario.seed);
            row.report = make_rate_report(channel, assignment, alloc,
                                          scenario.proportions, scenario.profile);
            row.allocation = std::move(alloc);
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        row.runtime_us = std::chrono::duration<double, std::micro>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        cmp.rows.push_back(std::move(row));
    }
    return cmp;
}

}  // namespace ofdma
