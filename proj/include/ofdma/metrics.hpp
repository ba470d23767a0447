#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

// sum_n log2(1 + p_n * H_n)
double user_rate(const std::vector<double>& gains, const std::vector<double>& powers);

// (1/N) * sum_{k,n} c_{k,n} * log2(1 + p_{k,n} * H_{k,n})
double total_capacity(const ChannelMatrix& channel,
                      const AssignmentMatrix& assignment, const Matrix& powers);

// max_k |R_k / sum_j R_j - gamma_k|; throws UndefinedMetricError on all-zero rates.
double proportionality_error(const std::vector<double>& rates,
                             const std::vector<double>& proportions);

RateReport make_rate_report(const ChannelMatrix& channel,
                            const AssignmentMatrix& assignment,
                            const PowerAllocation& allocation,
                            const std::vector<double>& proportions,
                            const OfdmaProfile& profile);

struct ComparisonRow {
    Method method;
    std::optional<RateReport> report;      // empty on solver failure
    std::optional<PowerAllocation> allocation;
    double runtime_us = 0.0;
    std::string status = "ok";             // or the solver's error message
};

struct MethodComparison {
    std::vector<ComparisonRow> rows;  // always linear, rootfind, active_set, ga
};

// Runs all four solvers on identical inputs; a failing solver yields a row
// with its error status instead of aborting the others.
MethodComparison compare_methods(const Scenario& scenario,
                                 const ChannelMatrix& channel,
                                 const AssignmentMatrix& assignment);

}  // namespace ofdma
