#include "ofdma/waterfill.hpp"

#include <algorithm>
#include <cmath>

namespace ofdma {
namespace {

void check_gains(const std::vector<double>& gains) {
    if (gains.empty()) throw InvalidInputError("gain vector must be nonempty");
    for (double g : gains)
        if (!(g > 0) || !std::isfinite(g))
            throw InvalidInputError("gains must be positive and finite");
}

// Shared active-set iteration: drop subcarriers whose power would go
// negative, recompute the water level, repeat until consistent.
std::vector<double> waterfill(const std::vector<double>& gains, double budget) {
    const std::size_t n = gains.size();
    std::vector<char> active(n, 1);
    std::vector<double> p(n, 0.0);
    for (;;) {
        double inv_sum = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i]) {
                inv_sum += 1.0 / gains[i];
                ++count;
            }
        const double mu = (budget + inv_sum) / static_cast<double>(count);
        bool dropped = false;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && mu - 1.0 / gains[i] < 0.0) {
                active[i] = 0;
                dropped = true;
            }
        if (!dropped) {
            for (std::size_t i = 0; i < n; ++i)
                p[i] = active[i] ? mu - 1.0 / gains[i] : 0.0;
            return p;
        }
        // The strongest gain never drops (mu >= mean of 1/H >= 1/H_max), so
        // the active set cannot empty out.
    }
}

}  // namespace

std::vector<double> waterfill_user(const std::vector<double>& gains, double budget) {
    check_gains(gains);
    if (budget < 0) throw InvalidInputError("budget must be >= 0");
    return waterfill(gains, budget);
}

double waterfill_rate(const std::vector<double>& gains, double budget) {
    const auto p = waterfill_user(gains, budget);
    double rate = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        rate += std::log2(1.0 + p[i] * gains[i]);
    return rate;
}

UserWaterfillSummary compute_vw(const std::vector<double>& gains) {
    check_gains(gains);
    std::vector<double> sorted(gains);
    std::sort(sorted.begin(), sorted.end());
    const double lowest = sorted.front();

    UserWaterfillSummary s;
    double log_sum = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        s.excess_offset += (sorted[i] - lowest) / (sorted[i] * lowest);
    for (double g : sorted) log_sum += std::log(g / lowest);
    s.gain_ratio = std::exp(log_sum / static_cast<double>(sorted.size()));
    return s;
}

std::vector<double> global_waterfill(const std::vector<double>& gains,
                                     double total_power) {
    check_gains(gains);
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");
    return waterfill(gains, total_power);
}

}  // namespace ofdma
