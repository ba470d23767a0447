#pragma once

// Test-only oracles, kept independent of the library's solver paths.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ofdma/assignment.hpp"
#include "ofdma/channel.hpp"
#include "ofdma/core.hpp"
#include "ofdma/types.hpp"

namespace oracle {

// Closed-form water-filling rate: keep the m strongest gains for the largest
// m whose water level covers the weakest kept subcarrier.
inline double waterfill_rate(std::vector<double> gains, double budget) {
    std::sort(gains.begin(), gains.end(), std::greater<>());
    const int n = static_cast<int>(gains.size());
    double inv_sum = 0.0;
    double best = 0.0;
    for (int m = 1; m <= n; ++m) {
        inv_sum += 1.0 / gains[m - 1];
        const double mu = (budget + inv_sum) / m;
        if (mu - 1.0 / gains[m - 1] < 0.0) break;
        double rate = 0.0;
        for (int i = 0; i < m; ++i) rate += std::log2(mu * gains[i]);
        best = rate;
    }
    return best;
}

inline double invert_rate(const std::vector<double>& gains, double target,
                          double hi_start) {
    if (target <= 0) return 0.0;
    double lo = 0.0, hi = hi_start;
    while (waterfill_rate(gains, hi) < target) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (waterfill_rate(gains, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Bisection-only proportional split: root of
//   sum_k P_k(P_1) - total_power,  P_k from R_k/gamma_k = R_1/gamma_1.
inline std::vector<double> bisect_prop_split(
    const std::vector<std::vector<double>>& user_gains,
    const std::vector<double>& proportions, double total_power) {
    const std::size_t num_users = user_gains.size();
    auto totals_at = [&](double p1) {
        std::vector<double> totals(num_users);
        totals[0] = p1;
        const double per_share = waterfill_rate(user_gains[0], p1) / proportions[0];
        for (std::size_t k = 1; k < num_users; ++k)
            totals[k] =
                invert_rate(user_gains[k], per_share * proportions[k], total_power);
        return totals;
    };
    if (num_users == 1) return {total_power};
    double lo = 0.0, hi = total_power;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const auto totals = totals_at(mid);
        const double sum = std::accumulate(totals.begin(), totals.end(), 0.0);
        (sum < total_power ? lo : hi) = mid;
    }
    return totals_at(0.5 * (lo + hi));
}

// Visits every quota-respecting exclusive assignment (owner vector).
inline void enumerate_assignments(int users, int subcarriers,
                                  const std::vector<int>& quotas,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> owner(subcarriers, -1);
    std::vector<int> used(users, 0);
    std::function<void(int)> rec = [&](int n) {
        if (n == subcarriers) {
            fn(owner);
            return;
        }
        for (int k = 0; k < users; ++k) {
            if (used[k] == quotas[k]) continue;
            owner[n] = k;
            ++used[k];
            rec(n + 1);
            --used[k];
            owner[n] = -1;
        }
    };
    rec(0);
}

// Equal-power total rate of an owner vector, the assignment stage's objective.
inline double equal_power_rate(const ofdma::ChannelMatrix& channel,
                               const std::vector<int>& owner, double total_power) {
    const double p = total_power / channel.subcarriers;
    double rate = 0.0;
    for (int n = 0; n < channel.subcarriers; ++n)
        rate += std::log2(1.0 + p * channel.h(owner[n], n));
    return rate;
}

}  // namespace oracle

namespace testutil {

struct Instance {
    ofdma::ChannelMatrix channel;
    ofdma::AssignmentMatrix assignment;
    std::vector<double> proportions;
    double total_power;
};

// Random feasible instance; proportions drawn from {uniform, random weights}.
inline Instance random_instance(std::uint64_t seed, int max_users = 8,
                                int max_subcarriers = 64) {
    std::mt19937_64 rng(seed);
    const int users = 1 + static_cast<int>(rng() % max_users);
    const int subcarriers =
        users + static_cast<int>(rng() % (max_subcarriers - users + 1));
    const double snr_db = 10.0 + static_cast<double>(rng() % 41);
    Instance inst;
    inst.channel = ofdma::generate_channel(users, subcarriers, snr_db, rng());
    if (rng() % 2) {
        inst.proportions.assign(users, 1.0 / users);
    } else {
        std::vector<double> w(users);
        for (double& x : w) x = 1.0 + static_cast<double>(rng() % 8);
        inst.proportions = ofdma::normalize_proportions(w);
    }
    inst.total_power = 0.5 + static_cast<double>(rng() % 20);
    const auto quotas = ofdma::compute_quotas(inst.proportions, subcarriers);
    inst.assignment =
        ofdma::assign_subcarriers(inst.channel, quotas, inst.total_power);
    return inst;
}

inline std::vector<std::vector<double>> user_gain_lists(const Instance& inst) {
    std::vector<std::vector<double>> gains(inst.channel.users);
    for (int n = 0; n < inst.channel.subcarriers; ++n) {
        const int k = inst.assignment.owner[n];
        gains[k].push_back(inst.channel.h(k, n));
    }
    return gains;
}

}  // namespace testutil
