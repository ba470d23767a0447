#include <algorithm>
#include <cmath>
#include <numeric>

#include "ofdma/solvers.hpp"
#include "ofdma/waterfill.hpp"
#include "solver_util.hpp"

namespace ofdma {

namespace detail {

PowerAllocation fold_allocation(
    const ChannelMatrix& channel, const AssignmentMatrix& assignment,
    const std::vector<std::vector<double>>& per_user_powers) {
    PowerAllocation alloc;
    alloc.p = Matrix(channel.users, channel.subcarriers);
    alloc.per_user_total.assign(channel.users, 0.0);
    for (int k = 0; k < channel.users; ++k) {
        const auto owned = owned_gains(channel, assignment, k);
        for (std::size_t i = 0; i < owned.size(); ++i) {
            alloc.p(k, owned[i].first) = per_user_powers[k][i];
            alloc.per_user_total[k] += per_user_powers[k][i];
        }
    }
    return alloc;
}

}  // namespace detail

PowerAllocation linear_power_split(const ChannelMatrix& channel,
                                   const AssignmentMatrix& assignment,
                                   const std::vector<double>& proportions,
                                   double total_power) {
    detail::check_dimensions(channel, assignment);
    const int num_users = channel.users;
    if (static_cast<int>(proportions.size()) != num_users)
        throw InvalidInputError("proportions length must equal users");
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");

    // Linear case requires quota counts proportional to the rate fractions.
    const double ratio0 = assignment.quotas.counts[0] / proportions[0];
    for (int k = 1; k < num_users; ++k) {
        const double ratio = assignment.quotas.counts[k] / proportions[k];
        if (std::fabs(ratio - ratio0) > 1e-9 * std::fabs(ratio0))
            throw MethodInapplicableError(
                "quotas are not proportional to the rate fractions; use rootfind");
    }

    // With all of a user's subcarriers active, its water-filled rate is
    //   N_k * log2(W_k * (1 + H_min * (P_k - V_k) / N_k))
    // so equal rate-per-share reduces to a_k * P_k + b_k equal across users,
    // with a_k = W_k * H_min / N_k and b_k = W_k * (1 - H_min * V_k / N_k).
    std::vector<std::vector<double>> user_gains(num_users);
    std::vector<double> a(num_users), b(num_users);
    for (int k = 0; k < num_users; ++k) {
        user_gains[k] = detail::gains_only(detail::owned_gains(channel, assignment, k));
        const auto vw = compute_vw(user_gains[k]);
        const double n_k = static_cast<double>(user_gains[k].size());
        const double h_min = *std::min_element(user_gains[k].begin(), user_gains[k].end());
        a[k] = vw.gain_ratio * h_min / n_k;
        b[k] = vw.gain_ratio * (1.0 - h_min * vw.excess_offset / n_k);
    }

    // Substitute P_k = (a_0 P_0 + b_0 - b_k) / a_k into the budget row; if a
    // total goes negative, clamp it to zero, drop its proportionality row and
    // re-solve over the remaining users.
    std::vector<char> clamped(num_users, 0);
    std::vector<double> totals(num_users, 0.0);
    for (;;) {
        int ref = -1;
        for (int k = 0; k < num_users; ++k)
            if (!clamped[k]) {
                ref = k;
                break;
            }
        if (ref < 0)
            throw NumericalFailureError("all users clamped to zero power");

        double coeff = 0.0, constant = 0.0;  // sum P_k = coeff * P_ref + constant
        for (int k = 0; k < num_users; ++k) {
            if (clamped[k]) continue;
            coeff += a[ref] / a[k];
            constant += (b[ref] - b[k]) / a[k];
        }
        if (!(std::fabs(coeff) > 0))
            throw NumericalFailureError("singular proportionality system");
        const double p_ref = (total_power - constant) / coeff;

        bool newly_clamped = false;
        for (int k = 0; k < num_users; ++k) {
            if (clamped[k]) {
                totals[k] = 0.0;
                continue;
            }
            totals[k] = (a[ref] * p_ref + b[ref] - b[k]) / a[k];
            if (totals[k] < 0) {
                clamped[k] = 1;
                newly_clamped = true;
            }
        }
        if (!newly_clamped) break;
    }

    // The closed form above assumes every owned subcarrier stays active, which
    // holds iff P_k >= V_k. Below that threshold water-filling drops a
    // subcarrier and the equal-rate conditions are no longer linear.
    for (int k = 0; k < num_users; ++k) {
        if (clamped[k]) continue;
        const auto vw = compute_vw(user_gains[k]);
        if (totals[k] < vw.excess_offset * (1.0 - 1e-12))
            throw MethodInapplicableError(
                "per-user budget below the all-active water-filling threshold; "
                "use rootfind");
    }

    std::vector<std::vector<double>> per_user_powers(num_users);
    for (int k = 0; k < num_users; ++k)
        per_user_powers[k] = waterfill_user(user_gains[k], totals[k]);
    return detail::fold_allocation(channel, assignment, per_user_powers);
}

}  // namespace ofdma
