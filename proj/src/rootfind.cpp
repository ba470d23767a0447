#include <cmath>

#include "ofdma/solvers.hpp"
#include "ofdma/waterfill.hpp"
#include "solver_util.hpp"

namespace ofdma {
namespace {

// Inverts the strictly increasing map P -> waterfill_rate(gains, P).
double power_for_rate(const std::vector<double>& gains, double target_rate,
                      double hint_upper) {
    if (target_rate <= 0) return 0.0;
    double lo = 0.0;
    double hi = hint_upper > 0 ? hint_upper : 1.0;
    int doublings = 0;
    while (waterfill_rate(gains, hi) < target_rate) {
        hi *= 2.0;
        if (++doublings > 200)
            throw NumericalFailureError("rate target unreachable");
    }
    // Newton on the water level: dR/dP = 1/(mu ln 2) with mu the current
    // level; bisection fallback keeps the bracket.
    double p = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const auto powers = waterfill_user(gains, p);
        double rate = 0.0, mu = 0.0;
        int active = 0;
        for (std::size_t i = 0; i < gains.size(); ++i) {
            rate += std::log2(1.0 + powers[i] * gains[i]);
            if (powers[i] > 0) {
                mu += powers[i] + 1.0 / gains[i];
                ++active;
            }
        }
        const double err = rate - target_rate;
        if (std::fabs(err) <= 1e-13 * std::max(1.0, target_rate)) return p;
        if (err > 0)
            hi = p;
        else
            lo = p;
        // dR/dP = 1/(mu ln 2) at the current water level.
        double step = p;
        if (active > 0) {
            mu /= active;
            step = p - err * mu * std::log(2.0);
        }
        p = (step > lo && step < hi) ? step : 0.5 * (lo + hi);
    }
    return p;
}

struct Workspace {
    std::vector<std::vector<double>> gains;  // per user
};

Workspace make_workspace(const ChannelMatrix& channel,
                         const AssignmentMatrix& assignment) {
    detail::check_dimensions(channel, assignment);
    Workspace w;
    w.gains.resize(channel.users);
    for (int k = 0; k < channel.users; ++k)
        w.gains[k] = detail::gains_only(detail::owned_gains(channel, assignment, k));
    return w;
}

std::vector<double> totals_for_first_power(const Workspace& w,
                                           const std::vector<double>& proportions,
                                           double first_user_power,
                                           double total_power) {
    std::vector<double> totals(w.gains.size(), 0.0);
    totals[0] = first_user_power;
    const double rate_per_share =
        waterfill_rate(w.gains[0], first_user_power) / proportions[0];
    for (std::size_t k = 1; k < w.gains.size(); ++k)
        totals[k] =
            power_for_rate(w.gains[k], rate_per_share * proportions[k], total_power);
    return totals;
}

double residual_of_totals(const std::vector<double>& totals, double total_power) {
    double sum = 0.0;
    for (double t : totals) sum += t;
    return sum - total_power;
}

}  // namespace

double proportionality_residual(double first_user_power,
                                const ChannelMatrix& channel,
                                const AssignmentMatrix& assignment,
                                const std::vector<double>& proportions,
                                double total_power) {
    if (first_user_power < 0 || first_user_power > total_power)
        throw InvalidInputError("first_user_power must lie in [0, total_power]");
    const auto w = make_workspace(channel, assignment);
    return residual_of_totals(
        totals_for_first_power(w, proportions, first_user_power, total_power),
        total_power);
}

PowerAllocation rootfind_power_split(const ChannelMatrix& channel,
                                     const AssignmentMatrix& assignment,
                                     const std::vector<double>& proportions,
                                     double total_power) {
    const auto w = make_workspace(channel, assignment);
    const int num_users = channel.users;
    if (static_cast<int>(proportions.size()) != num_users)
        throw InvalidInputError("proportions length must equal users");
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");

    std::vector<double> totals;
    if (num_users == 1) {
        totals = {total_power};
    } else {
        auto residual_at = [&](double p1) {
            return residual_of_totals(
                totals_for_first_power(w, proportions, p1, total_power), total_power);
        };
        double lo = 0.0, hi = total_power;
        double f_lo = residual_at(lo);  // -total_power by construction
        double f_hi = residual_at(hi);  // >= 0: user 1 already exhausts the budget
        if (f_lo > 0 || f_hi < 0)
            throw NumericalFailureError(
                "residual not bracketed on [0," + std::to_string(total_power) +
                "]: f(lo)=" + std::to_string(f_lo) + " f(hi)=" + std::to_string(f_hi));

        const double tol = 1e-9 * total_power;
        const double fd_step = 1e-6 * total_power;
        double p1 = proportions[0] * total_power;
        for (int it = 0; it < 200; ++it) {
            const double f = residual_at(p1);
            if (std::fabs(f) <= tol) break;
            if (f > 0)
                hi = p1;
            else
                lo = p1;
            const double f_plus = residual_at(std::min(p1 + fd_step, total_power));
            const double f_minus = residual_at(std::max(p1 - fd_step, 0.0));
            const double deriv = (f_plus - f_minus) / (2.0 * fd_step);
            double next = deriv > 0 ? p1 - f / deriv : -1.0;
            p1 = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
        }
        totals = totals_for_first_power(w, proportions, p1, total_power);
        // Land the budget exactly on the last solved point.
        const double excess = residual_of_totals(totals, total_power);
        totals[0] -= excess;
        if (totals[0] < 0) totals[0] = 0;
    }

    std::vector<std::vector<double>> per_user_powers(num_users);
    for (int k = 0; k < num_users; ++k)
        per_user_powers[k] = waterfill_user(w.gains[k], totals[k]);
    return detail::fold_allocation(channel, assignment, per_user_powers);
}

}  // namespace ofdma
