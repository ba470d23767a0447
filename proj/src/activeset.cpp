#include "ofdma/solvers.hpp"
#include "ofdma/waterfill.hpp"
#include "solver_util.hpp"

namespace ofdma {

PowerAllocation activeset_power_split(const ChannelMatrix& channel,
                                      const AssignmentMatrix& assignment,
                                      const std::vector<double>& proportions,
                                      double total_power) {
    detail::check_dimensions(channel, assignment);
    (void)proportions;  // fairness enters only through the quota counts
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");

    // Pool every owned subcarrier with its owner's gain and water-fill once.
    std::vector<double> pooled(assignment.subcarriers);
    for (int n = 0; n < assignment.subcarriers; ++n) {
        const double g = channel.h(assignment.owner[n], n);
        if (!(g > 0)) throw InvalidInputError("assigned gain must be positive");
        pooled[n] = g;
    }
    const auto powers = global_waterfill(pooled, total_power);

    PowerAllocation alloc;
    alloc.p = Matrix(channel.users, channel.subcarriers);
    alloc.per_user_total.assign(channel.users, 0.0);
    for (int n = 0; n < assignment.subcarriers; ++n) {
        const int k = assignment.owner[n];
        alloc.p(k, n) = powers[n];
        alloc.per_user_total[k] += powers[n];
    }
    return alloc;
}

}  // namespace ofdma
