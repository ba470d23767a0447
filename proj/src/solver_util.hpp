#pragma once

#include <utility>
#include <vector>

#include "ofdma/types.hpp"

namespace ofdma::detail {

inline void check_dimensions(const ChannelMatrix& channel,
                             const AssignmentMatrix& assignment) {
    if (channel.users != assignment.users ||
        channel.subcarriers != assignment.subcarriers)
        throw InvalidInputError("channel/assignment dimension mismatch");
}

// (subcarrier index, gain) pairs a user owns, in subcarrier order.
inline std::vector<std::pair<int, double>> owned_gains(
    const ChannelMatrix& channel, const AssignmentMatrix& assignment, int user) {
    std::vector<std::pair<int, double>> out;
    for (int n = 0; n < assignment.subcarriers; ++n)
        if (assignment.owner[n] == user) {
            const double g = channel.h(user, n);
            if (!(g > 0))
                throw InvalidInputError("assigned gain must be positive");
            out.emplace_back(n, g);
        }
    return out;
}

inline std::vector<double> gains_only(
    const std::vector<std::pair<int, double>>& pairs) {
    std::vector<double> g;
    g.reserve(pairs.size());
    for (const auto& [n, gain] : pairs) g.push_back(gain);
    return g;
}

// Assembles the K x N grid from per-user budgets distributed by a
// per-user power vector aligned with owned_gains() order.
PowerAllocation fold_allocation(const ChannelMatrix& channel,
                                const AssignmentMatrix& assignment,
                                const std::vector<std::vector<double>>& per_user_powers);

}  // namespace ofdma::detail
