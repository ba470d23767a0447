#include "ofdma/assignment.hpp"

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

namespace ofdma {

namespace {

// Gain threshold for accepting a refinement move; keeps the loop from cycling
// on floating-point noise while still taking every real improvement.
constexpr double kMoveEps = 1e-12;

}  // namespace

AssignmentMatrix assign_subcarriers(const ChannelMatrix& channel,
                                    const QuotaVector& quotas,
                                    double total_power) {
    const int num_users = channel.users;
    const int num_subcarriers = channel.subcarriers;
    if (static_cast<int>(quotas.counts.size()) != num_users)
        throw InvalidInputError("quota length must equal users");
    if (quotas.total() != num_subcarriers)
        throw InvalidInputError("quota total must equal subcarriers");
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");

    AssignmentMatrix a;
    a.users = num_users;
    a.subcarriers = num_subcarriers;
    a.owner.assign(num_subcarriers, -1);
    a.quotas = quotas;

    // Seed: highest gain first, among users that still have quota. Ties keep
    // the lower user index, then the lower subcarrier index.
    std::vector<int> taken(num_users, 0);
    for (int step = 0; step < num_subcarriers; ++step) {
        int best_user = -1, best_sub = -1;
        for (int k = 0; k < num_users; ++k) {
            if (taken[k] >= quotas.counts[k]) continue;
            for (int n = 0; n < num_subcarriers; ++n) {
                if (a.owner[n] >= 0) continue;
                if (best_user < 0 ||
                    channel.h(k, n) > channel.h(best_user, best_sub)) {
                    best_user = k;
                    best_sub = n;
                }
            }
        }
        if (best_user < 0 || !(channel.h(best_user, best_sub) > 0))
            throw InvalidInputError("no positive-gain subcarrier available");
        a.owner[best_sub] = best_user;
        ++taken[best_user];
    }

    // Provisional per-(user, subcarrier) rates at the uniform power estimate.
    const double uniform_power = total_power / num_subcarriers;
    Matrix rate(num_users, num_subcarriers);
    for (int k = 0; k < num_users; ++k)
        for (int n = 0; n < num_subcarriers; ++n)
            rate(k, n) = std::log2(1.0 + uniform_power * channel.h(k, n));

    // Refine: owner swaps preserve quotas exactly; when no swap helps, look
    // for a three-way rotation before declaring the assignment final.
    for (;;) {
        double best_gain = kMoveEps;
        int bi = -1, bj = -1;
        for (int i = 0; i < num_subcarriers; ++i)
            for (int j = i + 1; j < num_subcarriers; ++j) {
                const int u = a.owner[i], v = a.owner[j];
                if (u == v) continue;
                const double gain =
                    rate(v, i) + rate(u, j) - rate(u, i) - rate(v, j);
                if (gain > best_gain) {
                    best_gain = gain;
                    bi = i;
                    bj = j;
                }
            }
        if (bi >= 0) {
            std::swap(a.owner[bi], a.owner[bj]);
            continue;
        }

        best_gain = kMoveEps;
        int bk = -1;
        for (int i = 0; i < num_subcarriers; ++i)
            for (int j = 0; j < num_subcarriers; ++j) {
                if (j == i) continue;
                const int u = a.owner[i], v = a.owner[j];
                if (u == v) continue;
                for (int k = 0; k < num_subcarriers; ++k) {
                    if (k == i || k == j) continue;
                    const int w = a.owner[k];
                    if (w == v || w == u) continue;
                    // i takes j's owner, j takes k's owner, k takes i's owner
                    const double gain = rate(v, i) + rate(w, j) + rate(u, k) -
                                        rate(u, i) - rate(v, j) - rate(w, k);
                    if (gain > best_gain) {
                        best_gain = gain;
                        bi = i;
                        bj = j;
                        bk = k;
                    }
                }
            }
        if (bi < 0) break;
        const int u = a.owner[bi];
        a.owner[bi] = a.owner[bj];
        a.owner[bj] = a.owner[bk];
        a.owner[bk] = u;
    }
    return a;
}

}  // namespace ofdma
