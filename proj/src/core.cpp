#include "ofdma/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ofdma {

std::vector<double> normalize_proportions(const std::vector<double>& weights) {
    if (weights.empty()) throw InvalidInputError("weights must be nonempty");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0) || !std::isfinite(w))
            throw InvalidInputError("weights must be positive and finite");
        sum += w;
    }
    std::vector<double> out(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i] / sum;
    return out;
}

QuotaVector compute_quotas(const std::vector<double>& proportions, int num_subcarriers) {
    const int num_users = static_cast<int>(proportions.size());
    if (num_users == 0) throw InvalidInputError("proportions must be nonempty");
    if (num_subcarriers < num_users)
        throw InfeasibleQuotaError("need at least one subcarrier per user");

    QuotaVector q;
    q.counts.resize(num_users);
    std::vector<double> remainder(num_users);
    int assigned = 0;
    for (int k = 0; k < num_users; ++k) {
        double share = proportions[k] * num_subcarriers;
        q.counts[k] = static_cast<int>(std::floor(share));
        remainder[k] = share - q.counts[k];
        assigned += q.counts[k];
    }

    // Leftover units by descending remainder, ties toward the lower index.
    std::vector<int> order(num_users);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return remainder[a] > remainder[b];
    });
    for (int i = 0; assigned < num_subcarriers; ++i) {
        ++q.counts[order[i % num_users]];
        ++assigned;
    }

    // Every positive-share user keeps at least one subcarrier; donors are the
    // current largest quotas (lowest index on ties).
    for (int k = 0; k < num_users; ++k) {
        while (q.counts[k] == 0 && proportions[k] > 0) {
            int donor = static_cast<int>(
                std::max_element(q.counts.begin(), q.counts.end()) - q.counts.begin());
            if (q.counts[donor] <= 1) break;
            --q.counts[donor];
            ++q.counts[k];
        }
    }
    return q;
}

}  // namespace ofdma
