#pragma once

#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

// Single-user water-filling: p_n = max(0, mu - 1/H_n) with mu set so the
// powers sum to `budget`. Subcarriers that would go negative are dropped and
// mu recomputed until the active set is consistent.
std::vector<double> waterfill_user(const std::vector<double>& gains, double budget);

// Rate of a water-filled budget without materializing the power vector.
double waterfill_rate(const std::vector<double>& gains, double budget);

// V/W summary of a user's gain set (ascending sort applied internally):
//   V = sum_{n>=2} (H_(n) - H_(1)) / (H_(n) * H_(1))
//   W = (prod_n H_(n)/H_(1))^(1/N)
// With every subcarrier active, the water-filled rate is exactly
//   N * log2(W * (1 + H_(1) * (P - V) / N)).
UserWaterfillSummary compute_vw(const std::vector<double>& gains);

// Pooled water-filling over every owned subcarrier at once; the unique
// maximizer of sum log2(1 + p*H) under the total budget.
std::vector<double> global_waterfill(const std::vector<double>& gains,
                                     double total_power);

}  // namespace ofdma
