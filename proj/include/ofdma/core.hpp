#pragma once

#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

// Scales positive weights to fractions summing to 1.
std::vector<double> normalize_proportions(const std::vector<double>& weights);

// Largest-remainder apportionment of N subcarriers across users, ties in the
// fractional remainders broken toward the lower user index. Every user with a
// positive share receives at least one subcarrier when N >= K.
QuotaVector compute_quotas(const std::vector<double>& proportions, int num_subcarriers);

}  // namespace ofdma
