#pragma once

#include "ofdma/types.hpp"

namespace ofdma {

// Greedy subcarrier assignment under hard per-user quotas.
//
// Seeding: repeatedly give the globally highest-gain (user, subcarrier) pair
// among users with remaining quota its subcarrier; ties on gain break to the
// lower user index, then the lower subcarrier index. Refinement: apply
// quota-preserving owner swaps and three-way rotations while any of them
// improves the provisional total rate at uniform power total_power/N. Both
// stages are deterministic, so equal inputs always give equal assignments.
AssignmentMatrix assign_subcarriers(const ChannelMatrix& channel,
                                    const QuotaVector& quotas,
                                    double total_power = 1.0);

}  // namespace ofdma
