#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

struct SweepSpec {
    int users_min = 1;
    int users_max = 8;
    int trials = 1;
    std::vector<Method> methods = {Method::linear, Method::rootfind,
                                   Method::active_set, Method::ga};
    Scenario base;            // num_users ignored; supplies N, power, SNR, seed, GA
    bool emit_timings = true; // when false, runtime_us is written as 0
};

// Seed for trial t of the K-user point: base_seed XOR (K * 2^32 + t).
std::uint64_t sweep_seed(std::uint64_t base_seed, int users, int trial);

// Header: method,users,trial,capacity_bps_hz,prop_error,runtime_us,status
// Rows ordered by (method, users, trial); solver failures become status rows.
void run_sweep(const SweepSpec& spec, std::ostream& rows_csv,
               std::ostream& means_csv);

// Fixture replication: runs the requested method ("all" for every row) on a
// fixture and renders the computed values next to the published ones with a
// reproduced / not-reproduced flag per cell.
std::string fixture_report(const std::string& fixture_name,
                           const std::string& method_or_all,
                           bool emit_timings = true);

}  // namespace ofdma
