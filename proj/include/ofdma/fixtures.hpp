#pragma once

#include <string>
#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

// One cell of a published desk experiment, kept for side-by-side reporting.
struct PublishedValue {
    std::string method;    // solver row the cell belongs to
    std::string quantity;  // power_totals | per_user_rates | capacity |
                           // rate_ratio | capacity_pairs
    std::vector<double> values;
    double abs_tolerance;  // used when > 0
    double rel_tolerance;  // used when abs_tolerance <= 0
    bool expected_reproducible;
    std::string note;      // filled when expected_reproducible is false
};

struct Fixture {
    std::string name;
    ChannelMatrix channel;
    AssignmentMatrix assignment;  // fixtures carry their printed assignment
    Scenario scenario;
    std::vector<PublishedValue> published;
};

// name is one of "table4", "table5", "table6"; anything else -> NotFoundError.
// Fixture channels keep the printed zeros on off-assignment entries, so the
// assignment stage is bypassed for them.
Fixture channel_from_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace ofdma
