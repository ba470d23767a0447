#pragma once

#include <iosfwd>
#include <string>

#include "ofdma/types.hpp"

namespace ofdma {

// Line-based scenario grammar: one `key = value` per line, `#` comments,
// comma-separated lists. Keys: users, subcarriers, total_power_w,
// mean_snr_db, proportions, method, seed, ga_population, ga_generations,
// ga_crossover, ga_mutation_sigma, ga_elites, ga_penalty.
// `users` is mandatory; everything else defaults.
Scenario parse_scenario(const std::string& text);

// Channel matrices as CSV grids: one row per user, one column per subcarrier.
void write_channel_csv(std::ostream& out, const ChannelMatrix& channel);
ChannelMatrix read_channel_csv(std::istream& in);

// Stable decimal formatting used for every CSV/report number.
std::string format_double(double x);

}  // namespace ofdma
