#pragma once

#include <cstdint>
#include <string>

#include "ofdma/types.hpp"

namespace ofdma {

// Inverse-CDF exponential draw from a 64-bit uniform word. Exposed so tests
// can replay the generator's documented recipe independently.
double exponential_from_u64(std::uint64_t word, double mean);

// K x N grid of i.i.d. exponential gains (squared-magnitude Rayleigh fading)
// with mean 10^(mean_snr_db/10). Draws come from std::mt19937_64 seeded with
// `seed`, consumed row-major (user-major, then subcarrier), one 64-bit word
// per entry, so identical seeds reproduce bit-identical matrices everywhere.
ChannelMatrix generate_channel(int users, int subcarriers, double mean_snr_db,
                               std::uint64_t seed);

}  // namespace ofdma
