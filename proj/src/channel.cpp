#include "ofdma/channel.hpp"

#include <cmath>
#include <random>

namespace ofdma {

double exponential_from_u64(std::uint64_t word, double mean) {
    // 53-bit uniform centered in (0,1), then inverse CDF. Avoids the
    // unspecified std::exponential_distribution so the stream is
    // platform-stable, and keeps every draw strictly positive and finite.
    const double u = (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
    return -mean * std::log1p(-u);
}

ChannelMatrix generate_channel(int users, int subcarriers, double mean_snr_db,
                               std::uint64_t seed) {
    if (users < 1 || subcarriers < 1)
        throw InvalidInputError("channel dimensions must be positive");
    if (!std::isfinite(mean_snr_db))
        throw InvalidInputError("mean_snr_db must be finite");

    const double mean = std::pow(10.0, mean_snr_db / 10.0);
    std::mt19937_64 rng(seed);

    ChannelMatrix ch;
    ch.users = users;
    ch.subcarriers = subcarriers;
    ch.h = Matrix(users, subcarriers);
    for (int k = 0; k < users; ++k)
        for (int n = 0; n < subcarriers; ++n)
            ch.h(k, n) = exponential_from_u64(rng(), mean);
    return ch;
}

}  // namespace ofdma
