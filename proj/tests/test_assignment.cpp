#include <doctest.h>

#include "ofdma/assignment.hpp"
#include "test_support.hpp"

using namespace ofdma;

namespace {

ChannelMatrix channel_of(const std::vector<std::vector<double>>& rows) {
    ChannelMatrix ch;
    ch.users = static_cast<int>(rows.size());
    ch.subcarriers = static_cast<int>(rows[0].size());
    ch.h = Matrix(ch.users, ch.subcarriers);
    for (int k = 0; k < ch.users; ++k)
        for (int n = 0; n < ch.subcarriers; ++n) ch.h(k, n) = rows[k][n];
    return ch;
}

}  // namespace

TEST_CASE("single user owns everything") {
    const auto ch = generate_channel(1, 6, 20.0, 3);
    const auto a = assign_subcarriers(ch, QuotaVector{{6}}, 1.0);
    for (int o : a.owner) CHECK(o == 0);
}

TEST_CASE("each user gets its unique best") {
    const auto ch = channel_of({{10, 1}, {1, 10}});
    const auto a = assign_subcarriers(ch, QuotaVector{{1, 1}}, 1.0);
    CHECK(a.owner == std::vector<int>{0, 1});
}

TEST_CASE("greedy pick matches the exhaustive optimum on the worked grid") {
    const auto ch = channel_of({{8, 7, 2, 1}, {6, 5, 4, 3}});
    const QuotaVector quotas{{2, 2}};

    const auto a = assign_subcarriers(ch, quotas, 1.0);
    CHECK(a.owner == std::vector<int>{0, 0, 1, 1});

    double best = 0.0;
    std::vector<int> best_owner;
    oracle::enumerate_assignments(2, 4, quotas.counts, [&](const std::vector<int>& o) {
        const double r = oracle::equal_power_rate(ch, o, 1.0);
        if (r > best) {
            best = r;
            best_owner = o;
        }
    });
    CHECK(best_owner == a.owner);
}

TEST_CASE("exclusivity and quota exactness on random inputs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = testutil::random_instance(seed);
        const auto& a = inst.assignment;
        std::vector<int> counts(a.users, 0);
        for (int n = 0; n < a.subcarriers; ++n) {
            CHECK(a.owner[n] >= 0);
            CHECK(a.owner[n] < a.users);
            ++counts[a.owner[n]];
        }
        CHECK(counts == a.quotas.counts);
    }
}

TEST_CASE("within 5% of brute-force equal-power capacity on small instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int users = 1 + static_cast<int>(rng() % 3);
        const int subcarriers = users + static_cast<int>(rng() % (8 - users + 1));
        const auto ch = generate_channel(users, subcarriers, 25.0, rng());
        const auto quotas = compute_quotas(
            std::vector<double>(users, 1.0 / users), subcarriers);
        const double power = 1.0;
        const auto a = assign_subcarriers(ch, quotas, power);

        double best = 0.0;
        oracle::enumerate_assignments(users, subcarriers, quotas.counts,
                                      [&](const std::vector<int>& o) {
                                          best = std::max(
                                              best, oracle::equal_power_rate(ch, o, power));
                                      });
        const double got = oracle::equal_power_rate(ch, a.owner, power);
        CHECK(got >= 0.95 * best);
    }
}

TEST_CASE("permutation equivariance away from ties") {
    // Preferred columns are disjoint, so no index tie-break binds.
    const auto ch = channel_of({{8.0, 7.0, 0.1, 0.2}, {0.3, 0.4, 6.0, 5.0}});
    const auto a = assign_subcarriers(ch, QuotaVector{{2, 2}}, 1.0);
    CHECK(a.owner == std::vector<int>{0, 0, 1, 1});

    const auto swapped = channel_of({{0.3, 0.4, 6.0, 5.0}, {8.0, 7.0, 0.1, 0.2}});
    const auto b = assign_subcarriers(swapped, QuotaVector{{2, 2}}, 1.0);
    for (int n = 0; n < 4; ++n) CHECK(b.owner[n] == 1 - a.owner[n]);
}

TEST_CASE("dimension mismatch rejected") {
    const auto ch = generate_channel(2, 4, 20.0, 1);
    CHECK_THROWS_AS(assign_subcarriers(ch, QuotaVector{{2, 1}}, 1.0),
                    InvalidInputError);
    CHECK_THROWS_AS(assign_subcarriers(ch, QuotaVector{{2, 1, 1}}, 1.0),
                    InvalidInputError);
}
