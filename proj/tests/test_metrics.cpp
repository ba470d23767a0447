#include <doctest.h>

#include "ofdma/fixtures.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/solvers.hpp"
#include "test_support.hpp"

using namespace ofdma;

TEST_CASE("user_rate basics") {
    CHECK(user_rate({3, 5, 9}, {0, 0, 0}) == 0.0);
    CHECK(user_rate({1}, {1}) == 1.0);
    CHECK(user_rate({7}, {2.992}) == doctest::Approx(4.456).epsilon(1e-3));
    CHECK_THROWS_AS(user_rate({1, 2}, {0.5}), InvalidInputError);
}

TEST_CASE("total_capacity on the table5 active-set allocation") {
    const auto f = channel_from_fixture("table5");
    const auto alloc = activeset_power_split(f.channel, f.assignment,
                                             f.scenario.proportions, 1.0);
    CHECK(std::fabs(total_capacity(f.channel, f.assignment, alloc.p) - 4.620) <=
          0.005);

    const Matrix zeros(2, 8);
    CHECK(total_capacity(f.channel, f.assignment, zeros) == 0.0);

    const auto lin = linear_power_split(f.channel, f.assignment,
                                        f.scenario.proportions, 1.0);
    CHECK(total_capacity(f.channel, f.assignment, alloc.p) >
          total_capacity(f.channel, f.assignment, lin.p));
}

TEST_CASE("proportionality_error") {
    CHECK(proportionality_error({3, 1}, {0.75, 0.25}) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(proportionality_error({1, 1}, {0.75, 0.25}) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(proportionality_error({0, 0}, {0.5, 0.5}),
                    UndefinedMetricError);

    const auto inst = testutil::random_instance(42);
    const auto alloc = rootfind_power_split(inst.channel, inst.assignment,
                                            inst.proportions, inst.total_power);
    const auto report = make_rate_report(inst.channel, inst.assignment, alloc,
                                         inst.proportions, OfdmaProfile{});
    CHECK(report.proportionality_error <= 1e-6);
}

TEST_CASE("capacity is invariant under a user permutation") {
    const auto f = channel_from_fixture("table5");
    const auto alloc = activeset_power_split(f.channel, f.assignment,
                                             f.scenario.proportions, 1.0);
    const double cap = total_capacity(f.channel, f.assignment, alloc.p);

    // swap the two users everywhere
    ChannelMatrix ch2 = f.channel;
    Matrix p2(2, 8);
    AssignmentMatrix a2 = f.assignment;
    for (int n = 0; n < 8; ++n) {
        ch2.h(0, n) = f.channel.h(1, n);
        ch2.h(1, n) = f.channel.h(0, n);
        p2(0, n) = alloc.p(1, n);
        p2(1, n) = alloc.p(0, n);
        a2.owner[n] = 1 - f.assignment.owner[n];
    }
    std::swap(a2.quotas.counts[0], a2.quotas.counts[1]);
    CHECK(total_capacity(ch2, a2, p2) == doctest::Approx(cap).epsilon(1e-12));
}

TEST_CASE("doubling power adds at most one bit per subcarrier") {
    const auto inst = testutil::random_instance(7, 4, 16);
    const auto a1 = activeset_power_split(inst.channel, inst.assignment,
                                          inst.proportions, inst.total_power);
    const auto a2 = activeset_power_split(inst.channel, inst.assignment,
                                          inst.proportions, 2 * inst.total_power);
    const double c1 = total_capacity(inst.channel, inst.assignment, a1.p);
    const double c2 = total_capacity(inst.channel, inst.assignment, a2.p);
    CHECK(c2 >= c1);
    CHECK(c2 - c1 <= 1.0 + 1e-9);
}

TEST_CASE("physical rate scales by the profile bandwidth") {
    const auto f = channel_from_fixture("table5");
    const auto alloc = activeset_power_split(f.channel, f.assignment,
                                             f.scenario.proportions, 1.0);
    const auto report = make_rate_report(f.channel, f.assignment, alloc,
                                         f.scenario.proportions, f.scenario.profile);
    CHECK(report.physical_total_rate_bps ==
          doctest::Approx(report.total_capacity * 20e6).epsilon(1e-12));
}

TEST_CASE("compare_methods runs all four rows in order") {
    const auto f = channel_from_fixture("table5");
    const auto cmp = compare_methods(f.scenario, f.channel, f.assignment);
    REQUIRE(cmp.rows.size() == 4);
    CHECK(cmp.rows[0].method == Method::linear);
    CHECK(cmp.rows[1].method == Method::rootfind);
    CHECK(cmp.rows[2].method == Method::active_set);
    CHECK(cmp.rows[3].method == Method::ga);
    for (const auto& row : cmp.rows) {
        REQUIRE(row.report.has_value());
        CHECK(row.status == "ok");
    }
    const double cap_active = cmp.rows[2].report->total_capacity;
    for (const auto& row : cmp.rows)
        CHECK(cap_active >= row.report->total_capacity - 1e-9);
}

TEST_CASE("compare_methods keeps going when a solver is inapplicable") {
    // quotas {3, 2} with a 50/50 target: linear must fail, others succeed
    const auto ch = generate_channel(2, 5, 25.0, 12);
    Scenario sc;
    sc.num_users = 2;
    sc.num_subcarriers = 5;
    sc.proportions = {0.5, 0.5};
    sc.ga.max_generations = 10;
    sc.validate();
    const auto quotas = compute_quotas(sc.proportions, 5);
    const auto a = assign_subcarriers(ch, quotas, sc.total_power_w);
    const auto cmp = compare_methods(sc, ch, a);
    CHECK_FALSE(cmp.rows[0].report.has_value());
    CHECK(cmp.rows[0].status != "ok");
    for (std::size_t i = 1; i < 4; ++i) CHECK(cmp.rows[i].report.has_value());
}

TEST_CASE("K=1 makes all four methods identical") {
    const auto ch = generate_channel(1, 8, 25.0, 77);
    Scenario sc;
    sc.num_users = 1;
    sc.num_subcarriers = 8;
    sc.validate();
    const auto a =
        assign_subcarriers(ch, compute_quotas(sc.proportions, 8), sc.total_power_w);
    const auto cmp = compare_methods(sc, ch, a);
    const double ref = cmp.rows[0].report->total_capacity;
    for (const auto& row : cmp.rows)
        CHECK(row.report->total_capacity == doctest::Approx(ref).epsilon(1e-9));
}
