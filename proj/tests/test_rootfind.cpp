#include <doctest.h>

#include <numeric>

#include "ofdma/fixtures.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/solvers.hpp"
#include "test_support.hpp"

using namespace ofdma;

TEST_CASE("residual endpoints") {
    const auto f = channel_from_fixture("table4");
    CHECK(proportionality_residual(0.0, f.channel, f.assignment,
                                   f.scenario.proportions, 10.0) ==
          doctest::Approx(-10.0).epsilon(1e-12));

    // single user: residual vanishes at the full budget
    const auto ch = generate_channel(1, 3, 20.0, 8);
    AssignmentMatrix a;
    a.users = 1;
    a.subcarriers = 3;
    a.owner = {0, 0, 0};
    a.quotas.counts = {3};
    CHECK(proportionality_residual(2.0, ch, a, {1.0}, 2.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("residual is consistent with the linear-case solution") {
    const auto f = channel_from_fixture("table4");
    const auto lin = linear_power_split(f.channel, f.assignment,
                                        f.scenario.proportions, 10.0);
    CHECK(std::fabs(proportionality_residual(lin.per_user_total[0], f.channel,
                                             f.assignment, f.scenario.proportions,
                                             10.0)) <= 1e-6 * 10.0);
}

TEST_CASE("worked fixture against the bisection-only oracle") {
    const auto f = channel_from_fixture("table4");
    const auto alloc = rootfind_power_split(f.channel, f.assignment,
                                            f.scenario.proportions, 10.0);
    const auto expect =
        oracle::bisect_prop_split({{10, 8, 9}, {7}}, {0.75, 0.25}, 10.0);
    CHECK(alloc.per_user_total[0] == doctest::Approx(expect[0]).epsilon(1e-7));
    CHECK(alloc.per_user_total[1] == doctest::Approx(expect[1]).epsilon(1e-7));

    const auto report = make_rate_report(f.channel, f.assignment, alloc,
                                         f.scenario.proportions, f.scenario.profile);
    CHECK(report.per_user_rate[0] / report.per_user_rate[1] ==
          doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("symmetric two-user instance splits evenly") {
    ChannelMatrix ch;
    ch.users = 2;
    ch.subcarriers = 4;
    ch.h = Matrix(2, 4);
    ch.h(0, 0) = 12;
    ch.h(0, 1) = 30;
    ch.h(1, 2) = 12;
    ch.h(1, 3) = 30;
    AssignmentMatrix a;
    a.users = 2;
    a.subcarriers = 4;
    a.owner = {0, 0, 1, 1};
    a.quotas.counts = {2, 2};
    const auto alloc = rootfind_power_split(ch, a, {0.5, 0.5}, 2.0);
    CHECK(alloc.per_user_total[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(alloc.per_user_total[1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("exact proportionality on random instances") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = testutil::random_instance(seed);
        const auto alloc =
            rootfind_power_split(inst.channel, inst.assignment, inst.proportions,
                                 inst.total_power);
        const double sum = std::accumulate(alloc.per_user_total.begin(),
                                           alloc.per_user_total.end(), 0.0);
        CHECK(sum == doctest::Approx(inst.total_power).epsilon(1e-9));
        for (double t : alloc.per_user_total) CHECK(t >= 0);

        const auto report = make_rate_report(inst.channel, inst.assignment, alloc,
                                             inst.proportions, OfdmaProfile{});
        const double ref = report.per_user_rate[0] / inst.proportions[0];
        for (std::size_t k = 0; k < inst.proportions.size(); ++k)
            CHECK(report.per_user_rate[k] / inst.proportions[k] ==
                  doctest::Approx(ref).epsilon(1e-6));
        CHECK(report.proportionality_error <= 1e-6);
    }
}

TEST_CASE("Newton path agrees with the bisection-only oracle") {
    for (std::uint64_t seed = 300; seed < 360; ++seed) {
        const auto inst = testutil::random_instance(seed, 6, 24);
        const auto alloc =
            rootfind_power_split(inst.channel, inst.assignment, inst.proportions,
                                 inst.total_power);
        const auto expect = oracle::bisect_prop_split(
            testutil::user_gain_lists(inst), inst.proportions, inst.total_power);
        for (std::size_t k = 0; k < expect.size(); ++k)
            CHECK(std::fabs(alloc.per_user_total[k] - expect[k]) <=
                  1e-8 * inst.total_power);
    }
}
