#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ofdma/assignment.hpp"
#include "ofdma/bench.hpp"
#include "ofdma/channel.hpp"
#include "ofdma/core.hpp"
#include "ofdma/fixtures.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/scenario_io.hpp"
#include "ofdma/solvers.hpp"
#include "ofdma/waterfill.hpp"

#include <sstream>

namespace py = pybind11;
using namespace ofdma;

namespace {

std::vector<std::vector<double>> matrix_to_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

ChannelMatrix channel_from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw InvalidInputError("channel rows must be nonempty");
    ChannelMatrix ch;
    ch.users = static_cast<int>(rows.size());
    ch.subcarriers = static_cast<int>(rows[0].size());
    ch.h = Matrix(ch.users, ch.subcarriers);
    for (int k = 0; k < ch.users; ++k) {
        if (static_cast<int>(rows[k].size()) != ch.subcarriers)
            throw InvalidInputError("ragged channel rows");
        for (int n = 0; n < ch.subcarriers; ++n) ch.h(k, n) = rows[k][n];
    }
    return ch;
}

py::dict report_to_dict(const RateReport& r) {
    py::dict d;
    d["per_user_rate"] = r.per_user_rate;
    d["total_capacity"] = r.total_capacity;
    d["proportionality_error"] = r.proportionality_error;
    d["physical_total_rate_bps"] = r.physical_total_rate_bps;
    return d;
}

py::dict solve_py(const std::string& method,
                  const std::vector<std::vector<double>>& channel_rows,
                  const std::vector<int>& owner,
                  const std::vector<double>& proportions, double total_power,
                  std::uint64_t seed, const GaParams& ga) {
    const auto channel = channel_from_rows(channel_rows);
    AssignmentMatrix assignment;
    assignment.users = channel.users;
    assignment.subcarriers = channel.subcarriers;
    assignment.owner = owner;
    assignment.quotas.counts.assign(channel.users, 0);
    for (int o : owner) {
        if (o < 0 || o >= channel.users)
            throw InvalidInputError("owner index out of range");
        ++assignment.quotas.counts[o];
    }
    const auto alloc = solve(method_from_name(method), channel, assignment,
                             proportions, total_power, ga, seed);
    OfdmaProfile profile;
    const auto report =
        make_rate_report(channel, assignment, alloc, proportions, profile);
    py::dict d = report_to_dict(report);
    d["powers"] = matrix_to_rows(alloc.p);
    d["per_user_total"] = alloc.per_user_total;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Proportional-rate OFDMA power and subcarrier allocation";

    py::register_exception<InvalidInputError>(m, "InvalidInputError",
                                              PyExc_ValueError);
    py::register_exception<InfeasibleQuotaError>(m, "InfeasibleQuotaError",
                                                 PyExc_ValueError);
    py::register_exception<MethodInapplicableError>(m, "MethodInapplicableError",
                                                    PyExc_RuntimeError);
    py::register_exception<NumericalFailureError>(m, "NumericalFailureError",
                                                  PyExc_RuntimeError);
    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_KeyError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<GaParams>(m, "GaParams")
        .def(py::init<>())
        .def_readwrite("population_size", &GaParams::population_size)
        .def_readwrite("max_generations", &GaParams::max_generations)
        .def_readwrite("crossover_probability", &GaParams::crossover_probability)
        .def_readwrite("mutation_sigma", &GaParams::mutation_sigma)
        .def_readwrite("elite_count", &GaParams::elite_count)
        .def_readwrite("tournament_size", &GaParams::tournament_size)
        .def_readwrite("penalty_weight", &GaParams::penalty_weight)
        .def_readwrite("stall_generations", &GaParams::stall_generations);

    m.def("normalize_proportions", &normalize_proportions, py::arg("weights"));

    m.def(
        "compute_quotas",
        [](const std::vector<double>& proportions, int subcarriers) {
            return compute_quotas(proportions, subcarriers).counts;
        },
        py::arg("proportions"), py::arg("subcarriers"));

    m.def(
        "generate_channel",
        [](int users, int subcarriers, double mean_snr_db, std::uint64_t seed) {
            return matrix_to_rows(
                generate_channel(users, subcarriers, mean_snr_db, seed).h);
        },
        py::arg("users"), py::arg("subcarriers"), py::arg("mean_snr_db"),
        py::arg("seed"));

    m.def(
        "assign_subcarriers",
        [](const std::vector<std::vector<double>>& channel_rows,
           const std::vector<int>& quotas, double total_power) {
            const auto channel = channel_from_rows(channel_rows);
            QuotaVector q;
            q.counts = quotas;
            return assign_subcarriers(channel, q, total_power).owner;
        },
        py::arg("channel"), py::arg("quotas"), py::arg("total_power") = 1.0,
        "Returns the owner index per subcarrier.");

    m.def("solve", &solve_py, py::arg("method"), py::arg("channel"),
          py::arg("owner"), py::arg("proportions"), py::arg("total_power"),
          py::arg("seed") = 0, py::arg("ga") = GaParams{},
          "Run one solver; returns rates, capacity, powers and totals.");

    m.def(
        "waterfill",
        [](const std::vector<double>& gains, double budget) {
            return waterfill_user(gains, budget);
        },
        py::arg("gains"), py::arg("budget"));

    m.def("fixture_names", &fixture_names);

    m.def(
        "fixture",
        [](const std::string& name) {
            const auto f = channel_from_fixture(name);
            py::dict d;
            d["name"] = f.name;
            d["channel"] = matrix_to_rows(f.channel.h);
            d["owner"] = f.assignment.owner;
            d["quotas"] = f.assignment.quotas.counts;
            d["proportions"] = f.scenario.proportions;
            d["total_power"] = f.scenario.total_power_w;
            return d;
        },
        py::arg("name"));

    m.def("fixture_report", &fixture_report, py::arg("name"),
          py::arg("method") = "all", py::arg("emit_timings") = true);

    m.def(
        "parse_scenario",
        [](const std::string& text) {
            const auto sc = parse_scenario(text);
            py::dict d;
            d["users"] = sc.num_users;
            d["subcarriers"] = sc.num_subcarriers;
            d["total_power_w"] = sc.total_power_w;
            d["mean_snr_db"] = sc.mean_snr_db;
            d["proportions"] = sc.proportions;
            d["method"] = method_name(sc.method);
            d["seed"] = sc.seed;
            return d;
        },
        py::arg("text"));

    m.def(
        "ga_trace",
        [](const std::vector<std::vector<double>>& channel_rows,
           const std::vector<int>& owner, const std::vector<double>& proportions,
           double total_power, const GaParams& ga, std::uint64_t seed) {
            const auto channel = channel_from_rows(channel_rows);
            AssignmentMatrix assignment;
            assignment.users = channel.users;
            assignment.subcarriers = channel.subcarriers;
            assignment.owner = owner;
            assignment.quotas.counts.assign(channel.users, 0);
            for (int o : owner) ++assignment.quotas.counts[o];
            const auto result = ga_power_split(channel, assignment, proportions,
                                               total_power, ga, seed);
            py::list trace;
            for (const auto& pt : result.trace) {
                py::dict g;
                g["best_fitness"] = pt.best_fitness;
                g["best_capacity"] = pt.best_capacity;
                g["per_user_rate"] = pt.per_user_rate;
                trace.append(g);
            }
            return trace;
        },
        py::arg("channel"), py::arg("owner"), py::arg("proportions"),
        py::arg("total_power"), py::arg("ga") = GaParams{}, py::arg("seed") = 0);
}
