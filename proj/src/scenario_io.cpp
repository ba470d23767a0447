#include "ofdma/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ofdma/core.hpp"

namespace ofdma {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(int line, const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size() || !std::isfinite(x))
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, key, "malformed number '" + value + "'");
    }
}

long long parse_integer(int line, const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, key, "malformed integer '" + value + "'");
    }
}

std::vector<double> parse_list(int line, const std::string& key,
                               const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(line, key, trim(item)));
    if (out.empty()) throw ParseError(line, key, "empty list");
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    bool have_users = false;
    std::vector<double> raw_proportions;
    int raw_proportions_line = 0;

    std::stringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, line, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError(lineno, key, "missing value");

        if (key == "users") {
            sc.num_users = static_cast<int>(parse_integer(lineno, key, value));
            have_users = true;
        } else if (key == "subcarriers") {
            sc.num_subcarriers = static_cast<int>(parse_integer(lineno, key, value));
        } else if (key == "total_power_w") {
            sc.total_power_w = parse_number(lineno, key, value);
        } else if (key == "mean_snr_db") {
            sc.mean_snr_db = parse_number(lineno, key, value);
        } else if (key == "proportions") {
            raw_proportions = parse_list(lineno, key, value);
            raw_proportions_line = lineno;
        } else if (key == "method") {
            try {
                sc.method = method_from_name(value);
            } catch (const InvalidInputError& e) {
                throw ParseError(lineno, key, e.what());
            }
        } else if (key == "seed") {
            try {
                sc.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ParseError(lineno, key, "malformed seed '" + value + "'");
            }
        } else if (key == "ga_population") {
            sc.ga.population_size = static_cast<int>(parse_integer(lineno, key, value));
        } else if (key == "ga_generations") {
            sc.ga.max_generations = static_cast<int>(parse_integer(lineno, key, value));
        } else if (key == "ga_crossover") {
            sc.ga.crossover_probability = parse_number(lineno, key, value);
        } else if (key == "ga_mutation_sigma") {
            sc.ga.mutation_sigma = parse_number(lineno, key, value);
        } else if (key == "ga_elites") {
            sc.ga.elite_count = static_cast<int>(parse_integer(lineno, key, value));
        } else if (key == "ga_penalty") {
            sc.ga.penalty_weight = parse_number(lineno, key, value);
        } else {
            throw ParseError(lineno, key, "unknown key");
        }
    }

    if (!have_users) throw ParseError(0, "users", "users missing");
    if (!raw_proportions.empty()) {
        if (static_cast<int>(raw_proportions.size()) != sc.num_users)
            throw ParseError(raw_proportions_line, "proportions",
                             "length does not match users");
        try {
            sc.proportions = normalize_proportions(raw_proportions);
        } catch (const InvalidInputError& e) {
            throw ParseError(raw_proportions_line, "proportions", e.what());
        }
    }
    try {
        sc.validate();
    } catch (const std::exception& e) {
        throw ParseError(0, "scenario", e.what());
    }
    return sc;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

void write_channel_csv(std::ostream& out, const ChannelMatrix& channel) {
    for (int k = 0; k < channel.users; ++k) {
        for (int n = 0; n < channel.subcarriers; ++n) {
            if (n) out << ',';
            // Round-trippable: 17 significant digits.
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", channel.h(k, n));
            out << buf;
        }
        out << '\n';
    }
}

ChannelMatrix read_channel_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(parse_number(lineno, "channel", trim(cell)));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(lineno, "channel", "ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, "channel", "empty matrix");

    ChannelMatrix ch;
    ch.users = static_cast<int>(rows.size());
    ch.subcarriers = static_cast<int>(rows.front().size());
    ch.h = Matrix(ch.users, ch.subcarriers);
    for (int k = 0; k < ch.users; ++k)
        for (int n = 0; n < ch.subcarriers; ++n) {
            if (!(rows[k][n] >= 0) || !std::isfinite(rows[k][n]))
                throw ParseError(k + 1, "channel", "entries must be finite and >= 0");
            ch.h(k, n) = rows[k][n];
        }
    return ch;
}

}  // namespace ofdma
