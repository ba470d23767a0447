#include "ofdma/types.hpp"

#include <cmath>
#include <numeric>

namespace ofdma {

void OfdmaProfile::validate() const {
    if (frame_duration_ms <= 0 || bandwidth_mhz <= 0 || base_frequency_ghz <= 0 ||
        ttg_us <= 0 || rtg_us <= 0 || num_subcarriers_phy <= 0) {
        throw InvalidInputError("profile durations, frequencies and counts must be positive");
    }
}

const char* method_name(Method m) {
    switch (m) {
        case Method::linear: return "linear";
        case Method::rootfind: return "rootfind";
        case Method::active_set: return "active_set";
        case Method::ga: return "ga";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "linear") return Method::linear;
    if (name == "rootfind") return Method::rootfind;
    if (name == "active_set") return Method::active_set;
    if (name == "ga") return Method::ga;
    throw InvalidInputError("unknown method '" + name + "'");
}

void GaParams::validate() const {
    if (population_size < 2) throw InvalidInputError("ga population_size must be >= 2");
    if (elite_count < 0 || elite_count >= population_size)
        throw InvalidInputError("ga elite_count must be in [0, population_size)");
    if (crossover_probability < 0 || crossover_probability > 1)
        throw InvalidInputError("ga crossover_probability must be in [0,1]");
    if (mutation_sigma < 0) throw InvalidInputError("ga mutation_sigma must be >= 0");
    if (tournament_size < 1) throw InvalidInputError("ga tournament_size must be >= 1");
    if (max_generations < 1) throw InvalidInputError("ga max_generations must be >= 1");
    if (penalty_weight < 0) throw InvalidInputError("ga penalty_weight must be >= 0");
    if (stall_generations < 1) throw InvalidInputError("ga stall_generations must be >= 1");
}

void Scenario::validate() {
    if (num_users < 1) throw InvalidInputError("users must be >= 1");
    if (num_subcarriers < num_users)
        throw InvalidInputError("subcarriers must be >= users");
    if (total_power_w <= 0) throw InvalidInputError("total_power_w must be positive");
    if (!std::isfinite(mean_snr_db)) throw InvalidInputError("mean_snr_db must be finite");

    if (proportions.empty()) {
        proportions.assign(num_users, 1.0 / num_users);
    }
    if (static_cast<int>(proportions.size()) != num_users)
        throw InvalidInputError("proportions length must equal users");
    double sum = 0.0;
    for (double g : proportions) {
        if (!(g > 0)) throw InvalidInputError("each proportion must be positive");
        sum += g;
    }
    for (double& g : proportions) g /= sum;

    ga.validate();
    profile.validate();
}

int QuotaVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<int> AssignmentMatrix::subcarriers_of(int user) const {
    std::vector<int> out;
    for (int n = 0; n < subcarriers; ++n)
        if (owner[n] == user) out.push_back(n);
    return out;
}

}  // namespace ofdma
