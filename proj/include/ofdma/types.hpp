#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofdma {

// ---- error taxonomy -------------------------------------------------------

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InfeasibleQuotaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MethodInapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& key, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", key '" + key +
                             "': " + what),
          line(line),
          key(key) {}
    int line;
    std::string key;
};

// ---- dense row-major matrix -----------------------------------------------

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

// ---- domain types ---------------------------------------------------------

enum class Duplexing { TDD, FDD };

// PHY profile used only to scale normalized capacity into physical bit/s.
// Defaults are the 20 MHz / 2048-subcarrier TDD profile.
struct OfdmaProfile {
    double frame_duration_ms = 5.0;
    int num_subcarriers_phy = 2048;
    double bandwidth_mhz = 20.0;
    double base_frequency_ghz = 5.8;
    Duplexing duplexing = Duplexing::TDD;
    double ttg_us = 106.0;
    double rtg_us = 60.0;

    void validate() const;
};

enum class Method { linear, rootfind, active_set, ga };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct GaParams {
    int population_size = 40;
    int max_generations = 100;
    double crossover_probability = 0.9;
    double mutation_sigma = 0.05;  // in units of total-power fraction
    int elite_count = 2;
    int tournament_size = 3;
    double penalty_weight = 10.0;  // 0 = pure capacity fitness
    int stall_generations = 25;

    void validate() const;
};

struct Scenario {
    int num_users = 0;
    int num_subcarriers = 64;
    double total_power_w = 1.0;
    std::vector<double> proportions;  // normalized to sum 1 on validate()
    double mean_snr_db = 50.0;
    Method method = Method::active_set;
    std::uint64_t seed = 0;
    GaParams ga;
    OfdmaProfile profile;

    // Normalizes proportions (uniform if empty) and checks all invariants.
    void validate();
};

struct QuotaVector {
    std::vector<int> counts;  // one per user, sums to N

    int total() const;
};

struct ChannelMatrix {
    int users = 0;
    int subcarriers = 0;
    Matrix h;  // effective SNR per watt, rate = log2(1 + p*H)
};

// Exclusive ownership: every subcarrier belongs to exactly one user.
struct AssignmentMatrix {
    int users = 0;
    int subcarriers = 0;
    std::vector<int> owner;  // owner[n] in [0, users)
    QuotaVector quotas;

    bool owns(int user, int subcarrier) const { return owner[subcarrier] == user; }
    std::vector<int> subcarriers_of(int user) const;
};

struct PowerAllocation {
    Matrix p;                          // K x N watts, zero off-assignment
    std::vector<double> per_user_total;  // P_k, sums to the budget
};

struct UserWaterfillSummary {
    double excess_offset = 0.0;  // V_k: 0 for a single subcarrier
    double gain_ratio = 1.0;     // W_k: geometric-mean ratio to the weakest gain
};

struct RateReport {
    std::vector<double> per_user_rate;  // bit/s per unit subcarrier bandwidth
    double total_capacity = 0.0;        // bit/s/Hz, averaged over N subcarriers
    double proportionality_error = 0.0; // max_k |R_k/sum R - gamma_k|
    double physical_total_rate_bps = 0.0;
};

}  // namespace ofdma
