#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ofdma/types.hpp"

namespace ofdma {

// ---- linear method --------------------------------------------------------

// Proportional-rate split for the linear case (quotas proportional to the
// rate fractions). The K-1 equal-rate-per-share conditions are linear in the
// per-user totals; the K x K system (conditions plus the budget row) is
// solved directly, clamping any negative total to zero and re-solving.
// Throws MethodInapplicableError when N_k/gamma_k is not constant.
PowerAllocation linear_power_split(const ChannelMatrix& channel,
                                   const AssignmentMatrix& assignment,
                                   const std::vector<double>& proportions,
                                   double total_power);

// ---- root-finding baseline ------------------------------------------------

// For a trial P_1, inverts each other user's proportionality condition
// R_k(P_k)/gamma_k = R_1(P_1)/gamma_1 and returns sum_k P_k - total_power.
double proportionality_residual(double first_user_power,
                                const ChannelMatrix& channel,
                                const AssignmentMatrix& assignment,
                                const std::vector<double>& proportions,
                                double total_power);

// Exact proportional rates for arbitrary quotas: scalar Newton on P_1 with
// central finite differences (step 1e-6 * total_power), safeguarded by
// bisection on [0, total_power], to |residual| <= 1e-9 * total_power.
PowerAllocation rootfind_power_split(const ChannelMatrix& channel,
                                     const AssignmentMatrix& assignment,
                                     const std::vector<double>& proportions,
                                     double total_power);

// ---- active-set method ----------------------------------------------------

// Pooled water-filling over all owned subcarriers; per-user totals are
// emergent. Capacity-optimal relaxation of the other methods.
PowerAllocation activeset_power_split(const ChannelMatrix& channel,
                                      const AssignmentMatrix& assignment,
                                      const std::vector<double>& proportions,
                                      double total_power);

// ---- genetic algorithm ----------------------------------------------------

struct Individual {
    std::vector<double> split;  // simplex of per-user power shares
    double fitness = 0.0;
};

struct TracePoint {
    double best_fitness = 0.0;
    double best_capacity = 0.0;
    std::vector<double> per_user_rate;  // of the best individual
};

using ConvergenceTrace = std::vector<TracePoint>;

struct GaResult {
    PowerAllocation allocation;
    ConvergenceTrace trace;
};

std::vector<Individual> init_population(int num_users, const GaParams& params,
                                        std::uint64_t seed);

// Decodes split into P_k = split_k * total_power, water-fills each user,
// and scores total capacity minus penalty_weight * share gap.
double ga_fitness(const Individual& individual, const ChannelMatrix& channel,
                  const AssignmentMatrix& assignment,
                  const std::vector<double>& proportions, double total_power,
                  double penalty_weight);

// One generation: elites copied, tournament selection, blend crossover,
// Gaussian mutation, clamp and simplex renormalization. `rng` is the evolving
// seed stream shared across generations.
std::vector<Individual> evolve(const std::vector<Individual>& population,
                               const GaParams& params, std::mt19937_64& rng,
                               const ChannelMatrix& channel,
                               const AssignmentMatrix& assignment,
                               const std::vector<double>& proportions,
                               double total_power);

GaResult ga_power_split(const ChannelMatrix& channel,
                        const AssignmentMatrix& assignment,
                        const std::vector<double>& proportions,
                        double total_power, const GaParams& params,
                        std::uint64_t seed);

// ---- dispatch -------------------------------------------------------------

PowerAllocation solve(Method method, const ChannelMatrix& channel,
                      const AssignmentMatrix& assignment,
                      const std::vector<double>& proportions,
                      double total_power, const GaParams& params = {},
                      std::uint64_t seed = 0);

}  // namespace ofdma
