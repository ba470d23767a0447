#include <algorithm>
#include <cmath>
#include <limits>

#include "ofdma/metrics.hpp"
#include "ofdma/solvers.hpp"
#include "ofdma/waterfill.hpp"
#include "solver_util.hpp"

namespace ofdma {
namespace {

constexpr std::uint64_t kEvolveStreamSalt = 0x9e3779b97f4a7c15ull;

// Platform-stable uniforms/normals; the standard distributions are not
// bit-specified across implementations.
double urand(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double nrand(std::mt19937_64& rng) {
    const double u1 = urand(rng);
    const double u2 = urand(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

void project_to_simplex(std::vector<double>& split) {
    double sum = 0.0;
    for (double& s : split) {
        if (s < 0) s = 0;
        sum += s;
    }
    if (sum <= 0) {
        std::fill(split.begin(), split.end(), 1.0 / split.size());
    } else {
        for (double& s : split) s /= sum;
    }
}

struct Problem {
    const ChannelMatrix& channel;
    const AssignmentMatrix& assignment;
    const std::vector<double>& proportions;
    double total_power;
    double penalty_weight;
    std::vector<std::vector<double>> gains;  // per user, owned order

    Problem(const ChannelMatrix& ch, const AssignmentMatrix& as,
            const std::vector<double>& props, double power, double penalty)
        : channel(ch), assignment(as), proportions(props), total_power(power),
          penalty_weight(penalty) {
        detail::check_dimensions(ch, as);
        gains.resize(ch.users);
        for (int k = 0; k < ch.users; ++k)
            gains[k] = detail::gains_only(detail::owned_gains(ch, as, k));
    }

    std::vector<double> user_rates(const std::vector<double>& split) const {
        std::vector<double> rates(gains.size());
        for (std::size_t k = 0; k < gains.size(); ++k)
            rates[k] = waterfill_rate(gains[k], split[k] * total_power);
        return rates;
    }

    double score(const std::vector<double>& split) const {
        const auto rates = user_rates(split);
        double total = 0.0;
        for (double r : rates) total += r;
        const double capacity = total / channel.subcarriers;
        double gap = 0.0;
        if (total > 0) {
            for (std::size_t k = 0; k < rates.size(); ++k)
                gap = std::max(gap, std::fabs(rates[k] / total - proportions[k]));
        }
        return capacity - penalty_weight * gap;
    }
};

int tournament_pick(const std::vector<Individual>& population, int size,
                    std::mt19937_64& rng) {
    int best = -1;
    for (int i = 0; i < size; ++i) {
        const int cand = static_cast<int>(rng() % population.size());
        if (best < 0 || population[cand].fitness > population[best].fitness)
            best = cand;
    }
    return best;
}

std::vector<int> fitness_order(const std::vector<Individual>& population) {
    std::vector<int> order(population.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return population[a].fitness > population[b].fitness;
    });
    return order;
}

}  // namespace

std::vector<Individual> init_population(int num_users, const GaParams& params,
                                        std::uint64_t seed) {
    if (num_users < 1) throw InvalidInputError("num_users must be >= 1");
    params.validate();
    std::mt19937_64 rng(seed);
    std::vector<Individual> population(params.population_size);
    for (int i = 0; i < params.population_size; ++i) {
        auto& split = population[i].split;
        split.resize(num_users);
        if (i == 0) {
            std::fill(split.begin(), split.end(), 1.0 / num_users);
            continue;
        }
        // Normalized exponential draws: uniform on the simplex.
        for (double& s : split) s = -std::log(urand(rng));
        project_to_simplex(split);
    }
    return population;
}

double ga_fitness(const Individual& individual, const ChannelMatrix& channel,
                  const AssignmentMatrix& assignment,
                  const std::vector<double>& proportions, double total_power,
                  double penalty_weight) {
    const Problem prob(channel, assignment, proportions, total_power, penalty_weight);
    return prob.score(individual.split);
}

std::vector<Individual> evolve(const std::vector<Individual>& population,
                               const GaParams& params, std::mt19937_64& rng,
                               const ChannelMatrix& channel,
                               const AssignmentMatrix& assignment,
                               const std::vector<double>& proportions,
                               double total_power) {
    const Problem prob(channel, assignment, proportions, total_power,
                       params.penalty_weight);
    const auto order = fitness_order(population);
    std::vector<Individual> next;
    next.reserve(population.size());
    for (int e = 0; e < params.elite_count; ++e) next.push_back(population[order[e]]);

    while (next.size() < population.size()) {
        const auto& parent_a = population[tournament_pick(population, params.tournament_size, rng)];
        const auto& parent_b = population[tournament_pick(population, params.tournament_size, rng)];
        Individual child;
        const double cross_draw = urand(rng);
        const double alpha = urand(rng);  // drawn unconditionally: stable stream
        child.split = parent_a.split;
        if (cross_draw < params.crossover_probability) {
            for (std::size_t j = 0; j < child.split.size(); ++j)
                child.split[j] = alpha * parent_a.split[j] + (1.0 - alpha) * parent_b.split[j];
        }
        if (params.mutation_sigma > 0)
            for (double& s : child.split) s += params.mutation_sigma * nrand(rng);
        project_to_simplex(child.split);
        child.fitness = prob.score(child.split);
        next.push_back(std::move(child));
    }
    return next;
}

GaResult ga_power_split(const ChannelMatrix& channel,
                        const AssignmentMatrix& assignment,
                        const std::vector<double>& proportions,
                        double total_power, const GaParams& params,
                        std::uint64_t seed) {
    if (!(total_power > 0)) throw InvalidInputError("total_power must be positive");
    const Problem prob(channel, assignment, proportions, total_power,
                       params.penalty_weight);

    auto population = init_population(channel.users, params, seed);
    for (auto& ind : population) ind.fitness = prob.score(ind.split);

    std::mt19937_64 rng(seed ^ kEvolveStreamSalt);
    GaResult result;
    double best_fitness = -std::numeric_limits<double>::infinity();
    Individual best;
    int stall = 0;

    auto record = [&]() {
        const auto order = fitness_order(population);
        const auto& gen_best = population[order[0]];
        if (gen_best.fitness > best_fitness + 1e-9) {
            stall = 0;
        } else {
            ++stall;
        }
        if (gen_best.fitness > best_fitness) {
            best_fitness = gen_best.fitness;
            best = gen_best;
        }
        TracePoint pt;
        pt.best_fitness = best_fitness;
        pt.per_user_rate = prob.user_rates(best.split);
        pt.best_capacity = 0.0;
        for (double r : pt.per_user_rate) pt.best_capacity += r;
        pt.best_capacity /= channel.subcarriers;
        result.trace.push_back(pt);
    };

    record();  // generation of the initial population
    for (int gen = 1; gen < params.max_generations && stall < params.stall_generations;
         ++gen) {
        population = evolve(population, params, rng, channel, assignment,
                            proportions, total_power);
        record();
    }

    std::vector<std::vector<double>> per_user_powers(channel.users);
    for (int k = 0; k < channel.users; ++k)
        per_user_powers[k] =
            waterfill_user(prob.gains[k], best.split[k] * total_power);
    result.allocation = detail::fold_allocation(channel, assignment, per_user_powers);
    return result;
}

PowerAllocation solve(Method method, const ChannelMatrix& channel,
                      const AssignmentMatrix& assignment,
                      const std::vector<double>& proportions, double total_power,
                      const GaParams& params, std::uint64_t seed) {
    switch (method) {
        case Method::linear:
            return linear_power_split(channel, assignment, proportions, total_power);
        case Method::rootfind:
            return rootfind_power_split(channel, assignment, proportions, total_power);
        case Method::active_set:
            return activeset_power_split(channel, assignment, proportions, total_power);
        case Method::ga:
            return ga_power_split(channel, assignment, proportions, total_power,
                                  params, seed)
                .allocation;
    }
    throw InvalidInputError("unknown method");
}

}  // namespace ofdma
