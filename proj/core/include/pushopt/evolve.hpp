#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pushopt/metaeval.hpp"
#include "pushopt/parallel.hpp"
#include "pushopt/program.hpp"

namespace pushopt {

// Ephemeral random constant ranges (also used by the rand instructions).
inline constexpr double erc_float_min = -1.0;
inline constexpr double erc_float_max = 1.0;
inline constexpr std::int64_t erc_integer_min = -10;
inline constexpr std::int64_t erc_integer_max = 10;

struct EvolutionConfig {
    std::size_t population_size = 200;
    std::size_t generations = 50;
    std::size_t tournament_size = 5;
    ExecutionLimits limits; // program size limit and executions per move
    double crossover_rate = 0.5;
    double mutation_rate = 0.4;
    double reproduction_rate = 0.1;
    std::vector<std::string> instruction_set = default_instruction_set_names();

    // fitness measurement
    std::string landscape = "f1";
    std::size_t dimension = 10;
    std::uint64_t landscape_seed = default_instance_seed;
    std::size_t swarm_size = 50;
    std::size_t moves = 20;
    std::size_t repeats = 10;
    bool transforms = true;
    std::size_t reevaluation_repeats = 25;

    std::uint64_t seed = 1;

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

/// The instructions and literals a genome may be built from. `float.erc`
/// and `integer.erc` entries produce fresh literal constants when drawn.
class GeneSet {
public:
    explicit GeneSet(const std::vector<std::string>& names);

    Atom draw(Rng& rng) const;
    std::size_t size() const { return genes_.size(); }
    std::span<const Atom> genes() const { return genes_; }

private:
    std::vector<Atom> genes_;
};

struct Individual {
    Program genome;
    double fitness = 0.0; // lower is better
    bool evaluated = false;
};

/// Flat program with a length drawn uniformly from [1, size_budget].
Program random_program(Rng& rng, std::size_t size_budget, const GeneSet& genes);

/// Best of k uniform draws with replacement; ties go to the first drawn.
const Individual& tournament_select(std::span<const Individual> population, std::size_t k, Rng& rng);

enum class MutationKind : std::uint8_t { replace, insert, remove };

Program mutate(const Program& genome, MutationKind kind, Rng& rng, const GeneSet& genes, std::size_t max_size);
/// Mutation with the kind drawn uniformly.
Program mutate(const Program& genome, Rng& rng, const GeneSet& genes, std::size_t max_size);

/// One-point crossover of the top-level item arrays: a[0, cut_a) + b[cut_b, end),
/// truncated to max_size points.
Program crossover_at(const Program& a, const Program& b, std::size_t cut_a, std::size_t cut_b, std::size_t max_size);
Program crossover(const Program& a, const Program& b, Rng& rng, std::size_t max_size);

enum class Variation : std::uint8_t { crossover, mutation, reproduction };
Variation choose_variation(Rng& rng, const EvolutionConfig& config);

struct GenerationRecord {
    std::size_t generation = 0;
    double best_fitness = 0.0;       // best so far
    double generation_best = 0.0;    // best of this generation
    double mean_fitness = 0.0;
    std::string best_genome;         // best so far

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct EvolutionResult {
    Program best;
    double best_fitness = 0.0;
    std::vector<GenerationRecord> history;
    EvalReport reevaluation;
    std::size_t evaluations = 0; // optimiser evaluations during the run
};

/// Training fitness of one genome (transforms as configured).
RunConfig training_run_config(const EvolutionConfig& config, std::uint64_t seed);
/// 25 untransformed runs (by default) used to reevaluate the best of run.
RunConfig reevaluation_run_config(const EvolutionConfig& config);

using GenerationCallback = std::function<void(const GenerationRecord&)>;

/// Generational Push GP with elitism of one. Results do not depend on
/// `jobs`: each fitness evaluation draws from its own derived stream.
EvolutionResult evolve(const EvolutionConfig& config, std::size_t jobs = 1, const GenerationCallback& on_generation = {});

} // namespace pushopt
