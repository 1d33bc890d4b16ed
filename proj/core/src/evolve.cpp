#include "pushopt/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace pushopt {

void EvolutionConfig::validate() const
{
    if (population_size == 0) throw std::invalid_argument("population size must be positive");
    if (generations == 0) throw std::invalid_argument("generations must be positive");
    if (tournament_size == 0) throw std::invalid_argument("tournament size must be positive");
    limits.validate();
    for (double r : {crossover_rate, mutation_rate, reproduction_rate}) {
        if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("variation rates must lie in [0, 1]");
    }
    if (std::fabs(crossover_rate + mutation_rate + reproduction_rate - 1.0) > 1e-9)
        throw std::invalid_argument("crossover, mutation and reproduction rates must sum to 1");
    if (instruction_set.empty()) throw std::invalid_argument("instruction set is empty");
    GeneSet{instruction_set};
    make_landscape(landscape, dimension, landscape_seed);
    if (swarm_size == 0 || moves == 0 || repeats == 0 || reevaluation_repeats == 0)
        throw std::invalid_argument("swarm size, moves and repeats must be positive");
}

GeneSet::GeneSet(const std::vector<std::string>& names)
{
    for (const auto& name : names) {
        if (name == "true") genes_.push_back(Atom::literal(true));
        else if (name == "false") genes_.push_back(Atom::literal(false));
        else if (auto op = find_instruction(name)) genes_.push_back(Atom::instruction(*op));
        else throw std::invalid_argument("unknown instruction in instruction set: '" + name + "'");
    }
    if (genes_.empty()) throw std::invalid_argument("instruction set is empty");
}

Atom GeneSet::draw(Rng& rng) const
{
    const Atom& gene = genes_[uniform_index(rng, genes_.size())];
    if (gene.kind == AtomKind::instruction) {
        if (gene.op == Op::float_erc) return Atom::literal(uniform_real(rng, erc_float_min, erc_float_max));
        if (gene.op == Op::integer_erc) return Atom::literal(uniform_int(rng, erc_integer_min, erc_integer_max));
    }
    return gene;
}

Program random_program(Rng& rng, std::size_t size_budget, const GeneSet& genes)
{
    if (size_budget == 0) throw std::invalid_argument("size budget must be at least 1");
    const auto length = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(size_budget)));
    AtomList items;
    items.reserve(length);
    for (std::size_t i = 0; i < length; ++i) items.push_back(genes.draw(rng));
    return Program(std::move(items));
}

const Individual& tournament_select(std::span<const Individual> population, std::size_t k, Rng& rng)
{
    if (population.empty()) throw std::invalid_argument("cannot select from an empty population");
    const Individual* winner = &population[uniform_index(rng, population.size())];
    for (std::size_t i = 1; i < k; ++i) {
        const Individual& candidate = population[uniform_index(rng, population.size())];
        if (candidate.fitness < winner->fitness) winner = &candidate;
    }
    return *winner;
}

namespace {

// Literal constants are nudged by Gaussian noise (10% of the ERC range)
// instead of replaced half of the time.
Atom perturb_or_draw(const Atom& old, Rng& rng, const GeneSet& genes)
{
    if (old.kind == AtomKind::real && coin(rng)) {
        const double v = old.real + gaussian(rng, 0.0, 0.1 * (erc_float_max - erc_float_min));
        if (std::isfinite(v)) return Atom::literal(v);
    }
    if (old.kind == AtomKind::integer && coin(rng)) {
        const double noise = gaussian(rng, 0.0, 0.1 * static_cast<double>(erc_integer_max - erc_integer_min));
        std::int64_t v = 0;
        if (!__builtin_add_overflow(old.integer, static_cast<std::int64_t>(std::llround(noise)), &v))
            return Atom::literal(v);
    }
    return genes.draw(rng);
}

} // namespace

Program mutate(const Program& genome, MutationKind kind, Rng& rng, const GeneSet& genes, std::size_t max_size)
{
    AtomList items = genome.items();
    switch (kind) {
    case MutationKind::replace: {
        if (items.empty()) break;
        const std::size_t pos = uniform_index(rng, items.size());
        Atom replacement = perturb_or_draw(items[pos], rng, genes);
        if (genome.size() - items[pos].size() + replacement.size() <= max_size) items[pos] = std::move(replacement);
        break;
    }
    case MutationKind::insert: {
        if (genome.size() >= max_size) break;
        const std::size_t pos = uniform_index(rng, items.size() + 1);
        items.insert(items.begin() + static_cast<std::ptrdiff_t>(pos), genes.draw(rng));
        break;
    }
    case MutationKind::remove: {
        if (items.size() <= 1) break;
        const std::size_t pos = uniform_index(rng, items.size());
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pos));
        break;
    }
    }
    return Program(std::move(items));
}

Program mutate(const Program& genome, Rng& rng, const GeneSet& genes, std::size_t max_size)
{
    const auto kind = static_cast<MutationKind>(uniform_index(rng, 3));
    return mutate(genome, kind, rng, genes, max_size);
}

Program crossover_at(const Program& a, const Program& b, std::size_t cut_a, std::size_t cut_b, std::size_t max_size)
{
    const auto& ia = a.items();
    const auto& ib = b.items();
    cut_a = std::min(cut_a, ia.size());
    cut_b = std::min(cut_b, ib.size());
    AtomList child;
    std::size_t points = 0;
    auto take = [&](const Atom& atom) {
        if (points + atom.size() > max_size) return false;
        points += atom.size();
        child.push_back(atom);
        return true;
    };
    for (std::size_t i = 0; i < cut_a; ++i) {
        if (!take(ia[i])) return Program(std::move(child));
    }
    for (std::size_t i = cut_b; i < ib.size(); ++i) {
        if (!take(ib[i])) break;
    }
    return Program(std::move(child));
}

Program crossover(const Program& a, const Program& b, Rng& rng, std::size_t max_size)
{
    const std::size_t cut_a = uniform_index(rng, a.items().size() + 1);
    const std::size_t cut_b = uniform_index(rng, b.items().size() + 1);
    return crossover_at(a, b, cut_a, cut_b, max_size);
}

Variation choose_variation(Rng& rng, const EvolutionConfig& config)
{
    const double u = uniform_real(rng, 0.0, 1.0);
    if (u < config.crossover_rate) return Variation::crossover;
    if (u < config.crossover_rate + config.mutation_rate) return Variation::mutation;
    return Variation::reproduction;
}

RunConfig training_run_config(const EvolutionConfig& config, std::uint64_t seed)
{
    return {config.swarm_size, config.moves, config.repeats, config.transforms, seed, config.limits};
}

RunConfig reevaluation_run_config(const EvolutionConfig& config)
{
    return {config.swarm_size, config.moves, config.reevaluation_repeats, false, derive_seed(config.seed, {2}),
            config.limits};
}

EvolutionResult evolve(const EvolutionConfig& config, std::size_t jobs, const GenerationCallback& on_generation)
{
    config.validate();
    const GeneSet genes(config.instruction_set);
    const LandscapePtr landscape = make_landscape(config.landscape, config.dimension, config.landscape_seed);
    const std::size_t max_size = config.limits.max_program_size;
    Rng rng = make_rng(config.seed, {0});

    std::vector<Individual> population(config.population_size);
    for (auto& ind : population) ind.genome = random_program(rng, max_size, genes);

    EvolutionResult result;
    bool have_best = false;
    for (std::size_t gen = 0; gen < config.generations; ++gen) {
        parallel_for(population.size(), jobs, [&](std::size_t i) {
            const RunConfig run = training_run_config(config, derive_seed(config.seed, {1, gen, i}));
            population[i].fitness = evaluate_optimiser(population[i].genome, landscape, run).fitness;
            population[i].evaluated = true;
        });
        result.evaluations += population.size();

        std::size_t elite = 0;
        double total = 0.0;
        for (std::size_t i = 0; i < population.size(); ++i) {
            total += population[i].fitness;
            if (population[i].fitness < population[elite].fitness) elite = i;
        }
        if (!have_best || population[elite].fitness < result.best_fitness) {
            result.best = population[elite].genome;
            result.best_fitness = population[elite].fitness;
            have_best = true;
        }

        GenerationRecord rec{gen, result.best_fitness, population[elite].fitness,
                             total / static_cast<double>(population.size()), print_program(result.best)};
        if (on_generation) on_generation(rec);
        result.history.push_back(std::move(rec));

        if (gen + 1 == config.generations) break;

        std::vector<Individual> next;
        next.reserve(population.size());
        next.push_back({population[elite].genome});
        while (next.size() < population.size()) {
            switch (choose_variation(rng, config)) {
            case Variation::crossover: {
                const Individual& a = tournament_select(population, config.tournament_size, rng);
                const Individual& b = tournament_select(population, config.tournament_size, rng);
                next.push_back({crossover(a.genome, b.genome, rng, max_size)});
                break;
            }
            case Variation::mutation: {
                const Individual& a = tournament_select(population, config.tournament_size, rng);
                next.push_back({mutate(a.genome, rng, genes, max_size)});
                break;
            }
            case Variation::reproduction:
                next.push_back({tournament_select(population, config.tournament_size, rng).genome});
                break;
            }
        }
        population = std::move(next);
    }

    result.reevaluation = evaluate_optimiser(result.best, landscape, reevaluation_run_config(config));
    return result;
}

} // namespace pushopt
