#ifndef BECS_MOEA_NSGA3_HPP
#define BECS_MOEA_NSGA3_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "becs/moea/dominance.hpp"
#include "becs/moea/problem.hpp"
#include "becs/moea/reference_points.hpp"
#include "becs/moea/sort.hpp"

namespace becs::moea {

struct EvolutionConfig {
    std::size_t pop_size = 92;
    std::size_t generations = 250;
    double crossover_prob = 1.0;
    double mutation_prob = -1.0;  // negative selects the 1/D default
    double distribution_index = 20.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct GenerationStats {
    std::size_t generation = 0;
    std::vector<double> ideal;  // componentwise minimum, canonical space
    std::size_t feasible = 0;
    double best_violation = 0.0;
    std::uint64_t dominance_comparisons = 0;
};

using StatsCallback = std::function<void(const GenerationStats&)>;

/// Reference-point driven evolution with a pluggable dominance relation.
/// Per generation: variation to pop_size offspring, merge to 2*pop_size,
/// non-dominated sort under the configured relation, then reference-point
/// association and niche preservation down to pop_size. Bit-reproducible
/// for a fixed seed.
Population evolve(const Problem& problem, const EvolutionConfig& evo,
                  const DominanceConfig& dom, const StatsCallback& stats = {});

/// Offspring production: shuffled pairing, simulated binary crossover and
/// polynomial mutation on real genes, uniform crossover and bit flips on
/// binary genes, simplex repair afterwards.
std::vector<Genotype> variation(const std::vector<Individual>& parents, const GenotypeSpec& spec,
                                const EvolutionConfig& evo, Rng& rng);

/// Selects `slots` members of the last front by perpendicular-distance
/// association to reference lines and least-crowded niche preservation,
/// given the already-accepted earlier fronts. Exposed for tests.
std::vector<std::size_t> associate_and_niche(
    const std::vector<std::vector<double>>& normalized_objectives,
    const std::vector<std::vector<std::size_t>>& fronts, std::size_t last_front,
    const std::vector<std::vector<double>>& reference_points, std::size_t slots, Rng& rng);

/// Relation comparator over normalized objectives; exposed for tests and the
/// brute-force sorting oracle.
struct RelationContext {
    std::vector<std::vector<double>> normalized;  // per member
    std::vector<double> ideal;                    // zeros after normalization
    double theta_bar = 0.0;
    DominanceConfig config;

    bool dominates(std::size_t i, std::size_t j) const;
};

/// Min-max normalization plus niche threshold over the given members
/// (the dominance relations assume normalized objectives).
RelationContext make_relation_context(const std::vector<std::vector<double>>& objectives,
                                      const DominanceConfig& config);

Relation relation_from_name(const std::string& name);
const char* relation_name(Relation r);

}  // namespace becs::moea

#endif  // BECS_MOEA_NSGA3_HPP
