#ifndef BECS_MOEA_PROBLEM_HPP
#define BECS_MOEA_PROBLEM_HPP

#include <vector>

#include "becs/moea/genotype.hpp"

namespace becs::moea {

/// Objectives in canonical minimization form plus the total constraint
/// violation (zero means feasible).
struct Evaluation {
    std::vector<double> objectives;
    double violation = 0.0;
};

class Problem {
public:
    virtual ~Problem() = default;
    virtual std::size_t num_objectives() const = 0;
    virtual const GenotypeSpec& genotype() const = 0;
    virtual Evaluation evaluate(const Genotype& g) const = 0;
};

struct Individual {
    Genotype genotype;
    std::vector<double> objectives;
    double violation = 0.0;

    bool feasible() const { return violation <= 0.0; }
};

struct Population {
    std::vector<Individual> members;
    std::size_t generation = 0;
};

}  // namespace becs::moea

#endif  // BECS_MOEA_PROBLEM_HPP
