#ifndef BECS_MOEA_GENOTYPE_HPP
#define BECS_MOEA_GENOTYPE_HPP

#include <cstdint>
#include <vector>

#include "becs/common/rng.hpp"

namespace becs::moea {

/// Contiguous run of real genes constrained to the unit simplex
/// (nonnegative, summing to 1). Variation renormalizes these blocks.
struct SimplexBlock {
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Mixed real + binary decision encoding. Real genes live in [lower, upper];
/// simplex blocks overlay part of the real vector; binary genes are plain
/// bits.
struct GenotypeSpec {
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<SimplexBlock> simplex_blocks;
    std::size_t bit_count = 0;
    double initial_bit_prob = 0.5;

    std::size_t real_count() const { return lower.size(); }
    std::size_t decision_length() const { return lower.size() + bit_count; }
};

struct Genotype {
    std::vector<double> reals;
    std::vector<std::uint8_t> bits;
};

/// Uniform sample: reals uniform in bounds, simplex blocks flat-Dirichlet,
/// bits Bernoulli(initial_bit_prob).
Genotype random_genotype(const GenotypeSpec& spec, Rng& rng);

/// Clips reals to bounds and renormalizes each simplex block to unit sum
/// (degenerate all-zero blocks become uniform).
void repair_genotype(const GenotypeSpec& spec, Genotype& g);

}  // namespace becs::moea

#endif  // BECS_MOEA_GENOTYPE_HPP
