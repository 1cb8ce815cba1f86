#include "becs/moea/genotype.hpp"

#include <algorithm>

namespace becs::moea {

Genotype random_genotype(const GenotypeSpec& spec, Rng& rng) {
    Genotype g;
    g.reals.resize(spec.real_count());
    for (std::size_t i = 0; i < g.reals.size(); ++i) {
        g.reals[i] = rng.uniform(spec.lower[i], spec.upper[i]);
    }
    // Flat Dirichlet over each simplex block via normalized exponentials.
    for (const SimplexBlock& block : spec.simplex_blocks) {
        double sum = 0.0;
        for (std::size_t i = 0; i < block.length; ++i) {
            const double draw = rng.exponential(1.0);
            g.reals[block.offset + i] = draw;
            sum += draw;
        }
        for (std::size_t i = 0; i < block.length; ++i) {
            g.reals[block.offset + i] = sum > 0 ? g.reals[block.offset + i] / sum
                                                : 1.0 / static_cast<double>(block.length);
        }
    }
    g.bits.resize(spec.bit_count);
    for (auto& bit : g.bits) bit = rng.bernoulli(spec.initial_bit_prob) ? 1 : 0;
    return g;
}

void repair_genotype(const GenotypeSpec& spec, Genotype& g) {
    for (std::size_t i = 0; i < g.reals.size(); ++i) {
        g.reals[i] = std::clamp(g.reals[i], spec.lower[i], spec.upper[i]);
    }
    for (const SimplexBlock& block : spec.simplex_blocks) {
        double sum = 0.0;
        for (std::size_t i = 0; i < block.length; ++i) {
            double& v = g.reals[block.offset + i];
            v = std::max(0.0, v);
            sum += v;
        }
        for (std::size_t i = 0; i < block.length; ++i) {
            g.reals[block.offset + i] = sum > 1e-300
                                            ? g.reals[block.offset + i] / sum
                                            : 1.0 / static_cast<double>(block.length);
        }
    }
}

}  // namespace becs::moea
