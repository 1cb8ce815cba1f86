#ifndef BECS_BENCH_DTLZ_HPP
#define BECS_BENCH_DTLZ_HPP

#include <span>
#include <string>
#include <vector>

#include "becs/moea/problem.hpp"

namespace becs::bench {

enum class BenchmarkName { DTLZ1, DTLZ2, SDTLZ1, SDTLZ2 };

BenchmarkName benchmark_from_name(const std::string& name);
const char* benchmark_name(BenchmarkName b);

/// Standard decision length m + k - 1 (k = 5 for the DTLZ1 family, 10 for
/// DTLZ2).
std::size_t benchmark_decision_length(BenchmarkName name, std::size_t m);

/// Per-objective multipliers for the scaled variants: factor a^i with a
/// depending on the objective count (10 up to five objectives, 3 up to ten,
/// 2 beyond). Unscaled problems return all ones.
std::vector<double> benchmark_scale_factors(BenchmarkName name, std::size_t m);

/// Objective values at a decision vector with components in [0,1].
std::vector<double> evaluate_benchmark(BenchmarkName name, std::size_t m,
                                       std::span<const double> x);

/// At least `count` mutually non-dominated points on the analytic front
/// (plane for the DTLZ1 family, sphere for DTLZ2), lattice-sampled and
/// scaled for the SDTLZ variants.
std::vector<std::vector<double>> sample_true_front(BenchmarkName name, std::size_t m,
                                                   std::size_t count);

class BenchmarkProblem final : public moea::Problem {
public:
    BenchmarkProblem(BenchmarkName name, std::size_t m);

    std::size_t num_objectives() const override { return m_; }
    const moea::GenotypeSpec& genotype() const override { return spec_; }
    moea::Evaluation evaluate(const moea::Genotype& g) const override;

    BenchmarkName name() const { return name_; }

private:
    BenchmarkName name_;
    std::size_t m_;
    moea::GenotypeSpec spec_;
};

}  // namespace becs::bench

#endif  // BECS_BENCH_DTLZ_HPP
