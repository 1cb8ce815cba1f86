#include "becs/bench/dtlz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "becs/moea/reference_points.hpp"

namespace becs::bench {

BenchmarkName benchmark_from_name(const std::string& name) {
    if (name == "dtlz1") return BenchmarkName::DTLZ1;
    if (name == "dtlz2") return BenchmarkName::DTLZ2;
    if (name == "sdtlz1") return BenchmarkName::SDTLZ1;
    if (name == "sdtlz2") return BenchmarkName::SDTLZ2;
    throw std::invalid_argument("unknown benchmark: " + name);
}

const char* benchmark_name(BenchmarkName b) {
    switch (b) {
        case BenchmarkName::DTLZ1:
            return "dtlz1";
        case BenchmarkName::DTLZ2:
            return "dtlz2";
        case BenchmarkName::SDTLZ1:
            return "sdtlz1";
        case BenchmarkName::SDTLZ2:
            return "sdtlz2";
    }
    return "?";
}

namespace {

bool is_dtlz1_family(BenchmarkName n) {
    return n == BenchmarkName::DTLZ1 || n == BenchmarkName::SDTLZ1;
}

bool is_scaled(BenchmarkName n) {
    return n == BenchmarkName::SDTLZ1 || n == BenchmarkName::SDTLZ2;
}

}  // namespace

std::size_t benchmark_decision_length(BenchmarkName name, std::size_t m) {
    const std::size_t k = is_dtlz1_family(name) ? 5 : 10;
    return m + k - 1;
}

std::vector<double> benchmark_scale_factors(BenchmarkName name, std::size_t m) {
    std::vector<double> factors(m, 1.0);
    if (!is_scaled(name)) return factors;
    const double base = m <= 5 ? 10.0 : (m <= 10 ? 3.0 : 2.0);
    double f = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        factors[i] = f;
        f *= base;
    }
    return factors;
}

std::vector<double> evaluate_benchmark(BenchmarkName name, std::size_t m,
                                       std::span<const double> x) {
    if (m < 2) throw std::invalid_argument("need at least two objectives");
    if (x.size() != benchmark_decision_length(name, m)) {
        throw std::invalid_argument("wrong decision length");
    }
    for (double xi : x) {
        if (xi < -1e-12 || xi > 1.0 + 1e-12) {
            throw std::invalid_argument("decision component outside [0,1]");
        }
    }

    const std::size_t k = x.size() - (m - 1);
    std::vector<double> f(m, 0.0);

    if (is_dtlz1_family(name)) {
        double g = 0.0;
        for (std::size_t i = m - 1; i < x.size(); ++i) {
            const double xi = x[i] - 0.5;
            g += xi * xi - std::cos(20.0 * std::numbers::pi * xi);
        }
        g = 100.0 * (static_cast<double>(k) + g);
        for (std::size_t i = 0; i < m; ++i) {
            double v = 0.5 * (1.0 + g);
            for (std::size_t j = 0; j < m - 1 - i; ++j) v *= x[j];
            if (i > 0) v *= 1.0 - x[m - 1 - i];
            f[i] = v;
        }
    } else {
        double g = 0.0;
        for (std::size_t i = m - 1; i < x.size(); ++i) {
            const double xi = x[i] - 0.5;
            g += xi * xi;
        }
        for (std::size_t i = 0; i < m; ++i) {
            double v = 1.0 + g;
            for (std::size_t j = 0; j < m - 1 - i; ++j) {
                v *= std::cos(x[j] * std::numbers::pi / 2.0);
            }
            if (i > 0) v *= std::sin(x[m - 1 - i] * std::numbers::pi / 2.0);
            f[i] = v;
        }
    }

    const auto scale = benchmark_scale_factors(name, m);
    for (std::size_t i = 0; i < m; ++i) f[i] *= scale[i];
    return f;
}

std::vector<std::vector<double>> sample_true_front(BenchmarkName name, std::size_t m,
                                                   std::size_t count) {
    if (count < m) throw std::invalid_argument("front sample smaller than objective count");
    int divisions = 1;
    while (true) {
        std::size_t points = 1;  // C(divisions + m - 1, m - 1)
        for (std::size_t i = 1; i < m; ++i) {
            points = points * (divisions + i) / i;
        }
        if (points >= count) break;
        ++divisions;
    }
    auto lattice = moea::generate_reference_points(m, divisions);
    const auto scale = benchmark_scale_factors(name, m);
    for (auto& w : lattice) {
        if (is_dtlz1_family(name)) {
            for (double& v : w) v *= 0.5;
        } else {
            double norm = 0.0;
            for (double v : w) norm += v * v;
            norm = std::sqrt(norm);
            for (double& v : w) v /= norm;  // lattice points are never all-zero
        }
        for (std::size_t i = 0; i < m; ++i) w[i] *= scale[i];
    }
    return lattice;
}

BenchmarkProblem::BenchmarkProblem(BenchmarkName name, std::size_t m) : name_(name), m_(m) {
    const std::size_t n = benchmark_decision_length(name, m);
    spec_.lower.assign(n, 0.0);
    spec_.upper.assign(n, 1.0);
}

moea::Evaluation BenchmarkProblem::evaluate(const moea::Genotype& g) const {
    moea::Evaluation eval;
    eval.objectives = evaluate_benchmark(name_, m_, g.reals);
    return eval;
}

}  // namespace becs::bench
