#include "becs/moea/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace becs::moea {

namespace {

double squared_distance(std::span<const double> f, std::span<const double> ideal) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = f[i] - ideal[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

double kernel_distance(std::span<const double> f, std::span<const double> ideal, double sigma) {
    if (f.size() != ideal.size()) throw std::invalid_argument("dimension mismatch");
    if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
    const double sq = squared_distance(f, ideal);
    return std::sqrt(2.0 - 2.0 * std::exp(-sq / (2.0 * sigma * sigma)));
}

double pairwise_angle(std::span<const double> f1, std::span<const double> f2,
                      std::span<const double> ideal) {
    if (f1.size() != f2.size() || f1.size() != ideal.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    double dot = 0.0, n1 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        const double a = f1[i] - ideal[i];
        const double b = f2[i] - ideal[i];
        dot += a * b;
        n1 += a * a;
        n2 += b * b;
    }
    // A member exactly at the ideal point subtends angle 0 to everything.
    if (n1 <= 0.0 || n2 <= 0.0) return 0.0;
    // Acute angle: |cosine| folds the obtuse case back into [0, pi/2].
    const double cosine = std::clamp(std::abs(dot) / std::sqrt(n1 * n2), 0.0, 1.0);
    return std::acos(cosine);
}

double niche_threshold(const std::vector<std::vector<double>>& objectives,
                       std::span<const double> ideal) {
    const std::size_t n = objectives.size();
    if (n < 2) throw std::invalid_argument("niche threshold needs at least two members");
    std::vector<double> minima(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            best = std::min(best, pairwise_angle(objectives[i], objectives[j], ideal));
        }
        minima[i] = best;
    }
    std::sort(minima.begin(), minima.end());
    return minima[n / 2 - 1];
}

bool pareto_dominates(std::span<const double> f1, std::span<const double> f2) {
    bool strict = false;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f1[i] > f2[i]) return false;
        if (f1[i] < f2[i]) strict = true;
    }
    return strict;
}

namespace {

bool distance_dominates(double d1, double d2, double theta, double theta_bar) {
    if (theta_bar <= 0.0) theta_bar = kNicheFloor;
    if (theta <= theta_bar) return d1 < d2;
    return d1 * (theta / theta_bar) < d2;
}

}  // namespace

bool kdr_dominates(std::span<const double> f1, std::span<const double> f2, double theta_bar,
                   double sigma, std::span<const double> ideal) {
    const double theta = pairwise_angle(f1, f2, ideal);
    return distance_dominates(kernel_distance(f1, ideal, sigma), kernel_distance(f2, ideal, sigma),
                              theta, theta_bar);
}

bool sdr_dominates(std::span<const double> f1, std::span<const double> f2, double theta_bar,
                   std::span<const double> ideal) {
    const double theta = pairwise_angle(f1, f2, ideal);
    return distance_dominates(std::sqrt(squared_distance(f1, ideal)),
                              std::sqrt(squared_distance(f2, ideal)), theta, theta_bar);
}

}  // namespace becs::moea
