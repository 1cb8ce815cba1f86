#ifndef BECS_MOEA_DOMINANCE_HPP
#define BECS_MOEA_DOMINANCE_HPP

#include <span>
#include <vector>

namespace becs::moea {

enum class Relation { Pareto, SDR, KDR };

struct DominanceConfig {
    Relation relation = Relation::KDR;
    double sigma = 1.0;        // kernel bandwidth
    bool constrained = false;  // feasibility-first domination
};

/// Floor applied to the niche threshold when the population collapses onto a
/// single ray; keeps the penalty branch's division well defined.
inline constexpr double kNicheFloor = 1e-6;

/// Gaussian-kernel distance to the ideal point:
/// sqrt(2 - 2 exp(-||f - ideal||^2 / (2 sigma^2))). Ranges over [0, sqrt(2)).
double kernel_distance(std::span<const double> f, std::span<const double> ideal, double sigma);

/// Acute angle between f1 - ideal and f2 - ideal, in [0, pi/2]. A vector that
/// sits exactly at the ideal point subtends angle 0 to everything.
double pairwise_angle(std::span<const double> f1, std::span<const double> f2,
                      std::span<const double> ideal);

/// Niche size: each member's minimum angle to any other member, then the
/// floor(|P|/2)-th smallest of those minima (1-indexed).
double niche_threshold(const std::vector<std::vector<double>>& objectives,
                       std::span<const double> ideal);

bool pareto_dominates(std::span<const double> f1, std::span<const double> f2);

/// Kernel-distance dominance: straight distance comparison inside the niche
/// angle, penalized by theta/theta_bar outside it.
bool kdr_dominates(std::span<const double> f1, std::span<const double> f2, double theta_bar,
                   double sigma, std::span<const double> ideal);

/// Same skeleton with the Euclidean distance to the ideal point.
bool sdr_dominates(std::span<const double> f1, std::span<const double> f2, double theta_bar,
                   std::span<const double> ideal);

}  // namespace becs::moea

#endif  // BECS_MOEA_DOMINANCE_HPP
