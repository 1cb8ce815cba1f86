#ifndef BECS_BENCH_METRICS_HPP
#define BECS_BENCH_METRICS_HPP

#include <vector>

namespace becs::bench {

/// Inverted generational distance: mean over reference points of the minimum
/// Euclidean distance to the front. Lower is better.
double igd(const std::vector<std::vector<double>>& front,
           const std::vector<std::vector<double>>& reference);

/// Pure diversity: greedy accumulation of dissimilarities under the L0.1
/// quasi-norm. The most dissimilar pair seeds the selection; each remaining
/// point then joins in farthest-first order, contributing its minimum
/// dissimilarity to the already-selected set. Higher is better; a single
/// point scores 0 and duplicates add 0.
double pd(const std::vector<std::vector<double>>& front);

/// L0.1 quasi-norm dissimilarity (sum of |dx|^0.1, raised to the 10th power).
double pd_dissimilarity(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace becs::bench

#endif  // BECS_BENCH_METRICS_HPP
