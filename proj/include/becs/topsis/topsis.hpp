#ifndef BECS_TOPSIS_TOPSIS_HPP
#define BECS_TOPSIS_TOPSIS_HPP

#include <vector>

namespace becs::topsis {

/// Alternatives-by-criteria matrix with per-criterion direction flags
/// (true = benefit, higher is better; false = cost).
struct DecisionMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<bool> benefit;

    std::size_t alternatives() const { return rows.size(); }
    std::size_t criteria() const { return benefit.size(); }
    void validate() const;
};

struct EntropyWeights {
    std::vector<double> weights;
    /// Every column was constant; weights fell back to uniform.
    bool degenerate = false;
};

/// Entropy weighting: direction-aware min-max normalization per column,
/// column probability distributions, entropy e_j with the 1/ln(n) norm, and
/// weights proportional to 1 - e_j. Zero-variance columns weigh 0.
EntropyWeights entropy_weights(const DecisionMatrix& matrix);

struct RankedAlternative {
    std::size_t index = 0;
    double closeness = 0.0;
};

/// Classic TOPSIS: vector-normalized columns, weighted, positive/negative
/// ideals per direction flag, Euclidean distances, closeness D-/(D+ + D-),
/// descending sort with stable index tie-break. A degenerate alternative
/// equal to both ideals gets closeness 1.
std::vector<RankedAlternative> topsis_rank(const DecisionMatrix& matrix,
                                           const std::vector<double>& weights);

}  // namespace becs::topsis

#endif  // BECS_TOPSIS_TOPSIS_HPP
