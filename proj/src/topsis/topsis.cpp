#include "becs/topsis/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace becs::topsis {

void DecisionMatrix::validate() const {
    if (rows.size() < 2) throw std::invalid_argument("need at least two alternatives");
    if (benefit.empty()) throw std::invalid_argument("need at least one criterion");
    for (const auto& row : rows) {
        if (row.size() != benefit.size()) {
            throw std::invalid_argument("ragged decision matrix");
        }
        for (double v : row) {
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
        }
    }
}

EntropyWeights entropy_weights(const DecisionMatrix& matrix) {
    matrix.validate();
    const std::size_t n = matrix.alternatives();
    const std::size_t m = matrix.criteria();

    EntropyWeights out;
    out.weights.assign(m, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double lo = matrix.rows[0][j], hi = matrix.rows[0][j];
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, matrix.rows[i][j]);
            hi = std::max(hi, matrix.rows[i][j]);
        }
        if (hi - lo <= 0.0) continue;  // zero-variance column carries no information

        std::vector<double> y(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = matrix.benefit[j] ? (matrix.rows[i][j] - lo) / (hi - lo)
                                     : (hi - matrix.rows[i][j]) / (hi - lo);
            sum += y[i];
        }
        double entropy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = y[i] / sum;
            if (p > 0.0) entropy -= p * std::log(p);
        }
        entropy /= std::log(static_cast<double>(n));
        out.weights[j] = 1.0 - entropy;
        total += out.weights[j];
    }

    if (total <= 0.0) {
        out.degenerate = true;
        out.weights.assign(m, 1.0 / static_cast<double>(m));
        return out;
    }
    for (double& w : out.weights) w /= total;
    return out;
}

std::vector<RankedAlternative> topsis_rank(const DecisionMatrix& matrix,
                                           const std::vector<double>& weights) {
    matrix.validate();
    if (weights.size() != matrix.criteria()) {
        throw std::invalid_argument("one weight per criterion required");
    }
    double wsum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw std::invalid_argument("negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-6) throw std::invalid_argument("weights must sum to 1");

    const std::size_t n = matrix.alternatives();
    const std::size_t m = matrix.criteria();

    // Vector normalization, then weighting.
    std::vector<std::vector<double>> v(n, std::vector<double>(m, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += matrix.rows[i][j] * matrix.rows[i][j];
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) {
            v[i][j] = (norm > 0.0 ? matrix.rows[i][j] / norm : 0.0) * weights[j];
        }
    }

    std::vector<double> positive(m), negative(m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = v[0][j], hi = v[0][j];
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, v[i][j]);
            hi = std::max(hi, v[i][j]);
        }
        positive[j] = matrix.benefit[j] ? hi : lo;
        negative[j] = matrix.benefit[j] ? lo : hi;
    }

    std::vector<RankedAlternative> ranked(n);
    for (std::size_t i = 0; i < n; ++i) {
        double dp = 0.0, dn = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            dp += (v[i][j] - positive[j]) * (v[i][j] - positive[j]);
            dn += (v[i][j] - negative[j]) * (v[i][j] - negative[j]);
        }
        dp = std::sqrt(dp);
        dn = std::sqrt(dn);
        ranked[i].index = i;
        // D+ + D- vanishes only when every alternative is identical; such an
        // alternative coincides with both ideals.
        ranked[i].closeness = dp + dn > 0.0 ? dn / (dp + dn) : 1.0;
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.closeness > b.closeness;
    });
    return ranked;
}

}  // namespace becs::topsis
