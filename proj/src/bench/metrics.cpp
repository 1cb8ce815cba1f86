#include "becs/bench/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace becs::bench {

double igd(const std::vector<std::vector<double>>& front,
           const std::vector<std::vector<double>>& reference) {
    if (front.empty() || reference.empty()) {
        throw std::invalid_argument("igd needs non-empty point sets");
    }
    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : front) {
            double d = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k) {
                const double diff = f[k] - r[k];
                d += diff * diff;
            }
            best = std::min(best, d);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

double pd_dissimilarity(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::pow(std::abs(a[k] - b[k]), 0.1);
    }
    return std::pow(acc, 10.0);
}

double pd(const std::vector<std::vector<double>>& front) {
    const std::size_t n = front.size();
    if (n < 2) return 0.0;

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i][j] = dist[j][i] = pd_dissimilarity(front[i], front[j]);
        }
    }

    // Seed with the most dissimilar pair (smaller indices on ties).
    std::size_t seed_a = 0, seed_b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] > dist[seed_a][seed_b]) {
                seed_a = i;
                seed_b = j;
            }
        }
    }

    std::vector<bool> selected(n, false);
    selected[seed_a] = selected[seed_b] = true;
    double score = dist[seed_a][seed_b];

    // min distance from each unselected point to the selected set
    std::vector<double> to_selected(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!selected[i]) to_selected[i] = std::min(dist[i][seed_a], dist[i][seed_b]);
    }

    for (std::size_t step = 2; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (selected[i]) continue;
            if (pick == n || to_selected[i] > to_selected[pick]) pick = i;
        }
        score += to_selected[pick];
        selected[pick] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!selected[i]) to_selected[i] = std::min(to_selected[i], dist[i][pick]);
        }
    }
    return score;
}

}  // namespace becs::bench
