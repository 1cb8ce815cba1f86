#include "becs/moea/reference_points.hpp"

namespace becs::moea {

namespace {

void lattice_recursive(std::vector<std::vector<double>>& out, std::vector<double>& point,
                       std::size_t m, int left, int total, std::size_t element, std::size_t cap) {
    if (element == m - 1) {
        point[element] = static_cast<double>(left) / total;
        if (out.size() >= cap) {
            throw TooManyPointsError("reference point count exceeds cap");
        }
        out.push_back(point);
        return;
    }
    for (int i = 0; i <= left; ++i) {
        point[element] = static_cast<double>(i) / total;
        lattice_recursive(out, point, m, left - i, total, element + 1, cap);
    }
}

}  // namespace

std::vector<std::vector<double>> generate_reference_points(std::size_t m, int divisions,
                                                           std::size_t cap) {
    if (m < 2) throw std::invalid_argument("reference points need at least 2 objectives");
    if (divisions < 1) throw std::invalid_argument("divisions must be >= 1");
    std::vector<std::vector<double>> out;
    std::vector<double> point(m, 0.0);
    lattice_recursive(out, point, m, divisions, divisions, 0, cap);
    return out;
}

std::vector<std::vector<double>> generate_two_layer_reference_points(std::size_t m,
                                                                     int outer_divisions,
                                                                     int inner_divisions,
                                                                     std::size_t cap) {
    auto points = generate_reference_points(m, outer_divisions, cap);
    const auto inner = generate_reference_points(m, inner_divisions, cap);
    // Inner layer shrunk halfway toward the simplex centre.
    const double center = 1.0 / static_cast<double>(m);
    for (const auto& p : inner) {
        std::vector<double> shrunk(m);
        for (std::size_t i = 0; i < m; ++i) shrunk[i] = (center + p[i]) / 2.0;
        if (points.size() >= cap) throw TooManyPointsError("reference point count exceeds cap");
        points.push_back(std::move(shrunk));
    }
    return points;
}

std::vector<std::vector<double>> default_reference_points(std::size_t m, std::size_t pop_size) {
    if (m < 8) {
        // Largest single-layer lattice not exceeding the population size,
        // but never fewer points than objectives.
        std::vector<std::vector<double>> best = generate_reference_points(m, 1);
        for (int d = 2;; ++d) {
            std::vector<std::vector<double>> candidate;
            try {
                candidate = generate_reference_points(m, d, pop_size + 1);
            } catch (const TooManyPointsError&) {
                break;
            }
            if (candidate.size() > pop_size) break;
            best = std::move(candidate);
        }
        return best;
    }
    const std::pair<int, int> layerings[] = {{3, 2}, {2, 2}, {2, 1}, {1, 1}};
    std::vector<std::vector<double>> best;
    for (auto [outer, inner] : layerings) {
        try {
            auto candidate = generate_two_layer_reference_points(m, outer, inner);
            if (best.empty() || (candidate.size() <= pop_size && candidate.size() > best.size()) ||
                (best.size() > pop_size && candidate.size() < best.size())) {
                best = std::move(candidate);
            }
        } catch (const TooManyPointsError&) {
            continue;
        }
    }
    return best;
}

}  // namespace becs::moea
