#include "becs/moea/sort.hpp"

#include <stdexcept>

namespace becs::moea {

std::vector<std::vector<std::size_t>> non_dominated_sort(std::size_t n,
                                                         const DominatesFn& dominates) {
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool ij = dominates(i, j);
            const bool ji = dominates(j, i);
            if (ij && ji) throw std::logic_error("dominance relation is not asymmetric");
            if (ij) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (ji) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) current.push_back(i);
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

}  // namespace becs::moea
