#ifndef BECS_MOEA_SORT_HPP
#define BECS_MOEA_SORT_HPP

#include <functional>
#include <vector>

namespace becs::moea {

/// dominates(i, j) answers whether member i dominates member j. The relation
/// must be irreflexive and asymmetric; fronts follow Deb's peeling scheme
/// (front 0 = members dominated by nobody, front k = members dominated only
/// by earlier fronts).
using DominatesFn = std::function<bool(std::size_t, std::size_t)>;

std::vector<std::vector<std::size_t>> non_dominated_sort(std::size_t n,
                                                         const DominatesFn& dominates);

}  // namespace becs::moea

#endif  // BECS_MOEA_SORT_HPP
