#ifndef BECS_MOEA_REFERENCE_POINTS_HPP
#define BECS_MOEA_REFERENCE_POINTS_HPP

#include <stdexcept>
#include <vector>

namespace becs::moea {

class TooManyPointsError : public std::runtime_error {
public:
    explicit TooManyPointsError(const std::string& what) : std::runtime_error(what) {}
};

/// Das-Dennis simplex lattice: all C(divisions+m-1, m-1) points with
/// components i/divisions summing to 1. Throws TooManyPointsError beyond cap.
std::vector<std::vector<double>> generate_reference_points(std::size_t m, int divisions,
                                                           std::size_t cap = 200000);

/// Boundary + inside layers for high objective counts: the inner lattice is
/// shrunk halfway toward the simplex centre.
std::vector<std::vector<double>> generate_two_layer_reference_points(std::size_t m,
                                                                     int outer_divisions,
                                                                     int inner_divisions,
                                                                     std::size_t cap = 200000);

/// Division choice used in practice: the largest single-layer lattice fitting
/// the population for m < 8, a (3,2) or smaller two-layer set otherwise.
std::vector<std::vector<double>> default_reference_points(std::size_t m, std::size_t pop_size);

}  // namespace becs::moea

#endif  // BECS_MOEA_REFERENCE_POINTS_HPP
