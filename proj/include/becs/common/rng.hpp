#ifndef BECS_COMMON_RNG_HPP
#define BECS_COMMON_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace becs {

/// Seeded pseudo-random source used by all non-cryptographic components.
///
/// All derived draws (uniform doubles, indices, shuffles) are built directly
/// on the mt19937_64 output stream, so a run is reproducible from its seed
/// alone, independent of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 bits of randomness.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double mean) { return -mean * std::log(1.0 - uniform()); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace becs

#endif  // BECS_COMMON_RNG_HPP
