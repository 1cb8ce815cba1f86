#include "becs/crypto/group.hpp"

#include <openssl/rand.h>

#include <stdexcept>

namespace becs::crypto {

void SystemRandom::fill(std::uint8_t* out, std::size_t n) {
    if (RAND_bytes(out, static_cast<int>(n)) != 1) {
        throw std::runtime_error("system randomness unavailable");
    }
}

void SeededRandom::fill(std::uint8_t* out, std::size_t n) {
    // splitmix64 stream; deterministic test-mode source, not for production.
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 8 == 0) {
            state_ += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = state_;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            block_ = z ^ (z >> 31);
        }
        out[i] = static_cast<std::uint8_t>(block_ >> ((i % 8) * 8));
    }
}

Scalar Group::random_scalar(RandomSource& rng) const {
    Bytes wide(scalar_size() + 16);
    for (int attempt = 0; attempt < 256; ++attempt) {
        rng.fill(wide.data(), wide.size());
        Scalar s = scalar_from_bytes(wide);
        if (!scalar_is_zero(s)) return s;
    }
    throw std::runtime_error("random scalar generation kept drawing zero");
}

}  // namespace becs::crypto
