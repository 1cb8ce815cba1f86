#ifndef BECS_CRYPTO_SHA256_HPP
#define BECS_CRYPTO_SHA256_HPP

#include "becs/crypto/bytes.hpp"

namespace becs::crypto {

inline constexpr std::size_t kSha256Size = 32;

/// One-shot SHA-256. The counter, when given, is charged one hash invocation
/// regardless of input length.
Bytes sha256(const Bytes& data, OpCounters* counter = nullptr);

Bytes sha256(const std::string& data, OpCounters* counter = nullptr);

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_SHA256_HPP
