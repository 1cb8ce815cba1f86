#include "becs/crypto/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace becs::crypto {

Bytes sha256(const Bytes& data, OpCounters* counter) {
    Bytes out(kSha256Size);
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != kSha256Size) {
        throw std::runtime_error("sha256 failed");
    }
    count_hash(counter);
    return out;
}

Bytes sha256(const std::string& data, OpCounters* counter) {
    return sha256(Bytes(data.begin(), data.end()), counter);
}

}  // namespace becs::crypto
