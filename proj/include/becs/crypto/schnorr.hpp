#ifndef BECS_CRYPTO_SCHNORR_HPP
#define BECS_CRYPTO_SCHNORR_HPP

#include "becs/crypto/group.hpp"

namespace becs::crypto {

/// Key-prefixed Schnorr signature (R, s) with challenge
/// c = H(R || pk || message) reduced mod the group order.
struct Signature {
    Element commitment;
    Scalar response;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct KeyPair {
    Scalar secret;
    Element public_key;
};

/// Generates a key pair; the public-key point multiplication is charged to
/// the given counter.
KeyPair keygen(const Group& g, RandomSource& rng, OpCounters* c);

Signature schnorr_sign(const Group& g, const KeyPair& key, const Bytes& message,
                       RandomSource& rng, OpCounters* c);

bool schnorr_verify(const Group& g, const Element& public_key, const Bytes& message,
                    const Signature& sig, OpCounters* c);

Bytes serialize_signature(const Signature& sig);
Signature deserialize_signature(const Bytes& in);

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_SCHNORR_HPP
