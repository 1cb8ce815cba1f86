#include "becs/crypto/schnorr.hpp"

#include "becs/crypto/sha256.hpp"

namespace becs::crypto {

KeyPair keygen(const Group& g, RandomSource& rng, OpCounters* c) {
    KeyPair kp;
    kp.secret = g.random_scalar(rng);
    kp.public_key = g.mul_gen(kp.secret, c);
    return kp;
}

namespace {

Scalar signature_challenge(const Group& g, const Element& commitment, const Element& public_key,
                           const Bytes& message, OpCounters* c) {
    Bytes input = commitment.v;
    input.insert(input.end(), public_key.v.begin(), public_key.v.end());
    input.insert(input.end(), message.begin(), message.end());
    return g.scalar_from_bytes(sha256(input, c));
}

}  // namespace

Signature schnorr_sign(const Group& g, const KeyPair& key, const Bytes& message,
                       RandomSource& rng, OpCounters* c) {
    const Scalar nonce = g.random_scalar(rng);
    Signature sig;
    sig.commitment = g.mul_gen(nonce, c);
    const Scalar challenge = signature_challenge(g, sig.commitment, key.public_key, message, c);
    sig.response = g.scalar_add(nonce, g.scalar_mul(challenge, key.secret));
    return sig;
}

bool schnorr_verify(const Group& g, const Element& public_key, const Bytes& message,
                    const Signature& sig, OpCounters* c) {
    if (!g.element_valid(sig.commitment) || !g.element_valid(public_key)) return false;
    const Scalar challenge = signature_challenge(g, sig.commitment, public_key, message, c);
    const Element lhs = g.mul_gen(sig.response, c);
    const Element rhs = g.add(sig.commitment, g.mul(challenge, public_key, c), c);
    return lhs == rhs;
}

Bytes serialize_signature(const Signature& sig) {
    Bytes out;
    append_length_prefixed(out, sig.commitment.v);
    append_length_prefixed(out, sig.response.v);
    return out;
}

Signature deserialize_signature(const Bytes& in) {
    std::size_t offset = 0;
    Signature sig;
    sig.commitment.v = read_length_prefixed(in, offset);
    sig.response.v = read_length_prefixed(in, offset);
    return sig;
}

}  // namespace becs::crypto
