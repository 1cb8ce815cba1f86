#include "becs/pseudonym/protocol.hpp"

#include "becs/crypto/sha256.hpp"

namespace becs::pseudonym {

Scalar default_challenge(const crypto::Group& g, const std::vector<const Element*>& parts,
                         OpCounters* c) {
    Bytes input;
    for (const Element* e : parts) {
        input.insert(input.end(), e->v.begin(), e->v.end());
    }
    return g.scalar_from_bytes(crypto::sha256(input, c));
}

Device::Device(const crypto::Group& g, std::string identity, crypto::RandomSource& rng,
               OpCounters* c)
    : group_(g), identity_(std::move(identity)), key_(crypto::keygen(g, rng, c)) {}

Registrar::Registrar(const crypto::Group& g, crypto::RandomSource& rng, OpCounters* c)
    : group_(g), key_(crypto::keygen(g, rng, c)) {}

namespace {

Bytes identity_digest(const crypto::Group&, const std::string& identity, const Element& pk,
                      OpCounters* c) {
    const Bytes id_hash = crypto::sha256(identity, c);
    return crypto::sha256(crypto::concat(id_hash, pk.v), c);
}

}  // namespace

IdentityRecord Registrar::register_device(Device& device, crypto::RandomSource& rng,
                                          OpCounters* c) {
    if (!group_.element_valid(device.public_key())) {
        throw ProtocolError("device public key is not a valid group element");
    }
    const Bytes digest = identity_digest(group_, device.identity(), device.public_key(), c);
    if (registry_.contains(digest)) throw AlreadyRegisteredError();

    // The identity certificate Sig_b(H(ID) || dg) is issued outside the
    // counted phases; only the digest hashes belong to the SIPG budget.
    const Bytes id_hash = crypto::sha256(device.identity(), nullptr);
    IdentityRecord record{digest,
                          crypto::schnorr_sign(group_, key_,
                                               crypto::concat(id_hash, device.public_key().v),
                                               rng, nullptr)};
    registry_.emplace(digest, device.public_key());
    device.record_ = record;
    return record;
}

bool Registrar::admit_for_pseudonym(const Device& device, OpCounters*) const {
    if (!device.registered()) return false;
    // Re-derive the digest from the claimed material and check it is ours,
    // then verify the identity certificate. Both sit outside the phase
    // budgets, like the registration-time signing they mirror.
    const Bytes digest = identity_digest(group_, device.identity(), device.public_key(), nullptr);
    auto it = registry_.find(digest);
    if (it == registry_.end() || !(it->second == device.public_key())) return false;
    const Bytes id_hash = crypto::sha256(device.identity(), nullptr);
    return crypto::schnorr_verify(group_, key_.public_key,
                                  crypto::concat(id_hash, device.public_key().v),
                                  device.record().certificate, nullptr);
}

std::optional<Element> Registrar::trace(const Pseudonym& p) const {
    for (const auto& [pseudonym, pk] : log_) {
        if (pseudonym == p) return pk;
    }
    return std::nullopt;
}

std::optional<Pseudonym> pseudonym_generate(Device& device, Registrar& server,
                                            crypto::RandomSource& rng, OpCounters* c,
                                            const ChallengeFn& challenge) {
    const crypto::Group& g = device.group_;

    // Message 1: device -> server, (x~ = g, y~ = dg) plus identity material.
    if (!server.admit_for_pseudonym(device, c)) return std::nullopt;

    // Message 2: server blinds the generator with fresh nonzero gamma.
    const Scalar gamma = g.random_scalar(rng);
    const Element x = g.mul_gen(gamma, c);

    // Message 3: device proves possession of d for the blinded base.
    const Scalar delta = g.random_scalar(rng);
    const Element y = g.mul(device.key_.secret, x, c);
    const Element K = g.mul(delta, x, c);
    const Scalar eps = challenge(g, {&x, &y, &K}, c);
    const Scalar M = g.scalar_add(delta, g.scalar_mul(eps, device.key_.secret));

    // Server check: M·x = K + ε'·y.
    const Scalar eps_check = challenge(g, {&x, &y, &K}, c);
    const Element lhs = g.mul(M, x, c);
    const Element rhs = g.add(K, g.mul(eps_check, y, c), c);
    if (!(lhs == rhs)) return std::nullopt;

    Pseudonym p{x, y};
    server.log_.emplace_back(p, device.public_key());
    device.pseudonym_ = p;
    device.transcript_ = Transcript{K, M};
    device.certificate_.reset();
    return p;
}

Certificate certificate_issue(const crypto::Group& g, const crypto::KeyPair& issuer_key,
                              const Pseudonym& p, crypto::RandomSource& rng, OpCounters* c,
                              const ChallengeFn& challenge) {
    const Scalar phi = g.random_scalar(rng);
    Certificate cert;
    cert.O = g.mul_gen(phi, c);
    const Scalar zeta = challenge(g, {&p.x, &p.y, &cert.O}, c);
    cert.P = g.scalar_add(phi, g.scalar_mul(zeta, issuer_key.secret));
    return cert;
}

bool certificate_check(const crypto::Group& g, const Pseudonym& p, const Certificate& cert,
                       const Element& issuer_pk, OpCounters* c, const ChallengeFn& challenge) {
    const Scalar zeta = challenge(g, {&p.x, &p.y, &cert.O}, c);
    const Element lhs = g.mul_gen(cert.P, c);
    const Element rhs = g.add(cert.O, g.mul(zeta, issuer_pk, c), c);
    return lhs == rhs;
}

bool certificate_obtain(Device& device, Registrar& issuer, crypto::RandomSource& rng,
                        OpCounters* c, const ChallengeFn& challenge) {
    if (!device.has_pseudonym()) throw ProtocolError("certificate requested before pseudonym");
    const Certificate cert =
        certificate_issue(device.group_, issuer.key_, device.pseudonym(), rng, c, challenge);
    if (!certificate_check(device.group_, device.pseudonym(), cert, issuer.public_key(), c,
                           challenge)) {
        return false;
    }
    device.certificate_ = cert;
    return true;
}

VerifyResult identity_verify(const crypto::Group& g, const Pseudonym& p, const Transcript& t,
                             const Certificate& cert, const Element& issuer_pk, OpCounters* c,
                             const ChallengeFn& challenge) {
    if (!g.element_valid(p.x) || !g.element_valid(p.y)) return VerifyResult::RejectTranscript;

    const Scalar eps = challenge(g, {&p.x, &p.y, &t.K}, c);
    const Element lhs1 = g.mul(t.M, p.x, c);
    const Element rhs1 = g.add(t.K, g.mul(eps, p.y, c), c);
    if (!(lhs1 == rhs1)) return VerifyResult::RejectTranscript;

    const Scalar zeta = challenge(g, {&p.x, &p.y, &cert.O}, c);
    const Element lhs2 = g.mul_gen(cert.P, c);
    const Element rhs2 = g.add(cert.O, g.mul(zeta, issuer_pk, c), c);
    if (!(lhs2 == rhs2)) return VerifyResult::RejectCertificate;

    return VerifyResult::Accept;
}

bool pseudonym_update(Device& device, Registrar& server, crypto::RandomSource& rng,
                      PhaseCounters& counters, const ChallengeFn& challenge) {
    if (!device.has_pseudonym() || !device.has_certificate()) return false;
    const VerifyResult current =
        identity_verify(device.group(), device.pseudonym(), device.transcript(),
                        device.certificate(), server.public_key(), &counters.idmv, challenge);
    if (current != VerifyResult::Accept) return false;

    if (!pseudonym_generate(device, server, rng, &counters.sipg, challenge)) return false;
    return certificate_obtain(device, server, rng, &counters.cims, challenge);
}

Bytes serialize_pseudonym(const Pseudonym& p) {
    Bytes out;
    crypto::append_length_prefixed(out, p.x.v);
    crypto::append_length_prefixed(out, p.y.v);
    return out;
}

Pseudonym deserialize_pseudonym(const Bytes& in) {
    std::size_t offset = 0;
    Pseudonym p;
    p.x.v = crypto::read_length_prefixed(in, offset);
    p.y.v = crypto::read_length_prefixed(in, offset);
    return p;
}

Bytes serialize_transcript(const Transcript& t) {
    Bytes out;
    crypto::append_length_prefixed(out, t.K.v);
    crypto::append_length_prefixed(out, t.M.v);
    return out;
}

Transcript deserialize_transcript(const Bytes& in) {
    std::size_t offset = 0;
    Transcript t;
    t.K.v = crypto::read_length_prefixed(in, offset);
    t.M.v = crypto::read_length_prefixed(in, offset);
    return t;
}

Bytes serialize_certificate(const Certificate& c) {
    Bytes out;
    crypto::append_length_prefixed(out, c.O.v);
    crypto::append_length_prefixed(out, c.P.v);
    return out;
}

Certificate deserialize_certificate(const Bytes& in) {
    std::size_t offset = 0;
    Certificate c;
    c.O.v = crypto::read_length_prefixed(in, offset);
    c.P.v = crypto::read_length_prefixed(in, offset);
    return c;
}

}  // namespace becs::pseudonym
