#ifndef BECS_PSEUDONYM_PROTOCOL_HPP
#define BECS_PSEUDONYM_PROTOCOL_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "becs/crypto/group.hpp"
#include "becs/crypto/schnorr.hpp"

namespace becs::pseudonym {

using crypto::Bytes;
using crypto::Element;
using crypto::OpCounters;
using crypto::Scalar;

/// Blinded key pair (x, y) = (γ·g, γ·d·g). Proves key possession without
/// revealing the long-term public key.
struct Pseudonym {
    Element x;
    Element y;
    friend auto operator<=>(const Pseudonym&, const Pseudonym&) = default;
};

/// Schnorr transcript (K, M): commitment K = δ·x and response M = δ + ε·d.
struct Transcript {
    Element K;
    Scalar M;
    friend auto operator<=>(const Transcript&, const Transcript&) = default;
};

/// Issuer certificate (O, P): commitment O = φ·g and response P = φ + ζ·b.
struct Certificate {
    Element O;
    Scalar P;
    friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct IdentityRecord {
    Bytes digest;                   // H(H(ID) || dg)
    crypto::Signature certificate;  // Sig_b over H(ID) || dg
};

/// Per-phase operation counters. Phase boundaries: SIPG covers setup,
/// registration key material, and pseudonym generation; CIMS covers
/// certificate issuance and its device-side check; IDMV covers mutual
/// identity verification.
struct PhaseCounters {
    OpCounters sipg;
    OpCounters cims;
    OpCounters idmv;

    OpCounters total() const {
        OpCounters t = sipg;
        t += cims;
        t += idmv;
        return t;
    }
};

/// Challenge derivation hook. The default hashes the concatenated canonical
/// encodings and reduces mod q; tests may inject fixed challenges.
using ChallengeFn =
    std::function<Scalar(const crypto::Group&, const std::vector<const Element*>&, OpCounters*)>;

Scalar default_challenge(const crypto::Group& g, const std::vector<const Element*>& parts,
                         OpCounters* c);

class AlreadyRegisteredError : public std::runtime_error {
public:
    AlreadyRegisteredError() : std::runtime_error("identity digest already registered") {}
};

class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

class Registrar;

/// A computing device: long-term key pair plus whatever pseudonym state the
/// protocol has produced for it so far.
class Device {
public:
    Device(const crypto::Group& g, std::string identity, crypto::RandomSource& rng,
           OpCounters* c);

    const std::string& identity() const { return identity_; }
    const Element& public_key() const { return key_.public_key; }
    const crypto::Group& group() const { return group_; }

    bool registered() const { return record_.has_value(); }
    const IdentityRecord& record() const { return record_.value(); }

    bool has_pseudonym() const { return pseudonym_.has_value(); }
    const Pseudonym& pseudonym() const { return pseudonym_.value(); }
    const Transcript& transcript() const { return transcript_.value(); }
    bool has_certificate() const { return certificate_.has_value(); }
    const Certificate& certificate() const { return certificate_.value(); }

private:
    friend class Registrar;
    friend std::optional<Pseudonym> pseudonym_generate(Device&, Registrar&,
                                                       crypto::RandomSource&, OpCounters*,
                                                       const ChallengeFn&);
    friend bool certificate_obtain(Device&, Registrar&, crypto::RandomSource&, OpCounters*,
                                   const ChallengeFn&);

    const crypto::Group& group_;
    std::string identity_;
    crypto::KeyPair key_;
    std::optional<IdentityRecord> record_;
    std::optional<Pseudonym> pseudonym_;
    std::optional<Transcript> transcript_;
    std::optional<Certificate> certificate_;
};

/// The 6GBS role: registers identities, runs the server side of pseudonym
/// generation, issues certificates, and keeps the pseudonym log that makes
/// pseudonyms traceable to registered public keys.
class Registrar {
public:
    Registrar(const crypto::Group& g, crypto::RandomSource& rng, OpCounters* c);

    const Element& public_key() const { return key_.public_key; }
    const crypto::KeyPair& key_pair() const { return key_; }

    /// Stores H(H(ID) || dg) and returns the signed identity record.
    /// The Schnorr signing itself sits outside the phase budgets.
    IdentityRecord register_device(Device& device, crypto::RandomSource& rng, OpCounters* c);

    bool lookup_digest(const Bytes& digest) const { return registry_.contains(digest); }

    /// Server side of pseudonym generation: checks the claimed key material
    /// against the registry before blinding.
    bool admit_for_pseudonym(const Device& device, OpCounters* c) const;

    /// Maps a pseudonym back to the registered public key (server-side
    /// traceability; not available to ordinary verifiers).
    std::optional<Element> trace(const Pseudonym& p) const;

    std::size_t pseudonym_log_size() const { return log_.size(); }

private:
    friend std::optional<Pseudonym> pseudonym_generate(Device&, Registrar&,
                                                       crypto::RandomSource&, OpCounters*,
                                                       const ChallengeFn&);
    friend bool certificate_obtain(Device&, Registrar&, crypto::RandomSource&, OpCounters*,
                                   const ChallengeFn&);

    const crypto::Group& group_;
    crypto::KeyPair key_;
    std::map<Bytes, Element> registry_;  // digest -> device public key
    std::vector<std::pair<Pseudonym, Element>> log_;
};

/// Three-message pseudonym generation (device <-> registrar). Returns the
/// accepted pseudonym, or nullopt if the registrar rejected the proof.
std::optional<Pseudonym> pseudonym_generate(Device& device, Registrar& server,
                                            crypto::RandomSource& rng, OpCounters* c,
                                            const ChallengeFn& challenge = default_challenge);

/// Certificate issuance plus the device-side check; stores the certificate
/// on the device when the check passes.
bool certificate_obtain(Device& device, Registrar& issuer, crypto::RandomSource& rng,
                        OpCounters* c, const ChallengeFn& challenge = default_challenge);

Certificate certificate_issue(const crypto::Group& g, const crypto::KeyPair& issuer_key,
                              const Pseudonym& p, crypto::RandomSource& rng, OpCounters* c,
                              const ChallengeFn& challenge = default_challenge);

bool certificate_check(const crypto::Group& g, const Pseudonym& p, const Certificate& cert,
                       const Element& issuer_pk, OpCounters* c,
                       const ChallengeFn& challenge = default_challenge);

enum class VerifyResult { Accept, RejectTranscript, RejectCertificate };

/// Mutual-verification building block: validates a peer's pseudonym via its
/// transcript, then the certificate under the issuer public key.
VerifyResult identity_verify(const crypto::Group& g, const Pseudonym& p, const Transcript& t,
                             const Certificate& cert, const Element& issuer_pk, OpCounters* c,
                             const ChallengeFn& challenge = default_challenge);

/// Re-keys a device: verifies its current identity, then reruns pseudonym
/// generation and certificate issuance with fresh randomness. The old
/// pseudonym stays in the registrar log for traceability.
bool pseudonym_update(Device& device, Registrar& server, crypto::RandomSource& rng,
                      PhaseCounters& counters, const ChallengeFn& challenge = default_challenge);

Bytes serialize_pseudonym(const Pseudonym& p);
Pseudonym deserialize_pseudonym(const Bytes& in);
Bytes serialize_transcript(const Transcript& t);
Transcript deserialize_transcript(const Bytes& in);
Bytes serialize_certificate(const Certificate& c);
Certificate deserialize_certificate(const Bytes& in);

}  // namespace becs::pseudonym

#endif  // BECS_PSEUDONYM_PROTOCOL_HPP
