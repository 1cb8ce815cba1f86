#ifndef BECS_CRYPTO_EC_GROUP_HPP
#define BECS_CRYPTO_EC_GROUP_HPP

#include <memory>

#include "becs/crypto/group.hpp"

namespace becs::crypto {

/// NIST P-256 backed by OpenSSL. Elements are 33-byte compressed points
/// (the point at infinity, which never appears in honest transcripts,
/// encodes as the single byte 0x00); scalars are 32-byte big-endian
/// residues mod the curve order.
class P256Group final : public Group {
public:
    P256Group();
    ~P256Group() override;

    P256Group(const P256Group&) = delete;
    P256Group& operator=(const P256Group&) = delete;

    std::string name() const override { return "p256"; }
    std::size_t element_size() const override { return 33; }
    std::size_t scalar_size() const override { return 32; }

    Element generator() const override;
    bool element_valid(const Element& e) const override;

    Element mul(const Scalar& k, const Element& p, OpCounters* c) const override;
    Element add(const Element& a, const Element& b, OpCounters* c) const override;

    Scalar scalar_add(const Scalar& a, const Scalar& b) const override;
    Scalar scalar_mul(const Scalar& a, const Scalar& b) const override;
    Scalar scalar_from_bytes(const Bytes& wide) const override;
    Scalar scalar_from_u64(std::uint64_t v) const override;
    bool scalar_is_zero(const Scalar& s) const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Builds the group for the requested security level. 128 is the only
/// supported production level (P-256); anything else throws.
std::unique_ptr<Group> make_group(int security_bits = 128);

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_EC_GROUP_HPP
