#ifndef BECS_CRYPTO_TOY_GROUP_HPP
#define BECS_CRYPTO_TOY_GROUP_HPP

#include "becs/crypto/group.hpp"

namespace becs::crypto {

/// Additive group of integers mod a small prime q with generator 1.
/// Deliberately insecure; exists so protocol test vectors are hand-checkable
/// and exhaustive distribution arguments are feasible. Test use only.
class ToyGroup final : public Group {
public:
    explicit ToyGroup(std::uint16_t q = 101);

    std::string name() const override { return "toy-additive"; }
    std::size_t element_size() const override { return 2; }
    std::size_t scalar_size() const override { return 2; }

    Element generator() const override { return encode_element(1); }
    bool element_valid(const Element& e) const override;

    Element mul(const Scalar& k, const Element& p, OpCounters* c) const override;
    Element add(const Element& a, const Element& b, OpCounters* c) const override;

    Scalar scalar_add(const Scalar& a, const Scalar& b) const override;
    Scalar scalar_mul(const Scalar& a, const Scalar& b) const override;
    Scalar scalar_from_bytes(const Bytes& wide) const override;
    Scalar scalar_from_u64(std::uint64_t v) const override;
    bool scalar_is_zero(const Scalar& s) const override;

    std::uint16_t order() const { return q_; }
    Element encode_element(std::uint16_t v) const;
    std::uint16_t decode(const Bytes& b) const;

private:
    std::uint16_t q_;
};

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_TOY_GROUP_HPP
