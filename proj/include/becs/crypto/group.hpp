#ifndef BECS_CRYPTO_GROUP_HPP
#define BECS_CRYPTO_GROUP_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include "becs/crypto/bytes.hpp"

namespace becs::crypto {

/// Group element in its fixed-length canonical encoding (compressed point for
/// the elliptic-curve backend). The encoding doubles as the byte string fed
/// into challenge hashes.
struct Element {
    Bytes v;
    friend auto operator<=>(const Element&, const Element&) = default;
};

/// Scalar modulo the group order, big-endian, fixed width.
struct Scalar {
    Bytes v;
    friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

/// Source of randomness for scalar generation. Production uses the OS CSPRNG;
/// tests inject a seeded deterministic source.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::uint8_t* out, std::size_t n) = 0;
};

class SystemRandom final : public RandomSource {
public:
    void fill(std::uint8_t* out, std::size_t n) override;
};

class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    void fill(std::uint8_t* out, std::size_t n) override;

private:
    std::uint64_t state_;
    std::uint64_t block_ = 0;
};

/// Prime-order additive group abstraction behind the pseudonym protocol.
/// Point multiplications and additions are charged to the caller's counters;
/// scalar ring arithmetic is not (only group operations appear in the
/// operation-count budget).
class Group {
public:
    virtual ~Group() = default;

    virtual std::string name() const = 0;
    virtual std::size_t element_size() const = 0;
    virtual std::size_t scalar_size() const = 0;

    virtual Element generator() const = 0;
    /// True for a decodable, on-curve, non-identity element.
    virtual bool element_valid(const Element& e) const = 0;

    virtual Element mul(const Scalar& k, const Element& p, OpCounters* c) const = 0;
    virtual Element add(const Element& a, const Element& b, OpCounters* c) const = 0;

    virtual Scalar scalar_add(const Scalar& a, const Scalar& b) const = 0;
    virtual Scalar scalar_mul(const Scalar& a, const Scalar& b) const = 0;
    /// Interprets arbitrary big-endian bytes as an integer reduced mod q.
    virtual Scalar scalar_from_bytes(const Bytes& wide) const = 0;
    virtual Scalar scalar_from_u64(std::uint64_t v) const = 0;
    virtual bool scalar_is_zero(const Scalar& s) const = 0;

    Element mul_gen(const Scalar& k, OpCounters* c) const { return mul(k, generator(), c); }

    /// Uniform nonzero scalar. Draws extra bytes before reduction so the
    /// modular bias is negligible, and redraws on zero.
    Scalar random_scalar(RandomSource& rng) const;
};

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_GROUP_HPP
