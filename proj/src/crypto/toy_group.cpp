#include "becs/crypto/toy_group.hpp"

#include <stdexcept>

namespace becs::crypto {

namespace {

bool is_prime(std::uint16_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

ToyGroup::ToyGroup(std::uint16_t q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("toy group order must be prime");
}

Element ToyGroup::encode_element(std::uint16_t v) const {
    return Element{Bytes{static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v & 0xff)}};
}

std::uint16_t ToyGroup::decode(const Bytes& b) const {
    if (b.size() != 2) throw std::invalid_argument("bad toy encoding");
    const std::uint16_t v = static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    if (v >= q_) throw std::invalid_argument("toy value out of range");
    return v;
}

bool ToyGroup::element_valid(const Element& e) const {
    if (e.v.size() != 2) return false;
    const std::uint16_t v = static_cast<std::uint16_t>((e.v[0] << 8) | e.v[1]);
    return v > 0 && v < q_;
}

Element ToyGroup::mul(const Scalar& k, const Element& p, OpCounters* c) const {
    count_mul(c);
    const std::uint32_t prod = static_cast<std::uint32_t>(decode(k.v)) * decode(p.v);
    return encode_element(static_cast<std::uint16_t>(prod % q_));
}

Element ToyGroup::add(const Element& a, const Element& b, OpCounters* c) const {
    count_add(c);
    return encode_element(static_cast<std::uint16_t>((decode(a.v) + decode(b.v)) % q_));
}

Scalar ToyGroup::scalar_add(const Scalar& a, const Scalar& b) const {
    return Scalar{encode_element(static_cast<std::uint16_t>((decode(a.v) + decode(b.v)) % q_)).v};
}

Scalar ToyGroup::scalar_mul(const Scalar& a, const Scalar& b) const {
    const std::uint32_t prod = static_cast<std::uint32_t>(decode(a.v)) * decode(b.v);
    return Scalar{encode_element(static_cast<std::uint16_t>(prod % q_)).v};
}

Scalar ToyGroup::scalar_from_bytes(const Bytes& wide) const {
    std::uint32_t acc = 0;
    for (auto byte : wide) acc = (acc * 256u + byte) % q_;
    return Scalar{encode_element(static_cast<std::uint16_t>(acc)).v};
}

Scalar ToyGroup::scalar_from_u64(std::uint64_t v) const {
    return Scalar{encode_element(static_cast<std::uint16_t>(v % q_)).v};
}

bool ToyGroup::scalar_is_zero(const Scalar& s) const { return decode(s.v) == 0; }

}  // namespace becs::crypto
