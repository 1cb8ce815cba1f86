#include "becs/crypto/bytes.hpp"

#include <stdexcept>

namespace becs::crypto {

std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(b.size() * 2);
    for (auto byte : b) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0x0f]);
    }
    return out;
}

void append_u32(Bytes& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

void append_u64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

std::uint32_t read_u32(const Bytes& in, std::size_t& offset) {
    if (offset + 4 > in.size()) throw std::runtime_error("truncated u32");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in[offset++];
    return v;
}

std::uint64_t read_u64(const Bytes& in, std::size_t& offset) {
    if (offset + 8 > in.size()) throw std::runtime_error("truncated u64");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | in[offset++];
    return v;
}

void append_length_prefixed(Bytes& out, const Bytes& field) {
    append_u32(out, static_cast<std::uint32_t>(field.size()));
    out.insert(out.end(), field.begin(), field.end());
}

Bytes read_length_prefixed(const Bytes& in, std::size_t& offset) {
    const std::uint32_t len = read_u32(in, offset);
    if (offset + len > in.size()) throw std::runtime_error("truncated field");
    Bytes field(in.begin() + static_cast<std::ptrdiff_t>(offset),
                in.begin() + static_cast<std::ptrdiff_t>(offset + len));
    offset += len;
    return field;
}

}  // namespace becs::crypto
