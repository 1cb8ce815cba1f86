#ifndef BECS_CRYPTO_BYTES_HPP
#define BECS_CRYPTO_BYTES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace becs::crypto {

using Bytes = std::vector<std::uint8_t>;

/// Group-operation counters, scoped per protocol phase. Every counted call
/// site takes an OpCounters pointer; passing nullptr leaves the operation
/// outside any phase budget.
struct OpCounters {
    std::uint64_t point_mults = 0;
    std::uint64_t point_adds = 0;
    std::uint64_t hashes = 0;

    OpCounters& operator+=(const OpCounters& o) {
        point_mults += o.point_mults;
        point_adds += o.point_adds;
        hashes += o.hashes;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline void count_mul(OpCounters* c) {
    if (c) ++c->point_mults;
}
inline void count_add(OpCounters* c) {
    if (c) ++c->point_adds;
}
inline void count_hash(OpCounters* c) {
    if (c) ++c->hashes;
}

std::string to_hex(const Bytes& b);

inline Bytes concat(const Bytes& a, const Bytes& b) {
    Bytes out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

/// Appends a big-endian u32 length prefix followed by the raw bytes.
void append_length_prefixed(Bytes& out, const Bytes& field);

/// Reads one length-prefixed field starting at offset; advances offset.
/// Throws std::runtime_error on truncation.
Bytes read_length_prefixed(const Bytes& in, std::size_t& offset);

void append_u32(Bytes& out, std::uint32_t v);
void append_u64(Bytes& out, std::uint64_t v);
std::uint32_t read_u32(const Bytes& in, std::size_t& offset);
std::uint64_t read_u64(const Bytes& in, std::size_t& offset);

}  // namespace becs::crypto

#endif  // BECS_CRYPTO_BYTES_HPP
