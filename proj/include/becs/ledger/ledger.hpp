#ifndef BECS_LEDGER_LEDGER_HPP
#define BECS_LEDGER_LEDGER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "becs/crypto/group.hpp"
#include "becs/crypto/schnorr.hpp"

namespace becs::ledger {

using crypto::Bytes;

/// One finished computing trade between pseudonymous parties.
struct TradeRecord {
    std::string crr_pseudonym;
    std::string crp_pseudonym;
    double task_cycles = 0.0;
    double task_data_kb = 0.0;
    double task_deadline_s = 0.0;
    double price = 0.0;
    bool deadline_met = false;
    std::uint64_t timestamp = 0;
    friend bool operator==(const TradeRecord&, const TradeRecord&) = default;
};

/// Post-trade resource status advertisement from a provider.
struct ResourceUpdate {
    std::string device_pseudonym;
    std::uint8_t occupancy = 0;  // 0 free, 1 occupied
    double capacity_hz = 0.0;
    friend bool operator==(const ResourceUpdate&, const ResourceUpdate&) = default;
};

using Entry = std::variant<TradeRecord, ResourceUpdate>;

Bytes serialize_entries(const std::vector<Entry>& entries);
std::vector<Entry> parse_entries(const Bytes& payload);

/// Hash-linked block. The canonical payload bytes are the source of truth;
/// parsed entries are a view. The writer signature covers the header, which
/// binds the payload through its hash.
struct Block {
    std::uint64_t height = 0;
    Bytes prev_hash;
    Bytes payload_hash;
    Bytes payload;
    crypto::Signature writer_sig;

    Bytes header_bytes() const;
    /// Hash of the fully serialized block (header, payload, signature).
    Bytes block_hash() const;

    Bytes serialize() const;
    static Block deserialize(const Bytes& in);
};

struct ResourceState {
    std::uint8_t occupancy = 0;
    double capacity_hz = 0.0;
    friend bool operator==(const ResourceState&, const ResourceState&) = default;
};

/// Single-writer permissioned chain. The writer registry is the permissioned
/// set; appends are rejected unless the signing key is registered.
class Chain {
public:
    Chain() = default;

    /// Creates a chain whose genesis block (height 0, zero previous hash,
    /// empty payload) is signed by the given writer.
    static Chain create(const crypto::Group& g, const crypto::KeyPair& writer,
                        crypto::RandomSource& rng);

    void register_writer(const crypto::Element& pk);
    const std::vector<crypto::Element>& writers() const { return writers_; }

    /// Appends a signed block. Throws std::invalid_argument for an empty
    /// payload or an unregistered writer key.
    const Block& append_block(const crypto::Group& g, const std::vector<Entry>& payload,
                              const crypto::KeyPair& writer, crypto::RandomSource& rng);

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }

    /// Walks links, payload hashes, and signatures; returns the first
    /// inconsistent height, or nullopt for a valid chain.
    std::optional<std::uint64_t> validate(const crypto::Group& g) const;

    /// Last-write-wins view of ResourceUpdates. Throws std::runtime_error if
    /// the chain does not validate.
    std::map<std::string, ResourceState> query_resource_state(const crypto::Group& g) const;

    Bytes serialize() const;
    static Chain deserialize(const Bytes& in);

    void save(const std::string& path) const;
    static Chain load(const std::string& path);

    std::string to_json() const;

    /// Test hook: direct block access for tamper experiments.
    std::vector<Block>& mutable_blocks() { return blocks_; }

private:
    std::vector<crypto::Element> writers_;
    std::vector<Block> blocks_;
};

}  // namespace becs::ledger

#endif  // BECS_LEDGER_LEDGER_HPP
