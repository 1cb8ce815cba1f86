#include "becs/ledger/ledger.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "becs/crypto/sha256.hpp"

namespace becs::ledger {

namespace {

constexpr std::uint8_t kTradeTag = 0;
constexpr std::uint8_t kResourceTag = 1;
const char kMagic[8] = {'B', 'E', 'C', 'S', 'L', 'G', 'R', '1'};

void append_f64(Bytes& out, double v) {
    crypto::append_u64(out, std::bit_cast<std::uint64_t>(v));
}

double read_f64(const Bytes& in, std::size_t& offset) {
    return std::bit_cast<double>(crypto::read_u64(in, offset));
}

void append_string(Bytes& out, const std::string& s) {
    crypto::append_length_prefixed(out, Bytes(s.begin(), s.end()));
}

std::string read_string(const Bytes& in, std::size_t& offset) {
    const Bytes raw = crypto::read_length_prefixed(in, offset);
    return std::string(raw.begin(), raw.end());
}

}  // namespace

Bytes serialize_entries(const std::vector<Entry>& entries) {
    Bytes out;
    crypto::append_u32(out, static_cast<std::uint32_t>(entries.size()));
    for (const Entry& entry : entries) {
        if (const auto* trade = std::get_if<TradeRecord>(&entry)) {
            out.push_back(kTradeTag);
            append_string(out, trade->crr_pseudonym);
            append_string(out, trade->crp_pseudonym);
            append_f64(out, trade->task_cycles);
            append_f64(out, trade->task_data_kb);
            append_f64(out, trade->task_deadline_s);
            append_f64(out, trade->price);
            out.push_back(trade->deadline_met ? 1 : 0);
            crypto::append_u64(out, trade->timestamp);
        } else {
            const auto& update = std::get<ResourceUpdate>(entry);
            if (update.occupancy > 1) throw std::invalid_argument("occupancy bit must be 0 or 1");
            out.push_back(kResourceTag);
            append_string(out, update.device_pseudonym);
            out.push_back(update.occupancy);
            append_f64(out, update.capacity_hz);
        }
    }
    return out;
}

std::vector<Entry> parse_entries(const Bytes& payload) {
    std::size_t offset = 0;
    const std::uint32_t count = crypto::read_u32(payload, offset);
    std::vector<Entry> entries;
    entries.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        if (offset >= payload.size()) throw std::runtime_error("truncated payload");
        const std::uint8_t tag = payload[offset++];
        if (tag == kTradeTag) {
            TradeRecord t;
            t.crr_pseudonym = read_string(payload, offset);
            t.crp_pseudonym = read_string(payload, offset);
            t.task_cycles = read_f64(payload, offset);
            t.task_data_kb = read_f64(payload, offset);
            t.task_deadline_s = read_f64(payload, offset);
            t.price = read_f64(payload, offset);
            if (offset >= payload.size()) throw std::runtime_error("truncated payload");
            t.deadline_met = payload[offset++] != 0;
            t.timestamp = crypto::read_u64(payload, offset);
            entries.emplace_back(std::move(t));
        } else if (tag == kResourceTag) {
            ResourceUpdate u;
            u.device_pseudonym = read_string(payload, offset);
            if (offset >= payload.size()) throw std::runtime_error("truncated payload");
            u.occupancy = payload[offset++];
            if (u.occupancy > 1) throw std::runtime_error("corrupt occupancy bit");
            u.capacity_hz = read_f64(payload, offset);
            entries.emplace_back(std::move(u));
        } else {
            throw std::runtime_error("unknown entry tag");
        }
    }
    if (offset != payload.size()) throw std::runtime_error("trailing payload bytes");
    return entries;
}

Bytes Block::header_bytes() const {
    Bytes out;
    crypto::append_u64(out, height);
    out.insert(out.end(), prev_hash.begin(), prev_hash.end());
    out.insert(out.end(), payload_hash.begin(), payload_hash.end());
    return out;
}

Bytes Block::block_hash() const { return crypto::sha256(serialize()); }

Bytes Block::serialize() const {
    Bytes out = header_bytes();
    crypto::append_length_prefixed(out, payload);
    crypto::append_length_prefixed(out, crypto::serialize_signature(writer_sig));
    return out;
}

Block Block::deserialize(const Bytes& in) {
    Block b;
    std::size_t offset = 0;
    b.height = crypto::read_u64(in, offset);
    if (offset + 2 * crypto::kSha256Size > in.size()) throw std::runtime_error("truncated block");
    b.prev_hash.assign(in.begin() + static_cast<std::ptrdiff_t>(offset),
                       in.begin() + static_cast<std::ptrdiff_t>(offset + crypto::kSha256Size));
    offset += crypto::kSha256Size;
    b.payload_hash.assign(in.begin() + static_cast<std::ptrdiff_t>(offset),
                          in.begin() + static_cast<std::ptrdiff_t>(offset + crypto::kSha256Size));
    offset += crypto::kSha256Size;
    b.payload = crypto::read_length_prefixed(in, offset);
    b.writer_sig = crypto::deserialize_signature(crypto::read_length_prefixed(in, offset));
    if (offset != in.size()) throw std::runtime_error("trailing block bytes");
    return b;
}

Chain Chain::create(const crypto::Group& g, const crypto::KeyPair& writer,
                    crypto::RandomSource& rng) {
    Chain chain;
    chain.register_writer(writer.public_key);
    Block genesis;
    genesis.height = 0;
    genesis.prev_hash.assign(crypto::kSha256Size, 0);
    genesis.payload.clear();
    genesis.payload_hash = crypto::sha256(genesis.payload);
    genesis.writer_sig = crypto::schnorr_sign(g, writer, genesis.header_bytes(), rng, nullptr);
    chain.blocks_.push_back(std::move(genesis));
    return chain;
}

void Chain::register_writer(const crypto::Element& pk) {
    for (const auto& existing : writers_) {
        if (existing == pk) return;
    }
    writers_.push_back(pk);
}

const Block& Chain::append_block(const crypto::Group& g, const std::vector<Entry>& payload,
                                 const crypto::KeyPair& writer, crypto::RandomSource& rng) {
    if (payload.empty()) throw std::invalid_argument("block payload must be non-empty");
    bool known = false;
    for (const auto& pk : writers_) {
        if (pk == writer.public_key) {
            known = true;
            break;
        }
    }
    if (!known) throw std::invalid_argument("writer key is not registered");
    if (blocks_.empty()) throw std::invalid_argument("chain has no genesis");

    Block b;
    b.height = blocks_.back().height + 1;
    b.prev_hash = blocks_.back().block_hash();
    b.payload = serialize_entries(payload);
    b.payload_hash = crypto::sha256(b.payload);
    b.writer_sig = crypto::schnorr_sign(g, writer, b.header_bytes(), rng, nullptr);
    blocks_.push_back(std::move(b));
    return blocks_.back();
}

std::optional<std::uint64_t> Chain::validate(const crypto::Group& g) const {
    if (blocks_.empty()) return 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Block& b = blocks_[i];
        if (b.height != i) return i;
        if (i == 0) {
            if (b.prev_hash != Bytes(crypto::kSha256Size, 0)) return i;
        } else if (b.prev_hash != blocks_[i - 1].block_hash()) {
            return i;
        }
        if (b.payload_hash != crypto::sha256(b.payload)) return i;
        if (i > 0) {
            try {
                parse_entries(b.payload);
            } catch (const std::exception&) {
                return i;
            }
        }
        bool signed_by_writer = false;
        for (const auto& pk : writers_) {
            if (crypto::schnorr_verify(g, pk, b.header_bytes(), b.writer_sig, nullptr)) {
                signed_by_writer = true;
                break;
            }
        }
        if (!signed_by_writer) return i;
    }
    return std::nullopt;
}

std::map<std::string, ResourceState> Chain::query_resource_state(const crypto::Group& g) const {
    if (auto bad = validate(g)) {
        throw std::runtime_error("chain invalid at height " + std::to_string(*bad));
    }
    std::map<std::string, ResourceState> view;
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
        for (const Entry& entry : parse_entries(blocks_[i].payload)) {
            if (const auto* update = std::get_if<ResourceUpdate>(&entry)) {
                view[update->device_pseudonym] =
                    ResourceState{update->occupancy, update->capacity_hz};
            }
        }
    }
    return view;
}

Bytes Chain::serialize() const {
    Bytes out(kMagic, kMagic + sizeof(kMagic));
    crypto::append_u32(out, static_cast<std::uint32_t>(writers_.size()));
    for (const auto& pk : writers_) crypto::append_length_prefixed(out, pk.v);
    crypto::append_u32(out, static_cast<std::uint32_t>(blocks_.size()));
    for (const auto& b : blocks_) crypto::append_length_prefixed(out, b.serialize());
    return out;
}

Chain Chain::deserialize(const Bytes& in) {
    if (in.size() < sizeof(kMagic) || std::memcmp(in.data(), kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error("not a ledger file");
    }
    std::size_t offset = sizeof(kMagic);
    Chain chain;
    const std::uint32_t n_writers = crypto::read_u32(in, offset);
    for (std::uint32_t i = 0; i < n_writers; ++i) {
        chain.writers_.push_back(crypto::Element{crypto::read_length_prefixed(in, offset)});
    }
    const std::uint32_t n_blocks = crypto::read_u32(in, offset);
    for (std::uint32_t i = 0; i < n_blocks; ++i) {
        chain.blocks_.push_back(Block::deserialize(crypto::read_length_prefixed(in, offset)));
    }
    if (offset != in.size()) throw std::runtime_error("trailing ledger bytes");
    return chain;
}

void Chain::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const Bytes bytes = serialize();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

Chain Chain::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

std::string Chain::to_json() const {
    nlohmann::json doc;
    doc["writers"] = nlohmann::json::array();
    for (const auto& pk : writers_) doc["writers"].push_back(crypto::to_hex(pk.v));
    doc["blocks"] = nlohmann::json::array();
    for (const auto& b : blocks_) {
        nlohmann::json jb;
        jb["height"] = b.height;
        jb["prev_hash"] = crypto::to_hex(b.prev_hash);
        jb["payload_hash"] = crypto::to_hex(b.payload_hash);
        jb["entries"] = nlohmann::json::array();
        if (b.height > 0 || !b.payload.empty()) {
            for (const Entry& entry : parse_entries(b.payload)) {
                nlohmann::json je;
                if (const auto* t = std::get_if<TradeRecord>(&entry)) {
                    je["type"] = "trade";
                    je["crr"] = t->crr_pseudonym;
                    je["crp"] = t->crp_pseudonym;
                    je["cycles"] = t->task_cycles;
                    je["data_kb"] = t->task_data_kb;
                    je["deadline_s"] = t->task_deadline_s;
                    je["price"] = t->price;
                    je["deadline_met"] = t->deadline_met;
                    je["timestamp"] = t->timestamp;
                } else {
                    const auto& u = std::get<ResourceUpdate>(entry);
                    je["type"] = "resource";
                    je["pseudonym"] = u.device_pseudonym;
                    je["occupancy"] = u.occupancy;
                    je["capacity_hz"] = u.capacity_hz;
                }
                jb["entries"].push_back(std::move(je));
            }
        }
        doc["blocks"].push_back(std::move(jb));
    }
    return doc.dump(2);
}

}  // namespace becs::ledger
