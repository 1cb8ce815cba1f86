#include "becs/crypto/ec_group.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <stdexcept>

namespace becs::crypto {

namespace {

struct BnCtx {
    BN_CTX* ctx;
    BnCtx() : ctx(BN_CTX_new()) {
        if (!ctx) throw std::runtime_error("BN_CTX_new failed");
    }
    ~BnCtx() { BN_CTX_free(ctx); }
};

struct Bn {
    BIGNUM* n;
    Bn() : n(BN_new()) {
        if (!n) throw std::runtime_error("BN_new failed");
    }
    explicit Bn(const Bytes& be) : Bn() {
        if (!BN_bin2bn(be.data(), static_cast<int>(be.size()), n)) {
            throw std::runtime_error("BN_bin2bn failed");
        }
    }
    ~Bn() { BN_free(n); }
    Bn(const Bn&) = delete;
    Bn& operator=(const Bn&) = delete;
};

struct Point {
    EC_POINT* p;
    explicit Point(const EC_GROUP* g) : p(EC_POINT_new(g)) {
        if (!p) throw std::runtime_error("EC_POINT_new failed");
    }
    ~Point() { EC_POINT_free(p); }
    Point(const Point&) = delete;
    Point& operator=(const Point&) = delete;
};

}  // namespace

struct P256Group::Impl {
    EC_GROUP* group = nullptr;
    BIGNUM* order = nullptr;
    Bytes generator_enc;

    ~Impl() {
        BN_free(order);
        EC_GROUP_free(group);
    }
};

P256Group::P256Group() : impl_(std::make_unique<Impl>()) {
    impl_->group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    if (!impl_->group) throw std::runtime_error("P-256 unavailable");
    impl_->order = BN_new();
    BnCtx ctx;
    if (!impl_->order || EC_GROUP_get_order(impl_->group, impl_->order, ctx.ctx) != 1) {
        throw std::runtime_error("cannot read P-256 order");
    }
    const EC_POINT* gen = EC_GROUP_get0_generator(impl_->group);
    impl_->generator_enc.resize(element_size());
    if (EC_POINT_point2oct(impl_->group, gen, POINT_CONVERSION_COMPRESSED,
                           impl_->generator_enc.data(), impl_->generator_enc.size(),
                           ctx.ctx) != element_size()) {
        throw std::runtime_error("cannot encode P-256 generator");
    }
}

P256Group::~P256Group() = default;

Element P256Group::generator() const { return Element{impl_->generator_enc}; }

namespace {

Bytes encode_point(const EC_GROUP* g, const EC_POINT* p, BN_CTX* ctx, std::size_t width) {
    if (EC_POINT_is_at_infinity(g, p)) {
        return Bytes{0x00};
    }
    Bytes out(width);
    if (EC_POINT_point2oct(g, p, POINT_CONVERSION_COMPRESSED, out.data(), out.size(), ctx) !=
        width) {
        throw std::runtime_error("point encoding failed");
    }
    return out;
}

void decode_point(const EC_GROUP* g, const Bytes& enc, EC_POINT* out, BN_CTX* ctx) {
    if (EC_POINT_oct2point(g, out, enc.data(), enc.size(), ctx) != 1) {
        throw std::invalid_argument("invalid group element encoding");
    }
}

Bytes scalar_to_fixed(const BIGNUM* n, std::size_t width) {
    Bytes out(width);
    if (BN_bn2binpad(n, out.data(), static_cast<int>(width)) < 0) {
        throw std::runtime_error("scalar encoding failed");
    }
    return out;
}

}  // namespace

bool P256Group::element_valid(const Element& e) const {
    if (e.v.size() != element_size()) return false;
    BnCtx ctx;
    Point p(impl_->group);
    if (EC_POINT_oct2point(impl_->group, p.p, e.v.data(), e.v.size(), ctx.ctx) != 1) {
        return false;
    }
    return EC_POINT_is_at_infinity(impl_->group, p.p) == 0 &&
           EC_POINT_is_on_curve(impl_->group, p.p, ctx.ctx) == 1;
}

Element P256Group::mul(const Scalar& k, const Element& p, OpCounters* c) const {
    count_mul(c);
    BnCtx ctx;
    Bn scalar(k.v);
    Point base(impl_->group);
    decode_point(impl_->group, p.v, base.p, ctx.ctx);
    Point result(impl_->group);
    if (EC_POINT_mul(impl_->group, result.p, nullptr, base.p, scalar.n, ctx.ctx) != 1) {
        throw std::runtime_error("point multiplication failed");
    }
    return Element{encode_point(impl_->group, result.p, ctx.ctx, element_size())};
}

Element P256Group::add(const Element& a, const Element& b, OpCounters* c) const {
    count_add(c);
    BnCtx ctx;
    Point pa(impl_->group), pb(impl_->group), result(impl_->group);
    decode_point(impl_->group, a.v, pa.p, ctx.ctx);
    decode_point(impl_->group, b.v, pb.p, ctx.ctx);
    if (EC_POINT_add(impl_->group, result.p, pa.p, pb.p, ctx.ctx) != 1) {
        throw std::runtime_error("point addition failed");
    }
    return Element{encode_point(impl_->group, result.p, ctx.ctx, element_size())};
}

Scalar P256Group::scalar_add(const Scalar& a, const Scalar& b) const {
    BnCtx ctx;
    Bn x(a.v), y(b.v);
    Bn r;
    if (BN_mod_add(r.n, x.n, y.n, impl_->order, ctx.ctx) != 1) {
        throw std::runtime_error("scalar add failed");
    }
    return Scalar{scalar_to_fixed(r.n, scalar_size())};
}

Scalar P256Group::scalar_mul(const Scalar& a, const Scalar& b) const {
    BnCtx ctx;
    Bn x(a.v), y(b.v);
    Bn r;
    if (BN_mod_mul(r.n, x.n, y.n, impl_->order, ctx.ctx) != 1) {
        throw std::runtime_error("scalar mul failed");
    }
    return Scalar{scalar_to_fixed(r.n, scalar_size())};
}

Scalar P256Group::scalar_from_bytes(const Bytes& wide) const {
    BnCtx ctx;
    Bn x(wide);
    Bn r;
    if (BN_nnmod(r.n, x.n, impl_->order, ctx.ctx) != 1) {
        throw std::runtime_error("scalar reduction failed");
    }
    return Scalar{scalar_to_fixed(r.n, scalar_size())};
}

Scalar P256Group::scalar_from_u64(std::uint64_t v) const {
    Bytes be(8);
    for (int i = 7; i >= 0; --i) {
        be[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return scalar_from_bytes(be);
}

bool P256Group::scalar_is_zero(const Scalar& s) const {
    for (auto byte : s.v) {
        if (byte != 0) return false;
    }
    return true;
}

std::unique_ptr<Group> make_group(int security_bits) {
    if (security_bits != 128) {
        throw std::invalid_argument("unsupported security level; only 128-bit (P-256) is available");
    }
    return std::make_unique<P256Group>();
}

}  // namespace becs::crypto
