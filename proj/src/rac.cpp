#include "sl/rac.hpp"

namespace sl::rac {

VerifKey::VerifKey(const G2Point& X) : X_(X), prep_(X) {}

Bytes VerifKey::serialize() const {
    auto b = X_.to_bytes();
    return Bytes(b.begin(), b.end());
}

VerifKey VerifKey::deserialize(std::span<const std::uint8_t> in) {
    return VerifKey(G2Point::from_bytes(in));
}

Bytes Signature::serialize() const {
    Writer w;
    w.bytes(Z.to_bytes());
    w.bytes(S.to_bytes());
    w.bytes(S_hat.to_bytes());
    w.bytes(T_sig.to_bytes());
    return std::move(w.buf());
}

Signature Signature::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    Signature s;
    s.Z = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    s.S = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    s.S_hat = G2Point::from_bytes(r.bytes(G2Point::kBytes));
    s.T_sig = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    r.expect_done();
    return s;
}

Identity cert_gen(const PublicParams& pp, RandomSource& rng) {
    (void)pp;
    Scalar r = Scalar::random_nonzero(rng);
    return Identity{G1Point::mul_generator(r), r};
}

G1Point rndmz(const G1Point& C, const Scalar& r_prime) {
    return C + G1Point::mul_generator(r_prime);
}

std::pair<SigningKey, VerifKey> skey_gen(const PublicParams& pp, RandomSource& rng) {
    Scalar x = Scalar::random_nonzero(rng);
    return {SigningKey{x}, VerifKey(x * pp.g2)};
}

Signature sign(const PublicParams& pp, const SigningKey& sk, const G1Point& C,
               RandomSource& rng) {
    Scalar s = Scalar::random_nonzero(rng);
    Scalar s_inv = s.inverse();
    Signature sig;
    sig.Z = s_inv * (pp.g1 + sk.x * C);
    sig.S = s * pp.g1;
    sig.S_hat = s * pp.g2;
    sig.T_sig = (s_inv * sk.x) * pp.g1;
    return sig;
}

namespace {

Signature adapt_impl(const Signature& sig, const Scalar& r_prime, const Scalar& s_prime) {
    Scalar inv = s_prime.inverse();
    Signature out;
    out.Z = inv * (sig.Z + r_prime * sig.T_sig);
    out.S = s_prime * sig.S;
    out.S_hat = s_prime * sig.S_hat;
    out.T_sig = inv * sig.T_sig;
    return out;
}

} // namespace

Signature adapt(const PublicParams& pp, const Signature& sig, const Scalar& r_prime,
                RandomSource& rng) {
    (void)pp;
    return adapt_impl(sig, r_prime, Scalar::random_nonzero(rng));
}

bool verify(const PublicParams& pp, const VerifKey& vk, const G1Point& C, const Signature& sig) {
    PreparedG2 s_hat(sig.S_hat);
    // e(Z, S_hat) = e(G1, G2) e(C, X)
    if (!pairing_check_prepared({{sig.Z, &s_hat},
                                 {-C, &vk.prepared()},
                                 {-pp.g1, &prepared_g2_gen()}}))
        return false;
    // e(G1, S_hat) = e(S, G2)
    if (!pairing_check_prepared({{pp.g1, &s_hat}, {-sig.S, &prepared_g2_gen()}}))
        return false;
    // e(T_sig, S_hat) = e(G1, X)
    if (!pairing_check_prepared({{sig.T_sig, &s_hat}, {-pp.g1, &vk.prepared()}}))
        return false;
    return true;
}

Bytes serialize_certificate(const G1Point& C, const Signature& sig) {
    Writer w;
    w.bytes(C.to_bytes());
    w.bytes(sig.serialize());
    return std::move(w.buf());
}

std::pair<G1Point, Signature> deserialize_certificate(std::span<const std::uint8_t> in) {
    Reader r(in);
    G1Point C = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    Signature sig = Signature::deserialize(r.bytes(Signature::kBytes));
    r.expect_done();
    return {C, sig};
}

#ifdef SL_TEST_HOOKS
namespace testing {
Signature adapt_with(const PublicParams& pp, const Signature& sig, const Scalar& r_prime,
                     const Scalar& s_prime) {
    (void)pp;
    return adapt_impl(sig, r_prime, s_prime);
}
} // namespace testing
#endif

} // namespace sl::rac
