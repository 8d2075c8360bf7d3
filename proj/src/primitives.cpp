#include "sl/primitives.hpp"

#include "sl/hashing.hpp"

namespace sl::prim {

KeyPair pke_keygen(const PublicParams& pp, RandomSource& rng) {
    (void)pp;
    Scalar sk = Scalar::random_nonzero(rng);
    return {sk, G1Point::mul_generator(sk)};
}

Ciphertext pke_encrypt(const PublicParams& pp, const G1Point& M, const G1Point& pk,
                       const Scalar& gamma) {
    (void)pp;
    return {G1Point::mul_generator(gamma), M + gamma * pk};
}

std::pair<Ciphertext, Scalar> pke_encrypt_fresh(const PublicParams& pp, const G1Point& M,
                                                const G1Point& pk, RandomSource& rng) {
    Scalar gamma = Scalar::random_nonzero(rng);
    return {pke_encrypt(pp, M, pk, gamma), gamma};
}

G1Point pke_decrypt(const Ciphertext& ct, const Scalar& sk) { return ct.D - sk * ct.C; }

G1Point ske_encrypt(const G1Point& m, const G1Point& xk) { return m + xk; }

G1Point ske_decrypt(const G1Point& c, const G1Point& xk) { return c - xk; }

SharedKey ake_shared(const Scalar& sk, const G1Point& pk) {
    G1Point point = sk * pk;
    auto enc = point.to_bytes();
    Scalar derived = hash_to_scalar("SL/H2S/ake", {Bytes(enc.begin(), enc.end())});
    return {point, derived};
}

G1Point of_map(const Scalar& c) { return G1Point::mul_generator(c); }

G1Point rf_encode(std::uint64_t v) { return G1Point::mul_generator(Scalar::from_u64(v)); }

std::optional<std::uint64_t> rf_decode(const G1Point& vx, std::uint64_t bound) {
    return bsgs_dlog(G1Point::generator(), vx, bound);
}

} // namespace sl::prim
