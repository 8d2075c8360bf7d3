#pragma once

#include <optional>

#include "sl/bsgs.hpp"
#include "sl/params.hpp"
#include "sl/rng.hpp"

// Auxiliary primitives instantiated over G1: ElGamal encryption of group
// elements, additive one-time symmetric encryption, static-DH key agreement
// with a point-to-scalar derivation, the one-way map c -> cG, and the
// reversible amount encoding v -> vG inverted by BSGS.

namespace sl::prim {

struct KeyPair {
    Scalar sk;
    G1Point pk;
};

struct Ciphertext {
    G1Point C; // gamma * G
    G1Point D; // M + gamma * pk

    bool operator==(const Ciphertext& o) const { return C == o.C && D == o.D; }
};

struct SharedKey {
    G1Point point;
    Scalar scalar; // hash_to_scalar("SL/H2S/ake", point)
};

KeyPair pke_keygen(const PublicParams& pp, RandomSource& rng);
Ciphertext pke_encrypt(const PublicParams& pp, const G1Point& M, const G1Point& pk,
                       const Scalar& gamma);
// samples fresh nonzero randomness, returned for proof witnesses
std::pair<Ciphertext, Scalar> pke_encrypt_fresh(const PublicParams& pp, const G1Point& M,
                                                const G1Point& pk, RandomSource& rng);
G1Point pke_decrypt(const Ciphertext& ct, const Scalar& sk);

G1Point ske_encrypt(const G1Point& m, const G1Point& xk);
G1Point ske_decrypt(const G1Point& c, const G1Point& xk);

SharedKey ake_shared(const Scalar& sk, const G1Point& pk);

G1Point of_map(const Scalar& c);

G1Point rf_encode(std::uint64_t v);
std::optional<std::uint64_t> rf_decode(const G1Point& vx, std::uint64_t bound);

} // namespace sl::prim
