#pragma once

#include <optional>

#include "sl/pairing.hpp"
#include "sl/params.hpp"
#include "sl/rng.hpp"

// Renewable anonymous certificate scheme: signatures on identity points in G1
// that any holder can re-randomize onto a shifted identity without the signer.

namespace sl::rac {

struct Identity {
    G1Point C;
    std::optional<Scalar> opening; // holder-side r with C = r*G1
};

struct SigningKey {
    Scalar x;
};

// Verification key; caches the prepared pairing argument and e(G1, X).
class VerifKey {
public:
    VerifKey() = default;
    explicit VerifKey(const G2Point& X);

    const G2Point& point() const { return X_; }
    const PreparedG2& prepared() const { return prep_; }

    Bytes serialize() const;
    static VerifKey deserialize(std::span<const std::uint8_t> in);

    bool operator==(const VerifKey& o) const { return X_ == o.X_; }

private:
    G2Point X_;
    PreparedG2 prep_;
};

struct Signature {
    G1Point Z;
    G1Point S;
    G2Point S_hat;
    G1Point T_sig;

    Bytes serialize() const;
    static Signature deserialize(std::span<const std::uint8_t> in);
    static constexpr size_t kBytes = 3 * G1Point::kBytes + G2Point::kBytes;
};

Identity cert_gen(const PublicParams& pp, RandomSource& rng);
G1Point rndmz(const G1Point& C, const Scalar& r_prime);
std::pair<SigningKey, VerifKey> skey_gen(const PublicParams& pp, RandomSource& rng);
Signature sign(const PublicParams& pp, const SigningKey& sk, const G1Point& C,
               RandomSource& rng);
Signature adapt(const PublicParams& pp, const Signature& sig, const Scalar& r_prime,
                RandomSource& rng);
bool verify(const PublicParams& pp, const VerifKey& vk, const G1Point& C, const Signature& sig);

// certificate file = (C, Z, S, S_hat, T_sig)
Bytes serialize_certificate(const G1Point& C, const Signature& sig);
std::pair<G1Point, Signature> deserialize_certificate(std::span<const std::uint8_t> in);

#ifdef SL_TEST_HOOKS
namespace testing {
// adapt with caller-chosen randomness s' (structural-invariant tests only)
Signature adapt_with(const PublicParams& pp, const Signature& sig, const Scalar& r_prime,
                     const Scalar& s_prime);
} // namespace testing
#endif

} // namespace sl::rac
