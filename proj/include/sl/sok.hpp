#pragma once

#include <array>

#include "sl/hashing.hpp"
#include "sl/params.hpp"
#include "sl/rng.hpp"

// Fiat-Shamir Sigma protocols: the generic discrete-log and bounded-dl proofs,
// and the multi-clause signature of knowledge for 2-2 transactions.

namespace sl::sok {

// knowledge of w with y = w * base, bound to a message
struct DlProof {
    G1Point T;
    Scalar e;
    Scalar z;

    Bytes serialize() const;
    static DlProof deserialize(std::span<const std::uint8_t> in);
    static constexpr size_t kBytes = G1Point::kBytes + 2 * Scalar::kBytes;
};

DlProof prove_dl(const PublicParams& pp, const G1Point& base, const G1Point& y, const Scalar& w,
                 std::span<const std::uint8_t> m, RandomSource& rng);
bool verify_dl(const PublicParams& pp, const G1Point& base, const G1Point& y, const DlProof& proof,
               std::span<const std::uint8_t> m);

// knowledge of w with y1 = w * base and y2 = (a w + b) * base for public a, b
struct BdlProof {
    G1Point T1, T2;
    Scalar e;
    Scalar z;

    Bytes serialize() const;
    static BdlProof deserialize(std::span<const std::uint8_t> in);
};

BdlProof prove_bdl(const PublicParams& pp, const G1Point& base, const G1Point& y1,
                   const G1Point& y2, const Scalar& a, const Scalar& b, const Scalar& w,
                   std::span<const std::uint8_t> m, RandomSource& rng);
bool verify_bdl(const PublicParams& pp, const G1Point& base, const G1Point& y1, const G1Point& y2,
                const Scalar& a, const Scalar& b, const BdlProof& proof,
                std::span<const std::uint8_t> m);

// 2-2 transaction statement: inputs (cm, Q), outputs (cm_hat, Q_hat), audit
// ciphertexts (C_hat, D_hat), ephemeral keys R_hat, and the Z'/T' components
// of the adapted certificates the proof binds the output keys to.
struct Tx1Statement {
    std::array<G1Point, 2> cm;
    std::array<G1Point, 2> cm_hat;
    std::array<G1Point, 2> Q;
    std::array<G1Point, 2> Q_hat;
    std::array<G1Point, 2> C_hat;
    std::array<G1Point, 2> D_hat;
    std::array<G1Point, 2> R_hat;
    std::array<G1Point, 2> Z_cert;
    std::array<G1Point, 2> T_cert;
    G1Point T; // auditor tracing key
    G1Point G; // group generator
    Bytes m;   // bound message

    Bytes serialize() const;
    static Tx1Statement deserialize(std::span<const std::uint8_t> in);
    static Tx1Statement read_from(Reader& r); // streaming decode (wire format)
};

struct Tx1Witness {
    std::array<Scalar, 2> v;      // input amounts
    std::array<Scalar, 2> v_hat;  // output amounts
    std::array<Scalar, 2> c;      // input shared keys
    std::array<Scalar, 2> c_hat;  // output shared keys
    std::array<Scalar, 2> s;      // payer long-term secrets
    std::array<Scalar, 2> gamma;  // audit-ciphertext randomness
    std::array<Scalar, 2> r;      // ephemeral secrets
    std::array<G1Point, 2> S_hat; // payee long-term addresses
    std::array<G1Point, 2> W;     // binding witnesses, W = Z' - c_hat * T'
};

struct Tx1Proof {
    Scalar e;
    std::array<Scalar, 2> z_v;
    std::array<Scalar, 2> z_vhat;
    std::array<Scalar, 2> z_c;
    std::array<Scalar, 2> z_sc;
    std::array<Scalar, 2> z_r;
    std::array<Scalar, 2> z_gamma;
    std::array<Scalar, 2> z_chat;
    Scalar z_bal;
    std::array<G1Point, 2> Z_Shat;
    std::array<G1Point, 2> Z_W;

    Bytes serialize() const;
    static Tx1Proof deserialize(std::span<const std::uint8_t> in);
    static constexpr size_t kBytes = 16 * Scalar::kBytes + 4 * G1Point::kBytes;
};

// direct substitution of the witness into every clause
bool tx1_satisfied(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w);

// throws std::invalid_argument when the witness does not satisfy the statement
Tx1Proof prove_tx1(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w,
                   RandomSource& rng);
bool verify_tx1(const PublicParams& pp, const Tx1Statement& x, const Tx1Proof& proof);

#ifdef SL_TEST_HOOKS
namespace testing {

// interactive mode: commit with explicit blinding, answer an external challenge
struct Tx1Blinding {
    std::array<Scalar, 2> r_v, r_vhat, r_c, r_sc, r_r, r_gamma, r_chat;
    Scalar r_bal;
    std::array<G1Point, 2> R_Shat, R_W;
};

Tx1Blinding tx1_sample_blinding(RandomSource& rng);

struct Tx1Commitments {
    std::array<G1Point, 2> T_cm, T_cmhat, T_Q, T_C, T_D, T_R, T_Qhat, T_B;
    G1Point T_bal;
};

Tx1Commitments tx1_commit(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w,
                          const Tx1Blinding& blinding);
Tx1Proof tx1_respond(const Tx1Witness& w, const Tx1Blinding& blinding, const Scalar& challenge);
// the Fiat-Shamir challenge for given commitments (determinism checks)
Scalar tx1_challenge(const Tx1Statement& x, const Tx1Commitments& t);

} // namespace testing
#endif

} // namespace sl::sok
