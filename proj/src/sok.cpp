#include "sl/sok.hpp"

#include <stdexcept>

namespace sl::sok {

namespace {

constexpr std::string_view kTagDl = "SL/FS/dl";
constexpr std::string_view kTagBdl = "SL/FS/bdl";
constexpr std::string_view kTagTx1 = "SL/FS/tx1";

Bytes point_bytes(const G1Point& p) {
    auto b = p.to_bytes();
    return Bytes(b.begin(), b.end());
}

Scalar dl_challenge(const G1Point& base, const G1Point& y, const G1Point& T,
                    std::span<const std::uint8_t> m) {
    return hash_to_scalar(kTagDl, {point_bytes(base), point_bytes(y), point_bytes(T),
                                   Bytes(m.begin(), m.end())});
}

Scalar bdl_challenge(const G1Point& base, const G1Point& y1, const G1Point& y2, const Scalar& a,
                     const Scalar& b, const G1Point& T1, const G1Point& T2,
                     std::span<const std::uint8_t> m) {
    auto ab = a.to_bytes();
    auto bb = b.to_bytes();
    return hash_to_scalar(kTagBdl, {point_bytes(base), point_bytes(y1), point_bytes(y2),
                                    Bytes(ab.begin(), ab.end()), Bytes(bb.begin(), bb.end()),
                                    point_bytes(T1), point_bytes(T2), Bytes(m.begin(), m.end())});
}

} // namespace

Bytes DlProof::serialize() const {
    Writer w;
    w.bytes(T.to_bytes());
    w.bytes(e.to_bytes());
    w.bytes(z.to_bytes());
    return std::move(w.buf());
}

DlProof DlProof::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    DlProof p;
    p.T = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.e = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.z = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    r.expect_done();
    return p;
}

DlProof prove_dl(const PublicParams& pp, const G1Point& base, const G1Point& y, const Scalar& w,
                 std::span<const std::uint8_t> m, RandomSource& rng) {
    (void)pp;
    Scalar r = Scalar::random(rng);
    DlProof proof;
    proof.T = r * base;
    proof.e = dl_challenge(base, y, proof.T, m);
    proof.z = r - w * proof.e;
    return proof;
}

bool verify_dl(const PublicParams& pp, const G1Point& base, const G1Point& y, const DlProof& proof,
               std::span<const std::uint8_t> m) {
    (void)pp;
    if (proof.T != proof.z * base + proof.e * y) return false;
    return proof.e == dl_challenge(base, y, proof.T, m);
}

Bytes BdlProof::serialize() const {
    Writer w;
    w.bytes(T1.to_bytes());
    w.bytes(T2.to_bytes());
    w.bytes(e.to_bytes());
    w.bytes(z.to_bytes());
    return std::move(w.buf());
}

BdlProof BdlProof::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    BdlProof p;
    p.T1 = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.T2 = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.e = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.z = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    r.expect_done();
    return p;
}

BdlProof prove_bdl(const PublicParams& pp, const G1Point& base, const G1Point& y1,
                   const G1Point& y2, const Scalar& a, const Scalar& b, const Scalar& w,
                   std::span<const std::uint8_t> m, RandomSource& rng) {
    (void)pp;
    Scalar r = Scalar::random(rng);
    BdlProof proof;
    proof.T1 = r * base;
    proof.T2 = (a * r) * base;
    proof.e = bdl_challenge(base, y1, y2, a, b, proof.T1, proof.T2, m);
    proof.z = r - w * proof.e;
    return proof;
}

bool verify_bdl(const PublicParams& pp, const G1Point& base, const G1Point& y1, const G1Point& y2,
                const Scalar& a, const Scalar& b, const BdlProof& proof,
                std::span<const std::uint8_t> m) {
    (void)pp;
    // T1 = z B + e y1 ; T2 = a z B + e (y2 - b B)
    if (proof.T1 != proof.z * base + proof.e * y1) return false;
    if (proof.T2 != (a * proof.z) * base + proof.e * (y2 - b * base)) return false;
    return proof.e == bdl_challenge(base, y1, y2, a, b, proof.T1, proof.T2, m);
}

Bytes Tx1Statement::serialize() const {
    Writer w;
    auto put2 = [&](const std::array<G1Point, 2>& a) {
        w.bytes(a[0].to_bytes());
        w.bytes(a[1].to_bytes());
    };
    put2(cm);
    put2(cm_hat);
    put2(Q);
    put2(Q_hat);
    put2(C_hat);
    put2(D_hat);
    put2(R_hat);
    put2(Z_cert);
    put2(T_cert);
    w.bytes(T.to_bytes());
    w.bytes(G.to_bytes());
    w.blob(m);
    return std::move(w.buf());
}

Tx1Statement Tx1Statement::read_from(Reader& r) {
    Tx1Statement x;
    auto get2 = [&](std::array<G1Point, 2>& a) {
        a[0] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
        a[1] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    };
    get2(x.cm);
    get2(x.cm_hat);
    get2(x.Q);
    get2(x.Q_hat);
    get2(x.C_hat);
    get2(x.D_hat);
    get2(x.R_hat);
    get2(x.Z_cert);
    get2(x.T_cert);
    x.T = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    x.G = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    x.m = r.blob();
    return x;
}

Tx1Statement Tx1Statement::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    Tx1Statement x = read_from(r);
    r.expect_done();
    return x;
}

Bytes Tx1Proof::serialize() const {
    Writer w;
    w.bytes(e.to_bytes());
    for (const auto* arr : {&z_v, &z_vhat, &z_c, &z_sc, &z_r, &z_gamma, &z_chat}) {
        w.bytes((*arr)[0].to_bytes());
        w.bytes((*arr)[1].to_bytes());
    }
    w.bytes(z_bal.to_bytes());
    w.bytes(Z_Shat[0].to_bytes());
    w.bytes(Z_Shat[1].to_bytes());
    w.bytes(Z_W[0].to_bytes());
    w.bytes(Z_W[1].to_bytes());
    return std::move(w.buf());
}

Tx1Proof Tx1Proof::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    Tx1Proof p;
    p.e = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    for (auto* arr : {&p.z_v, &p.z_vhat, &p.z_c, &p.z_sc, &p.z_r, &p.z_gamma, &p.z_chat}) {
        (*arr)[0] = Scalar::from_bytes(r.bytes(Scalar::kBytes));
        (*arr)[1] = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    }
    p.z_bal = Scalar::from_bytes(r.bytes(Scalar::kBytes));
    p.Z_Shat[0] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.Z_Shat[1] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.Z_W[0] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    p.Z_W[1] = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    r.expect_done();
    return p;
}

bool tx1_satisfied(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w) {
    (void)pp;
    const G1Point& G = x.G;
    const G1Point& T = x.T;
    for (int j = 0; j < 2; j++) {
        if (x.cm[j] != w.v[j] * G + w.c[j] * T) return false;
        if (x.cm_hat[j] != w.v_hat[j] * G + w.c_hat[j] * T) return false;
        if (x.Q[j] != (w.s[j] + w.c[j]) * G) return false;
        if (x.Q_hat[j] != w.S_hat[j] + w.c_hat[j] * G) return false;
        if (x.C_hat[j] != w.gamma[j] * G) return false;
        if (x.D_hat[j] != w.c_hat[j] * G + w.gamma[j] * T) return false;
        if (x.R_hat[j] != w.r[j] * G) return false;
        if (x.Z_cert[j] != w.W[j] + w.c_hat[j] * x.T_cert[j]) return false;
    }
    Scalar cdiff = w.c[0] + w.c[1] - w.c_hat[0] - w.c_hat[1];
    G1Point lhs = x.cm[0] + x.cm[1] - x.cm_hat[0] - x.cm_hat[1];
    return lhs == cdiff * T;
}

namespace {

struct Blinding {
    std::array<Scalar, 2> r_v, r_vhat, r_c, r_sc, r_r, r_gamma, r_chat;
    Scalar r_bal;
    std::array<G1Point, 2> R_Shat, R_W;
};

Blinding sample_blinding(RandomSource& rng) {
    Blinding b;
    for (int j = 0; j < 2; j++) {
        b.r_v[j] = Scalar::random(rng);
        b.r_vhat[j] = Scalar::random(rng);
        b.r_c[j] = Scalar::random(rng);
        b.r_sc[j] = Scalar::random(rng);
        b.r_r[j] = Scalar::random(rng);
        b.r_gamma[j] = Scalar::random(rng);
        b.r_chat[j] = Scalar::random(rng);
        b.R_Shat[j] = G1Point::mul_generator(Scalar::random(rng));
        b.R_W[j] = G1Point::mul_generator(Scalar::random(rng));
    }
    b.r_bal = Scalar::random(rng);
    return b;
}

struct Commitments {
    std::array<G1Point, 2> T_cm, T_cmhat, T_Q, T_C, T_D, T_R, T_Qhat, T_B;
    G1Point T_bal;
};

Commitments commit(const Tx1Statement& x, const Blinding& b) {
    const G1Point& G = x.G;
    const G1Point& T = x.T;
    Commitments t;
    for (int j = 0; j < 2; j++) {
        t.T_cm[j] = b.r_v[j] * G + b.r_c[j] * T;
        t.T_cmhat[j] = b.r_vhat[j] * G + b.r_chat[j] * T;
        t.T_Q[j] = b.r_sc[j] * G;
        t.T_C[j] = b.r_gamma[j] * G;
        t.T_D[j] = b.r_chat[j] * G + b.r_gamma[j] * T;
        t.T_R[j] = b.r_r[j] * G;
        t.T_Qhat[j] = b.r_chat[j] * G + b.R_Shat[j];
        t.T_B[j] = b.r_chat[j] * x.T_cert[j] + b.R_W[j];
    }
    t.T_bal = b.r_bal * T;
    return t;
}

Scalar challenge_of(const Tx1Statement& x, const Commitments& t) {
    HashParts parts;
    parts.push_back(x.serialize());
    auto push = [&](const G1Point& p) { parts.push_back(point_bytes(p)); };
    push(t.T_cm[0]);
    push(t.T_cm[1]);
    push(t.T_cmhat[0]);
    push(t.T_cmhat[1]);
    push(t.T_Q[0]);
    push(t.T_Q[1]);
    push(t.T_C[0]);
    push(t.T_C[1]);
    push(t.T_D[0]);
    push(t.T_D[1]);
    push(t.T_R[0]);
    push(t.T_R[1]);
    push(t.T_Qhat[0]);
    push(t.T_Qhat[1]);
    push(t.T_bal);
    push(t.T_B[0]);
    push(t.T_B[1]);
    return hash_to_scalar(kTagTx1, parts);
}

Tx1Proof respond(const Tx1Witness& w, const Blinding& b, const Scalar& e) {
    Tx1Proof p;
    p.e = e;
    for (int j = 0; j < 2; j++) {
        p.z_v[j] = b.r_v[j] - w.v[j] * e;
        p.z_vhat[j] = b.r_vhat[j] - w.v_hat[j] * e;
        p.z_c[j] = b.r_c[j] - w.c[j] * e;
        p.z_sc[j] = b.r_sc[j] - (w.s[j] + w.c[j]) * e;
        p.z_r[j] = b.r_r[j] - w.r[j] * e;
        p.z_gamma[j] = b.r_gamma[j] - w.gamma[j] * e;
        p.z_chat[j] = b.r_chat[j] - w.c_hat[j] * e;
        p.Z_Shat[j] = b.R_Shat[j] - e * w.S_hat[j];
        p.Z_W[j] = b.R_W[j] - e * w.W[j];
    }
    p.z_bal = b.r_bal - (w.c[0] + w.c[1] - w.c_hat[0] - w.c_hat[1]) * e;
    return p;
}

} // namespace

Tx1Proof prove_tx1(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w,
                   RandomSource& rng) {
    if (!tx1_satisfied(pp, x, w))
        throw std::invalid_argument("tx1 witness does not satisfy statement");
    Blinding b = sample_blinding(rng);
    Commitments t = commit(x, b);
    return respond(w, b, challenge_of(x, t));
}

bool verify_tx1(const PublicParams& pp, const Tx1Statement& x, const Tx1Proof& p) {
    (void)pp;
    const G1Point& G = x.G;
    const G1Point& T = x.T;
    const Scalar& e = p.e;
    Commitments t;
    for (int j = 0; j < 2; j++) {
        t.T_cm[j] = p.z_v[j] * G + p.z_c[j] * T + e * x.cm[j];
        t.T_cmhat[j] = p.z_vhat[j] * G + p.z_chat[j] * T + e * x.cm_hat[j];
        t.T_Q[j] = p.z_sc[j] * G + e * x.Q[j];
        t.T_C[j] = p.z_gamma[j] * G + e * x.C_hat[j];
        t.T_D[j] = p.z_chat[j] * G + p.z_gamma[j] * T + e * x.D_hat[j];
        t.T_R[j] = p.z_r[j] * G + e * x.R_hat[j];
        t.T_Qhat[j] = p.Z_Shat[j] + p.z_chat[j] * G + e * x.Q_hat[j];
        t.T_B[j] = p.Z_W[j] + p.z_chat[j] * x.T_cert[j] + e * x.Z_cert[j];
    }
    t.T_bal = p.z_bal * T + e * (x.cm[0] + x.cm[1] - x.cm_hat[0] - x.cm_hat[1]);
    return challenge_of(x, t) == e;
}

#ifdef SL_TEST_HOOKS
namespace testing {

Tx1Blinding tx1_sample_blinding(RandomSource& rng) {
    Blinding b = sample_blinding(rng);
    Tx1Blinding out;
    out.r_v = b.r_v;
    out.r_vhat = b.r_vhat;
    out.r_c = b.r_c;
    out.r_sc = b.r_sc;
    out.r_r = b.r_r;
    out.r_gamma = b.r_gamma;
    out.r_chat = b.r_chat;
    out.r_bal = b.r_bal;
    out.R_Shat = b.R_Shat;
    out.R_W = b.R_W;
    return out;
}

namespace {
Blinding to_internal(const Tx1Blinding& b) {
    Blinding i;
    i.r_v = b.r_v;
    i.r_vhat = b.r_vhat;
    i.r_c = b.r_c;
    i.r_sc = b.r_sc;
    i.r_r = b.r_r;
    i.r_gamma = b.r_gamma;
    i.r_chat = b.r_chat;
    i.r_bal = b.r_bal;
    i.R_Shat = b.R_Shat;
    i.R_W = b.R_W;
    return i;
}
} // namespace

Tx1Commitments tx1_commit(const PublicParams& pp, const Tx1Statement& x, const Tx1Witness& w,
                          const Tx1Blinding& blinding) {
    (void)pp;
    (void)w;
    Commitments t = commit(x, to_internal(blinding));
    Tx1Commitments out;
    out.T_cm = t.T_cm;
    out.T_cmhat = t.T_cmhat;
    out.T_Q = t.T_Q;
    out.T_C = t.T_C;
    out.T_D = t.T_D;
    out.T_R = t.T_R;
    out.T_Qhat = t.T_Qhat;
    out.T_B = t.T_B;
    out.T_bal = t.T_bal;
    return out;
}

Tx1Proof tx1_respond(const Tx1Witness& w, const Tx1Blinding& blinding, const Scalar& challenge) {
    return respond(w, to_internal(blinding), challenge);
}

Scalar tx1_challenge(const Tx1Statement& x, const Tx1Commitments& t) {
    Commitments i;
    i.T_cm = t.T_cm;
    i.T_cmhat = t.T_cmhat;
    i.T_Q = t.T_Q;
    i.T_C = t.T_C;
    i.T_D = t.T_D;
    i.T_R = t.T_R;
    i.T_Qhat = t.T_Qhat;
    i.T_B = t.T_B;
    i.T_bal = t.T_bal;
    return challenge_of(x, i);
}

} // namespace testing
#endif

} // namespace sl::sok
