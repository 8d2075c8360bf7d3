#include "sl/ledger.hpp"

#include <stdexcept>

#include "sl/hashing.hpp"

namespace sl::ledger {

namespace {

rp::RangeStatement range_statement_of(const PublicParams& pp, const sok::Tx1Statement& x1) {
    rp::RangeStatement rs;
    rs.commitments = {x1.cm_hat[0], x1.cm_hat[1]};
    rs.n = kRangeBits;
    rs.base_g = pp.g1;
    rs.base_t = x1.T;
    return rs;
}

} // namespace

bool LedgerState::register_account(const LongTermAccount& acct) {
    return directory_.emplace(acct.S.to_bytes(), acct).second;
}

const LongTermAccount* LedgerState::find_account(const G1Point& S) const {
    auto it = directory_.find(S.to_bytes());
    return it == directory_.end() ? nullptr : &it->second;
}

bool LedgerState::is_spent(const G1Point& Q) const { return spent_.count(Q.to_bytes()) != 0; }

void LedgerState::mark_spent(const G1Point& Q) { spent_.insert(Q.to_bytes()); }

ManagementKeys mk_gen(const PublicParams& pp, RandomSource& rng) {
    ManagementKeys keys;
    keys.mk = Scalar::random_nonzero(rng);
    keys.T = G1Point::mul_generator(keys.mk);
    auto [sk, vk] = rac::skey_gen(pp, rng);
    keys.x = sk.x;
    keys.X = vk;
    return keys;
}

Registration uk_gen_and_register(const PublicParams& pp, const ManagementKeys& keys,
                                 LedgerState& state, RandomSource& rng) {
    rac::Identity id = rac::cert_gen(pp, rng);
    prim::KeyPair view = prim::pke_keygen(pp, rng);

    // proof of knowledge of the long-term secret, bound to (S, V)
    Writer w;
    w.bytes(id.C.to_bytes());
    w.bytes(view.pk.to_bytes());
    sok::DlProof pok = sok::prove_dl(pp, pp.g1, id.C, *id.opening, w.buf(), rng);
    if (!sok::verify_dl(pp, pp.g1, id.C, pok, w.buf()))
        throw std::logic_error("registration proof failed to verify");

    if (state.find_account(id.C)) throw std::invalid_argument("address already registered");

    LongTermAccount acct;
    acct.S = id.C;
    acct.V = view.pk;
    acct.cert = rac::sign(pp, rac::SigningKey{keys.x}, id.C, rng);
    if (!state.register_account(acct)) throw std::invalid_argument("address already registered");

    UserSecret secret{*id.opening, id.C, view.sk, view.pk};
    return {acct, secret};
}

AaGenResult aa_gen(const PublicParams& pp, std::uint64_t v, const LongTermAccount& payee,
                   const PublicKeys& pub, RandomSource& rng) {
    if (v >= kAmountBound) throw std::invalid_argument("amount out of range");

    Scalar r, c;
    G1Point R;
    do {
        r = Scalar::random_nonzero(rng);
        R = G1Point::mul_generator(r);
        c = prim::ake_shared(r, payee.V).scalar;
    } while (c.is_zero());

    G1Point K = prim::of_map(c);
    auto [ct, gamma] = prim::pke_encrypt_fresh(pp, K, pub.T, rng);

    AaGenResult out;
    out.account.Q = rac::rndmz(payee.S, c);
    out.account.cm = prim::rf_encode(v) + c * pub.T;
    out.bundle = TraceBundle{ct, R};
    out.cert = rac::adapt(pp, payee.cert, c, rng);
    out.secrets = OutputSecrets{c, gamma, r, v, payee.S};
    return out;
}

GenesisRecord genesis(const PublicParams& pp, const ManagementKeys& keys,
                      const LongTermAccount& payee, std::uint64_t v, LedgerState& state,
                      RandomSource& rng) {
    AaGenResult gen = aa_gen(pp, v, payee, keys.public_keys(), rng);
    GenesisRecord rec;
    rec.payee_S = payee.S;
    rec.account = gen.account;
    rec.bundle = gen.bundle;
    rec.cert = gen.cert;
    rec.amount = v;
    rec.auditor_sig = sok::prove_dl(pp, pp.g1, keys.T, keys.mk, rec.signed_payload(), rng);
    state.append(rec);
    return rec;
}

Transaction trans(const PublicParams& pp, const std::array<SpendInput, 2>& inputs,
                  const std::array<LongTermAccount, 2>& payees,
                  const std::array<std::uint64_t, 2>& out_values, const PublicKeys& pub,
                  std::span<const std::uint8_t> m, RandomSource& rng) {
    for (int j = 0; j < 2; j++) {
        if (inputs[j].v >= kAmountBound || out_values[j] >= kAmountBound)
            throw std::invalid_argument("amount out of range");
    }
    unsigned __int128 in_sum = static_cast<unsigned __int128>(inputs[0].v) + inputs[1].v;
    unsigned __int128 out_sum = static_cast<unsigned __int128>(out_values[0]) + out_values[1];
    if (in_sum != out_sum) throw std::invalid_argument("transaction does not balance");

    std::array<AaGenResult, 2> outs = {aa_gen(pp, out_values[0], payees[0], pub, rng),
                                       aa_gen(pp, out_values[1], payees[1], pub, rng)};

    Transaction tx;
    sok::Tx1Statement& x = tx.x1;
    sok::Tx1Witness w;
    for (int j = 0; j < 2; j++) {
        x.cm[j] = inputs[j].account.cm;
        x.Q[j] = inputs[j].account.Q;
        x.cm_hat[j] = outs[j].account.cm;
        x.Q_hat[j] = outs[j].account.Q;
        x.C_hat[j] = outs[j].bundle.ct.C;
        x.D_hat[j] = outs[j].bundle.ct.D;
        x.R_hat[j] = outs[j].bundle.R;
        x.Z_cert[j] = outs[j].cert.Z;
        x.T_cert[j] = outs[j].cert.T_sig;

        w.v[j] = Scalar::from_u64(inputs[j].v);
        w.v_hat[j] = Scalar::from_u64(out_values[j]);
        w.c[j] = inputs[j].c;
        w.c_hat[j] = outs[j].secrets.c;
        w.s[j] = inputs[j].s;
        w.gamma[j] = outs[j].secrets.gamma;
        w.r[j] = outs[j].secrets.r;
        w.S_hat[j] = payees[j].S;
        w.W[j] = outs[j].cert.Z - outs[j].secrets.c * outs[j].cert.T_sig;

        tx.certs[j] = outs[j].cert;
        tx.bundles[j] = outs[j].bundle;
    }
    x.T = pub.T;
    x.G = pp.g1;
    x.m.assign(m.begin(), m.end());

    tx.pi1 = sok::prove_tx1(pp, x, w, rng);

    rp::RangeWitness rw;
    rw.values = {out_values[0], out_values[1]};
    rw.blinders = {outs[0].secrets.c, outs[1].secrets.c};
    tx.pi2 = rp::aggregate_prove(pp, range_statement_of(pp, x), rw, rng);
    return tx;
}

VerifyResult verf_tx(const PublicParams& pp, const PublicKeys& pub, const Transaction& tx,
                     LedgerState& state) {
    const sok::Tx1Statement& x = tx.x1;
    if (x.G != pp.g1 || x.T != pub.T)
        return {Verdict::WrongKeys, "statement-keys-mismatch"};

    for (int j = 0; j < 2; j++) {
        if (tx.bundles[j].ct.C != x.C_hat[j] || tx.bundles[j].ct.D != x.D_hat[j] ||
            tx.bundles[j].R != x.R_hat[j])
            return {Verdict::InconsistentBody, "trace-bundle-mismatch"};
        if (tx.certs[j].Z != x.Z_cert[j] || tx.certs[j].T_sig != x.T_cert[j])
            return {Verdict::InconsistentBody, "certificate-statement-mismatch"};
    }

    if (x.Q[0] == x.Q[1]) return {Verdict::DoubleSpend, "double-spend"};
    if (state.is_spent(x.Q[0]) || state.is_spent(x.Q[1]))
        return {Verdict::DoubleSpend, "double-spend"};

    for (int j = 0; j < 2; j++)
        if (!rac::verify(pp, pub.X, x.Q_hat[j], tx.certs[j]))
            return {Verdict::BadCertificate, "certificate-invalid"};

    if (!sok::verify_tx1(pp, x, tx.pi1))
        return {Verdict::SokChallengeMismatch, "sok-challenge-mismatch"};

    if (!rp::aggregate_verify(pp, range_statement_of(pp, x), tx.pi2))
        return {Verdict::RangeInvalid, "range-proof-invalid"};

    state.mark_spent(x.Q[0]);
    state.mark_spent(x.Q[1]);
    state.append(tx);
    return {Verdict::Accepted, "accepted"};
}

TraceResult trace(const PublicParams& pp, const Scalar& mk, const Transaction& tx,
                  size_t output_index, const LedgerState& state) {
    (void)pp;
    if (output_index >= 2) throw std::invalid_argument("output index out of range");
    const TraceBundle& bundle = tx.bundles[output_index];
    G1Point K = prim::pke_decrypt(bundle.ct, mk);
    TraceResult res;
    res.S = prim::ske_decrypt(tx.x1.Q_hat[output_index], K);
    res.registered = state.find_account(res.S) != nullptr;
    G1Point tc = mk * K;
    res.v = prim::rf_decode(tx.x1.cm_hat[output_index] - tc, kAmountBound);
    return res;
}

std::optional<ScanHit> scan(const PublicParams& pp, const UserSecret& user,
                            const Transaction& tx) {
    (void)pp;
    for (size_t j = 0; j < 2; j++) {
        Scalar c = prim::ake_shared(user.vk, tx.x1.R_hat[j]).scalar;
        if (user.S + G1Point::mul_generator(c) != tx.x1.Q_hat[j]) continue;
        auto v = prim::rf_decode(tx.x1.cm_hat[j] - c * tx.x1.T, kAmountBound);
        if (!v) throw std::runtime_error("scan: matched output carries an out-of-range amount");
        return ScanHit{j, c, user.sk + c, *v};
    }
    return std::nullopt;
}

std::optional<ScanHit> scan_genesis(const PublicParams& pp, const UserSecret& user,
                                    const GenesisRecord& rec) {
    (void)pp;
    Scalar c = prim::ake_shared(user.vk, rec.bundle.R).scalar;
    if (user.S + G1Point::mul_generator(c) != rec.account.Q) return std::nullopt;
    return ScanHit{0, c, user.sk + c, rec.amount};
}

ElementCount count_tx_elements(const Transaction& tx) {
    ElementCount n;
    n.g1 += 20;               // statement points
    n.g1 += 4;                // pi1 group responses
    n.scalars += 16;          // pi1 challenge + scalar responses
    n.g1 += tx.pi2.group_element_count();
    n.scalars += 5;           // pi2 scalars
    n.g1 += 2 * 3;            // certs: Z, S, T_sig
    n.g2 += 2;                // certs: S_hat
    n.g1 += 2 * 3;            // bundles: C, D, R
    return n;
}

#ifdef SL_TEST_HOOKS
namespace testing {

Transaction trans_unbalanced(const PublicParams& pp, const std::array<SpendInput, 2>& inputs,
                             const std::array<LongTermAccount, 2>& payees,
                             const std::array<std::uint64_t, 2>& out_values, const PublicKeys& pub,
                             std::span<const std::uint8_t> m, RandomSource& rng) {
    std::array<AaGenResult, 2> outs = {aa_gen(pp, out_values[0], payees[0], pub, rng),
                                       aa_gen(pp, out_values[1], payees[1], pub, rng)};
    Transaction tx;
    sok::Tx1Statement& x = tx.x1;
    sok::Tx1Witness w;
    for (int j = 0; j < 2; j++) {
        x.cm[j] = inputs[j].account.cm;
        x.Q[j] = inputs[j].account.Q;
        x.cm_hat[j] = outs[j].account.cm;
        x.Q_hat[j] = outs[j].account.Q;
        x.C_hat[j] = outs[j].bundle.ct.C;
        x.D_hat[j] = outs[j].bundle.ct.D;
        x.R_hat[j] = outs[j].bundle.R;
        x.Z_cert[j] = outs[j].cert.Z;
        x.T_cert[j] = outs[j].cert.T_sig;
        w.v[j] = Scalar::from_u64(inputs[j].v);
        w.v_hat[j] = Scalar::from_u64(out_values[j]);
        w.c[j] = inputs[j].c;
        w.c_hat[j] = outs[j].secrets.c;
        w.s[j] = inputs[j].s;
        w.gamma[j] = outs[j].secrets.gamma;
        w.r[j] = outs[j].secrets.r;
        w.S_hat[j] = payees[j].S;
        w.W[j] = outs[j].cert.Z - outs[j].secrets.c * outs[j].cert.T_sig;
        tx.certs[j] = outs[j].cert;
        tx.bundles[j] = outs[j].bundle;
    }
    x.T = pub.T;
    x.G = pp.g1;
    x.m.assign(m.begin(), m.end());

    // honest transcript with the balance clause treated as if it held
    auto blinding = sok::testing::tx1_sample_blinding(rng);
    auto commitments = sok::testing::tx1_commit(pp, x, w, blinding);
    Scalar e = sok::testing::tx1_challenge(x, commitments);
    tx.pi1 = sok::testing::tx1_respond(w, blinding, e);

    rp::RangeWitness rw;
    rw.values = {out_values[0], out_values[1]};
    rw.blinders = {outs[0].secrets.c, outs[1].secrets.c};
    tx.pi2 = rp::aggregate_prove(pp, range_statement_of(pp, x), rw, rng);
    return tx;
}

} // namespace testing
#endif

} // namespace sl::ledger
