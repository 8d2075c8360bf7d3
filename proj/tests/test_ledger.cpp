#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sl/ledger.hpp>
#include <sl/wire.hpp>

#include <cstdio>

using namespace sl;
using namespace sl::ledger;

namespace {

SeededRandom& rng() {
    static SeededRandom r(std::uint64_t{0x1ed9e4});
    return r;
}

const PublicParams& pp() {
    static PublicParams p = setup(128);
    return p;
}

struct World {
    ManagementKeys keys;
    PublicKeys pub;
    LedgerState state;
    Registration alice, bob, carol;

    World() {
        keys = mk_gen(pp(), rng());
        pub = keys.public_keys();
        alice = uk_gen_and_register(pp(), keys, state, rng());
        bob = uk_gen_and_register(pp(), keys, state, rng());
        carol = uk_gen_and_register(pp(), keys, state, rng());
    }

    // funds the payer with two outputs and returns the spend inputs
    std::array<SpendInput, 2> fund(const Registration& who, std::uint64_t v1, std::uint64_t v2) {
        GenesisRecord g1 = genesis(pp(), keys, who.account, v1, state, rng());
        GenesisRecord g2 = genesis(pp(), keys, who.account, v2, state, rng());
        auto h1 = scan_genesis(pp(), who.secret, g1);
        auto h2 = scan_genesis(pp(), who.secret, g2);
        REQUIRE(h1.has_value());
        REQUIRE(h2.has_value());
        CHECK(h1->v == v1);
        CHECK(h2->v == v2);
        return {SpendInput{g1.account, who.secret.sk, h1->c, h1->v},
                SpendInput{g2.account, who.secret.sk, h2->c, h2->v}};
    }

    Transaction pay(const std::array<SpendInput, 2>& in, const Registration& p1,
                    const Registration& p2, std::uint64_t v1, std::uint64_t v2,
                    const char* memo = "t") {
        Bytes m(memo, memo + std::char_traits<char>::length(memo));
        return trans(pp(), in, {p1.account, p2.account}, {v1, v2}, pub, m, rng());
    }
};

// every single-field perturbation of a transaction (points +G, scalars +1,
// message byte flip)
std::vector<Transaction> all_mutations(const Transaction& tx) {
    std::vector<Transaction> out;
    auto with = [&](auto&& edit) {
        Transaction t = tx;
        edit(t);
        out.push_back(std::move(t));
    };
    G1Point g = G1Point::generator();
    G2Point h = G2Point::generator();
    Scalar one = Scalar::one();
    for (int j = 0; j < 2; j++) {
        with([&](Transaction& t) { t.x1.cm[j] = t.x1.cm[j] + g; });
        with([&](Transaction& t) { t.x1.cm_hat[j] = t.x1.cm_hat[j] + g; });
        with([&](Transaction& t) { t.x1.Q[j] = t.x1.Q[j] + g; });
        with([&](Transaction& t) { t.x1.Q_hat[j] = t.x1.Q_hat[j] + g; });
        with([&](Transaction& t) { t.x1.C_hat[j] = t.x1.C_hat[j] + g; });
        with([&](Transaction& t) { t.x1.D_hat[j] = t.x1.D_hat[j] + g; });
        with([&](Transaction& t) { t.x1.R_hat[j] = t.x1.R_hat[j] + g; });
        with([&](Transaction& t) { t.x1.Z_cert[j] = t.x1.Z_cert[j] + g; });
        with([&](Transaction& t) { t.x1.T_cert[j] = t.x1.T_cert[j] + g; });
        with([&](Transaction& t) { t.pi1.z_v[j] += one; });
        with([&](Transaction& t) { t.pi1.z_vhat[j] += one; });
        with([&](Transaction& t) { t.pi1.z_c[j] += one; });
        with([&](Transaction& t) { t.pi1.z_sc[j] += one; });
        with([&](Transaction& t) { t.pi1.z_r[j] += one; });
        with([&](Transaction& t) { t.pi1.z_gamma[j] += one; });
        with([&](Transaction& t) { t.pi1.z_chat[j] += one; });
        with([&](Transaction& t) { t.pi1.Z_Shat[j] = t.pi1.Z_Shat[j] + g; });
        with([&](Transaction& t) { t.pi1.Z_W[j] = t.pi1.Z_W[j] + g; });
        with([&](Transaction& t) { t.certs[j].Z = t.certs[j].Z + g; });
        with([&](Transaction& t) { t.certs[j].S = t.certs[j].S + g; });
        with([&](Transaction& t) { t.certs[j].S_hat = t.certs[j].S_hat + h; });
        with([&](Transaction& t) { t.certs[j].T_sig = t.certs[j].T_sig + g; });
        with([&](Transaction& t) { t.bundles[j].ct.C = t.bundles[j].ct.C + g; });
        with([&](Transaction& t) { t.bundles[j].ct.D = t.bundles[j].ct.D + g; });
        with([&](Transaction& t) { t.bundles[j].R = t.bundles[j].R + g; });
    }
    with([&](Transaction& t) { t.x1.T = t.x1.T + g; });
    with([&](Transaction& t) { t.x1.G = t.x1.G + g; });
    with([&](Transaction& t) { t.x1.m.push_back('x'); });
    with([&](Transaction& t) { t.pi1.e += one; });
    with([&](Transaction& t) { t.pi1.z_bal += one; });
    with([&](Transaction& t) { t.pi2.A = t.pi2.A + g; });
    with([&](Transaction& t) { t.pi2.S = t.pi2.S + g; });
    with([&](Transaction& t) { t.pi2.T1 = t.pi2.T1 + g; });
    with([&](Transaction& t) { t.pi2.T2 = t.pi2.T2 + g; });
    with([&](Transaction& t) { t.pi2.tau_x += one; });
    with([&](Transaction& t) { t.pi2.mu += one; });
    with([&](Transaction& t) { t.pi2.t_hat += one; });
    with([&](Transaction& t) { t.pi2.a += one; });
    with([&](Transaction& t) { t.pi2.b += one; });
    for (size_t k = 0; k < tx.pi2.L.size(); k++) {
        with([&, k](Transaction& t) { t.pi2.L[k] = t.pi2.L[k] + g; });
        with([&, k](Transaction& t) { t.pi2.R[k] = t.pi2.R[k] + g; });
    }
    return out;
}

} // namespace

TEST_CASE("registration enters the directory and certifies the address") {
    World w;
    CHECK(w.state.directory_size() == 3);
    const LongTermAccount* acct = w.state.find_account(w.alice.account.S);
    REQUIRE(acct != nullptr);
    CHECK(rac::verify(pp(), w.pub.X, acct->S, acct->cert));
    CHECK(w.alice.secret.S == G1Point::mul_generator(w.alice.secret.sk));
    CHECK(w.alice.secret.V == G1Point::mul_generator(w.alice.secret.vk));
}

TEST_CASE("duplicate registration is rejected") {
    World w;
    LongTermAccount dup = w.state.find_account(w.alice.account.S) ? w.alice.account : LongTermAccount{};
    CHECK_FALSE(w.state.register_account(dup));
}

TEST_CASE("aa_gen: payee-side and auditor-side recovery") {
    World w;
    AaGenResult out = aa_gen(pp(), 12345, w.bob.account, w.pub, rng());

    // payee recomputes the shared key and unblinds the address
    Scalar c = prim::ake_shared(w.bob.secret.vk, out.bundle.R).scalar;
    CHECK(c == out.secrets.c);
    CHECK(out.account.Q - G1Point::mul_generator(c) == w.bob.account.S);

    // auditor decrypts the audit key and recovers the address
    G1Point K = prim::pke_decrypt(out.bundle.ct, w.keys.mk);
    CHECK(K == G1Point::mul_generator(out.secrets.c));
    CHECK(out.account.Q - K == w.bob.account.S);

    // zero amount degenerates to cm = c T
    AaGenResult zero = aa_gen(pp(), 0, w.bob.account, w.pub, rng());
    CHECK(zero.account.cm == zero.secrets.c * w.pub.T);

    // adapted certificate verifies against the anonymous address
    CHECK(rac::verify(pp(), w.pub.X, out.account.Q, out.cert));

    CHECK_THROWS_AS(aa_gen(pp(), kAmountBound, w.bob.account, w.pub, rng()),
                    std::invalid_argument);
}

TEST_CASE("end-to-end: pay, verify, trace, scan") {
    World w;
    auto inputs = w.fund(w.alice, 3, 5);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 6, 2);

    size_t log_before = w.state.log().size();
    auto res = verf_tx(pp(), w.pub, tx, w.state);
    CHECK(res.ok());
    CHECK(w.state.log().size() == log_before + 1);
    CHECK(w.state.is_spent(inputs[0].account.Q));
    CHECK(w.state.is_spent(inputs[1].account.Q));

    // auditor tracing from chain data alone
    TraceResult t0 = trace(pp(), w.keys.mk, tx, 0, w.state);
    TraceResult t1 = trace(pp(), w.keys.mk, tx, 1, w.state);
    CHECK(t0.S == w.bob.account.S);
    CHECK(t0.registered);
    CHECK(t0.v == 6);
    CHECK(t1.S == w.carol.account.S);
    CHECK(t1.v == 2);

    // payees find their outputs; a third party does not
    auto hb = scan(pp(), w.bob.secret, tx);
    auto hc = scan(pp(), w.carol.secret, tx);
    auto ha = scan(pp(), w.alice.secret, tx);
    REQUIRE(hb.has_value());
    REQUIRE(hc.has_value());
    CHECK_FALSE(ha.has_value());
    CHECK(hb->v == 6);
    CHECK(hc->v == 2);
    CHECK(hb->output_index == 0);
    CHECK(hc->output_index == 1);
    CHECK(hb->spend_key == w.bob.secret.sk + hb->c);

    // scan agrees with trace
    CHECK(*t0.v == hb->v);
    CHECK(*t1.v == hc->v);
}

TEST_CASE("degenerate all-zero transaction verifies") {
    World w;
    auto inputs = w.fund(w.alice, 0, 0);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 0, 0);
    CHECK(verf_tx(pp(), w.pub, tx, w.state).ok());
    CHECK(trace(pp(), w.keys.mk, tx, 0, w.state).v == 0);
}

TEST_CASE("local imbalance is rejected before proving") {
    World w;
    auto inputs = w.fund(w.alice, 3, 5);
    CHECK_THROWS_AS(w.pay(inputs, w.bob, w.carol, 6, 3), std::invalid_argument);
}

TEST_CASE("double spends are rejected and leave state unchanged") {
    World w;
    auto inputs = w.fund(w.alice, 7, 9);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 10, 6);
    REQUIRE(verf_tx(pp(), w.pub, tx, w.state).ok());

    size_t log_size = w.state.log().size();
    size_t spent_size = w.state.spent().size();

    // replay of the same transaction
    auto replay = verf_tx(pp(), w.pub, tx, w.state);
    CHECK(replay.verdict == Verdict::DoubleSpend);
    CHECK(w.state.log().size() == log_size);
    CHECK(w.state.spent().size() == spent_size);

    // a fresh transaction spending the same inputs
    Transaction second = w.pay(inputs, w.carol, w.bob, 8, 8);
    auto res = verf_tx(pp(), w.pub, second, w.state);
    CHECK(res.verdict == Verdict::DoubleSpend);
    CHECK(w.state.log().size() == log_size);
}

#ifdef SL_TEST_HOOKS
TEST_CASE("imbalanced transaction with faked balance response is rejected") {
    World w;
    auto inputs = w.fund(w.alice, 3, 5);
    Transaction forged = testing::trans_unbalanced(pp(), inputs, {w.bob.account, w.carol.account},
                                                   {6, 3}, w.pub, Bytes{}, rng());
    auto res = verf_tx(pp(), w.pub, forged, w.state);
    CHECK(res.verdict == Verdict::SokChallengeMismatch);
}
#endif

TEST_CASE("unregistered self-signed payee certificate is rejected") {
    World w;
    auto inputs = w.fund(w.alice, 3, 5);

    // forge a payee with a certificate under a random (non-auditor) key
    auto [fake_sk, fake_vk] = rac::skey_gen(pp(), rng());
    rac::Identity fake_id = rac::cert_gen(pp(), rng());
    prim::KeyPair fake_view = prim::pke_keygen(pp(), rng());
    LongTermAccount fake{fake_id.C, fake_view.pk,
                         rac::sign(pp(), fake_sk, fake_id.C, rng())};

    Transaction tx = trans(pp(), inputs, {fake, w.carol.account}, {6, 2}, w.pub, Bytes{}, rng());
    auto res = verf_tx(pp(), w.pub, tx, w.state);
    CHECK(res.verdict == Verdict::BadCertificate);
}

TEST_CASE("swapped range transcript is rejected") {
    World w;
    auto in1 = w.fund(w.alice, 3, 5);
    auto in2 = w.fund(w.alice, 10, 6);
    Transaction tx1 = w.pay(in1, w.bob, w.carol, 6, 2);
    Transaction tx2 = w.pay(in2, w.bob, w.carol, 10, 6);
    tx1.pi2 = tx2.pi2;
    auto res = verf_tx(pp(), w.pub, tx1, w.state);
    CHECK(res.verdict == Verdict::RangeInvalid);
}

TEST_CASE("every single-field mutation of a serialized transaction is rejected") {
    World w;
    auto inputs = w.fund(w.alice, 11, 22);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 30, 3);

    auto mutants = all_mutations(tx);
    CHECK(mutants.size() == 76);
    for (size_t i = 0; i < mutants.size(); i++) {
        CAPTURE(i);
        // round-trip through the wire format, as a validator would see it
        Transaction wire_view = Transaction::deserialize(mutants[i].serialize());
        LedgerState scratch = w.state;
        auto res = verf_tx(pp(), w.pub, wire_view, scratch);
        CHECK_FALSE(res.ok());
    }
    // the unmutated transaction still passes
    CHECK(verf_tx(pp(), w.pub, tx, w.state).ok());
}

TEST_CASE("conservation audit over accepted transactions") {
    World w;
    for (int round = 0; round < 5; round++) {
        std::array<std::uint8_t, 4> b;
        rng().fill(b);
        std::uint64_t v1 = b[0], v2 = b[1];
        std::uint64_t o1 = (v1 + v2) / 2, o2 = v1 + v2 - o1;
        auto inputs = w.fund(w.alice, v1, v2);
        Transaction tx = w.pay(inputs, w.bob, w.carol, o1, o2);
        REQUIRE(verf_tx(pp(), w.pub, tx, w.state).ok());

        // auditor recovers both output amounts and checks them against the
        // minted inputs it can identify by spent address
        TraceResult t0 = trace(pp(), w.keys.mk, tx, 0, w.state);
        TraceResult t1 = trace(pp(), w.keys.mk, tx, 1, w.state);
        REQUIRE(t0.v.has_value());
        REQUIRE(t1.v.has_value());
        std::uint64_t in_sum = 0;
        for (const auto& rec : w.state.log()) {
            if (!std::holds_alternative<GenesisRecord>(rec)) continue;
            const auto& gen = std::get<GenesisRecord>(rec);
            if (gen.account.Q == tx.x1.Q[0] || gen.account.Q == tx.x1.Q[1])
                in_sum += gen.amount;
        }
        CHECK(in_sum == *t0.v + *t1.v);
    }
}

TEST_CASE("role isolation: verifier, auditor and payee need only their own inputs") {
    World w;
    auto inputs = w.fund(w.alice, 40, 60);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 99, 1);
    Bytes wire_tx = tx.serialize();

    // validator: public params, public keys, chain state
    {
        Transaction view = Transaction::deserialize(wire_tx);
        LedgerState chain = w.state;
        CHECK(verf_tx(pp(), w.pub, view, chain).ok());
    }
    // auditor: management secret + chain data only
    {
        Transaction view = Transaction::deserialize(wire_tx);
        TraceResult t = trace(pp(), w.keys.mk, view, 0, w.state);
        CHECK(t.S == w.bob.account.S);
        CHECK(t.v == 99);
    }
    // payee: own secret + chain data only
    {
        Transaction view = Transaction::deserialize(wire_tx);
        auto hit = scan(pp(), w.bob.secret, view);
        REQUIRE(hit.has_value());
        CHECK(hit->v == 99);
    }
}

TEST_CASE("100 registrations are all traceable from their anonymous accounts") {
    World w;
    for (int i = 0; i < 100; i++) {
        Registration user = uk_gen_and_register(pp(), w.keys, w.state, rng());
        AaGenResult out = aa_gen(pp(), 17, user.account, w.pub, rng());
        // auditor-side identity recovery against the directory
        G1Point K = prim::pke_decrypt(out.bundle.ct, w.keys.mk);
        G1Point S = out.account.Q - K;
        CHECK(S == user.account.S);
        CHECK(w.state.find_account(S) != nullptr);
    }
}

TEST_CASE("genesis record carries a valid auditor signature") {
    World w;
    GenesisRecord rec = genesis(pp(), w.keys, w.alice.account, 500, w.state, rng());
    CHECK(sok::verify_dl(pp(), pp().g1, w.keys.T, rec.auditor_sig, rec.signed_payload()));
    GenesisRecord rt = GenesisRecord::deserialize(rec.serialize());
    CHECK(rt.amount == 500);
    CHECK(rt.account.Q == rec.account.Q);
}

TEST_CASE("ledger persistence round-trips") {
    World w;
    auto inputs = w.fund(w.alice, 123, 321);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 400, 44);
    REQUIRE(verf_tx(pp(), w.pub, tx, w.state).ok());

    Bytes blob = w.state.serialize();
    LedgerState restored = LedgerState::deserialize(blob);
    CHECK(restored.serialize() == blob);
    CHECK(restored.directory_size() == w.state.directory_size());
    CHECK(restored.log().size() == w.state.log().size());
    CHECK(restored.spent() == w.state.spent());

    // tracing still works from the restored state
    const auto& last = std::get<Transaction>(restored.log().back());
    CHECK(trace(pp(), w.keys.mk, last, 0, restored).v == 400);

    // truncation and version mismatch are distinct failures
    Bytes cut(blob.begin(), blob.end() - 5);
    CHECK_THROWS_AS(LedgerState::deserialize(cut), DecodeError);
    Bytes vers = blob;
    vers[9] = 0x77;
    bool version_error = false;
    try {
        (void)LedgerState::deserialize(vers);
    } catch (const DecodeError& e) {
        version_error = e.errc() == DecodeErrc::VersionMismatch;
    }
    CHECK(version_error);
}

TEST_CASE("a 100-transaction ledger round-trips through the file format") {
    World w;
    for (int i = 0; i < 100; i++) {
        auto inputs = w.fund(w.alice, i + 1, i + 2);
        Transaction tx = w.pay(inputs, w.alice, w.bob, i + 2, i + 1);
        REQUIRE(verf_tx(pp(), w.pub, tx, w.state).ok());
    }
    Bytes blob = w.state.serialize();
    LedgerState restored = LedgerState::deserialize(blob);
    CHECK(restored.serialize() == blob);
    CHECK(restored.log().size() == w.state.log().size());

    std::string path = "/tmp/sl_ledger_test.bin";
    wire::save_ledger(w.state, path);
    LedgerState from_file = wire::load_ledger(path);
    CHECK(from_file.serialize() == blob);
    std::remove(path.c_str());
}

TEST_CASE("transaction wire format group-element census") {
    World w;
    auto inputs = w.fund(w.alice, 1, 2);
    Transaction tx = w.pay(inputs, w.bob, w.carol, 2, 1);
    ElementCount c = count_tx_elements(tx);
    // statement 20, sok responses 4, range proof 4 + 2 log2(64), certs 6, bundles 6
    CHECK(c.g1 == 20 + 4 + (4 + 12) + 6 + 6);
    CHECK(c.g2 == 2);
    CHECK(c.scalars == 21);
    // byte-level: all G1 compressed 48B, G2 96B, scalars 32B + framing
    Bytes ser = tx.serialize();
    size_t payload = c.g1 * 48 + c.g2 * 96 + c.scalars * 32;
    CHECK(ser.size() >= payload);
    CHECK(ser.size() <= payload + 64); // framing overhead only
}
