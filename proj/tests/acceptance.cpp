// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#include <sl/bench.hpp>
#include <sl/bsgs.hpp>
#include <sl/ledger.hpp>

using namespace sl;
using namespace sl::ledger;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) g_failures++;
}

struct World {
    PublicParams pp;
    ManagementKeys keys;
    PublicKeys pub;
    LedgerState state;

    explicit World(RandomSource& rng) : pp(setup(128)) {
        keys = mk_gen(pp, rng);
        pub = keys.public_keys();
    }
};

std::uint64_t rand_amount(RandomSource& rng) {
    std::array<std::uint8_t, 4> b;
    rng.fill(b);
    return (std::uint64_t(b[0]) << 24) | (std::uint64_t(b[1]) << 16) | (std::uint64_t(b[2]) << 8) |
           b[3];
}

// ---- criterion 1: protocol completeness, 200 randomized end-to-end runs ----
void criterion_1(RandomSource& rng) {
    auto t0 = clock_type::now();
    const int kRuns = 200;
    int verf_ok = 0, trace_ok = 0, scan_ok = 0;
    World w(rng);
    std::vector<Registration> users;
    for (int i = 0; i < 3; i++) users.push_back(uk_gen_and_register(w.pp, w.keys, w.state, rng));

    for (int run = 0; run < kRuns; run++) {
        const Registration& payer = users[run % 3];
        const Registration& payee1 = users[(run + 1) % 3];
        const Registration& payee2 = users[(run + 2) % 3];

        std::uint64_t v1 = rand_amount(rng), v2 = rand_amount(rng);
        std::uint64_t total = v1 + v2; // < 2^33 - 1
        // split with both outputs inside the 32-bit range
        std::uint64_t lo = total >= kAmountBound ? total - (kAmountBound - 1) : 0;
        std::uint64_t hi = std::min(total, kAmountBound - 1);
        std::uint64_t o1 = lo + rand_amount(rng) % (hi - lo + 1);
        std::uint64_t o2 = total - o1;

        GenesisRecord g1 = genesis(w.pp, w.keys, payer.account, v1, w.state, rng);
        GenesisRecord g2 = genesis(w.pp, w.keys, payer.account, v2, w.state, rng);
        auto h1 = scan_genesis(w.pp, payer.secret, g1);
        auto h2 = scan_genesis(w.pp, payer.secret, g2);
        std::array<SpendInput, 2> inputs = {
            SpendInput{g1.account, payer.secret.sk, h1->c, h1->v},
            SpendInput{g2.account, payer.secret.sk, h2->c, h2->v}};

        Transaction tx =
            trans(w.pp, inputs, {payee1.account, payee2.account}, {o1, o2}, w.pub, Bytes{}, rng);
        if (verf_tx(w.pp, w.pub, tx, w.state).ok()) verf_ok++;

        TraceResult t0r = trace(w.pp, w.keys.mk, tx, 0, w.state);
        TraceResult t1r = trace(w.pp, w.keys.mk, tx, 1, w.state);
        bool traced = t0r.registered && t1r.registered && t0r.S == payee1.account.S &&
                      t1r.S == payee2.account.S && t0r.v == o1 && t1r.v == o2;
        if (traced) trace_ok++;

        auto s1 = scan(w.pp, payee1.secret, tx);
        auto s2 = scan(w.pp, payee2.secret, tx);
        bool scanned = s1 && s2 && s1->v == o1 && s2->v == o2 && t0r.v == s1->v && t1r.v == s2->v;
        if (scanned) scan_ok++;
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "protocol completeness: verf %d/200, trace %d/200, scan %d/200 (%.1f s)",
                  verf_ok, trace_ok, scan_ok, seconds_since(t0));
    report(1, verf_ok == kRuns && trace_ok == kRuns && scan_ok == kRuns, buf);
}

// ---- criterion 2: RAC correctness, adaptation, structural relation ----
void criterion_2(RandomSource& rng) {
    PublicParams pp = setup(128);
    auto [sk, vk] = rac::skey_gen(pp, rng);
    int sign_ok = 0, adapt_ok = 0, structural_ok = 0;
    for (int i = 0; i < 100; i++) {
        rac::Identity id = rac::cert_gen(pp, rng);
        Scalar rprime = Scalar::random(rng);
        rac::Signature sig = rac::sign(pp, sk, id.C, rng);
        if (rac::verify(pp, vk, id.C, sig)) sign_ok++;
        rac::Signature adapted = rac::adapt(pp, sig, rprime, rng);
        if (rac::verify(pp, vk, rac::rndmz(id.C, rprime), adapted)) adapt_ok++;
#ifdef SL_TEST_HOOKS
        Scalar sprime = Scalar::random_nonzero(rng);
        rac::Signature manual = rac::testing::adapt_with(pp, sig, rprime, sprime);
        if (sprime * manual.Z == sig.Z + rprime * sig.T_sig &&
            rac::verify(pp, vk, rac::rndmz(id.C, rprime), manual))
            structural_ok++;
#endif
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "RAC correctness %d/100, adaptation %d/100, structural relation %d/100",
                  sign_ok, adapt_ok, structural_ok);
    report(2, sign_ok == 100 && adapt_ok == 100 && structural_ok == 100, buf);
}

// ---- criterion 3: soundness negative suite ----
void criterion_3(RandomSource& rng) {
    World w(rng);
    Registration alice = uk_gen_and_register(w.pp, w.keys, w.state, rng);
    Registration bob = uk_gen_and_register(w.pp, w.keys, w.state, rng);
    Registration carol = uk_gen_and_register(w.pp, w.keys, w.state, rng);

    auto fund = [&](std::uint64_t v1, std::uint64_t v2) {
        GenesisRecord g1 = genesis(w.pp, w.keys, alice.account, v1, w.state, rng);
        GenesisRecord g2 = genesis(w.pp, w.keys, alice.account, v2, w.state, rng);
        auto h1 = scan_genesis(w.pp, alice.secret, g1);
        auto h2 = scan_genesis(w.pp, alice.secret, g2);
        return std::array<SpendInput, 2>{SpendInput{g1.account, alice.secret.sk, h1->c, h1->v},
                                         SpendInput{g2.account, alice.secret.sk, h2->c, h2->v}};
    };

    // (a) double-spend replay
    auto in_a = fund(5, 7);
    Transaction tx = trans(w.pp, in_a, {bob.account, carol.account}, {6, 6}, w.pub, Bytes{}, rng);
    bool a_ok = verf_tx(w.pp, w.pub, tx, w.state).ok() &&
                verf_tx(w.pp, w.pub, tx, w.state).verdict == Verdict::DoubleSpend;

    // (b) out-of-range witness unprovable; hand-forged transcript rejected
    bool b_ok = false;
    {
        std::uint64_t v = 1ULL << 32; // = 2^(n-1) for n = 33
        Scalar blind = Scalar::random(rng);
        rp::RangeStatement rs;
        rs.n = kRangeBits;
        rs.base_g = w.pp.g1;
        rs.base_t = w.pub.T;
        rs.commitments = {Scalar::from_u64(v) * rs.base_g + blind * rs.base_t};
        bool refused = false;
        try {
            (void)rp::prove_range(w.pp, rs, {{v}, {blind}}, rng);
        } catch (const std::invalid_argument&) {
            refused = true;
        }
        bool forged_rejected = true;
#ifdef SL_TEST_HOOKS
        rp::RangeProof forged = rp::testing::prove_range_unchecked(w.pp, rs, {{v}, {blind}}, rng);
        forged_rejected = !rp::verify_range(w.pp, rs, forged);
#endif
        b_ok = refused && forged_rejected;
    }

    // (c) certificate forged under a random key
    bool c_ok = false;
    {
        auto in_c = fund(5, 7);
        auto [fake_sk, fake_vk] = rac::skey_gen(w.pp, rng);
        rac::Identity fid = rac::cert_gen(w.pp, rng);
        prim::KeyPair fview = prim::pke_keygen(w.pp, rng);
        LongTermAccount fake{fid.C, fview.pk, rac::sign(w.pp, fake_sk, fid.C, rng)};
        Transaction ftx = trans(w.pp, in_c, {fake, carol.account}, {6, 6}, w.pub, Bytes{}, rng);
        c_ok = verf_tx(w.pp, w.pub, ftx, w.state).verdict == Verdict::BadCertificate;
    }

    // (d) exhaustive single-field mutation of an honest serialized transaction
    int mutants = 0, rejected = 0;
    {
        auto in_d = fund(9, 4);
        Transaction honest =
            trans(w.pp, in_d, {bob.account, carol.account}, {10, 3}, w.pub, Bytes{}, rng);
        G1Point g = w.pp.g1;
        G2Point h = w.pp.g2;
        Scalar one = Scalar::one();
        auto attempt = [&](Transaction t) {
            mutants++;
            Transaction view = Transaction::deserialize(t.serialize());
            LedgerState scratch = w.state;
            if (!verf_tx(w.pp, w.pub, view, scratch).ok()) rejected++;
        };
        for (int j = 0; j < 2; j++) {
            Transaction t;
            t = honest; t.x1.cm[j] = t.x1.cm[j] + g; attempt(t);
            t = honest; t.x1.cm_hat[j] = t.x1.cm_hat[j] + g; attempt(t);
            t = honest; t.x1.Q[j] = t.x1.Q[j] + g; attempt(t);
            t = honest; t.x1.Q_hat[j] = t.x1.Q_hat[j] + g; attempt(t);
            t = honest; t.x1.C_hat[j] = t.x1.C_hat[j] + g; attempt(t);
            t = honest; t.x1.D_hat[j] = t.x1.D_hat[j] + g; attempt(t);
            t = honest; t.x1.R_hat[j] = t.x1.R_hat[j] + g; attempt(t);
            t = honest; t.x1.Z_cert[j] = t.x1.Z_cert[j] + g; attempt(t);
            t = honest; t.x1.T_cert[j] = t.x1.T_cert[j] + g; attempt(t);
            t = honest; t.pi1.z_v[j] += one; attempt(t);
            t = honest; t.pi1.z_vhat[j] += one; attempt(t);
            t = honest; t.pi1.z_c[j] += one; attempt(t);
            t = honest; t.pi1.z_sc[j] += one; attempt(t);
            t = honest; t.pi1.z_r[j] += one; attempt(t);
            t = honest; t.pi1.z_gamma[j] += one; attempt(t);
            t = honest; t.pi1.z_chat[j] += one; attempt(t);
            t = honest; t.pi1.Z_Shat[j] = t.pi1.Z_Shat[j] + g; attempt(t);
            t = honest; t.pi1.Z_W[j] = t.pi1.Z_W[j] + g; attempt(t);
            t = honest; t.certs[j].Z = t.certs[j].Z + g; attempt(t);
            t = honest; t.certs[j].S = t.certs[j].S + g; attempt(t);
            t = honest; t.certs[j].S_hat = t.certs[j].S_hat + h; attempt(t);
            t = honest; t.certs[j].T_sig = t.certs[j].T_sig + g; attempt(t);
            t = honest; t.bundles[j].ct.C = t.bundles[j].ct.C + g; attempt(t);
            t = honest; t.bundles[j].ct.D = t.bundles[j].ct.D + g; attempt(t);
            t = honest; t.bundles[j].R = t.bundles[j].R + g; attempt(t);
        }
        Transaction t;
        t = honest; t.x1.T = t.x1.T + g; attempt(t);
        t = honest; t.x1.G = t.x1.G + g; attempt(t);
        t = honest; t.x1.m.push_back('x'); attempt(t);
        t = honest; t.pi1.e += one; attempt(t);
        t = honest; t.pi1.z_bal += one; attempt(t);
        t = honest; t.pi2.A = t.pi2.A + g; attempt(t);
        t = honest; t.pi2.S = t.pi2.S + g; attempt(t);
        t = honest; t.pi2.T1 = t.pi2.T1 + g; attempt(t);
        t = honest; t.pi2.T2 = t.pi2.T2 + g; attempt(t);
        t = honest; t.pi2.tau_x += one; attempt(t);
        t = honest; t.pi2.mu += one; attempt(t);
        t = honest; t.pi2.t_hat += one; attempt(t);
        t = honest; t.pi2.a += one; attempt(t);
        t = honest; t.pi2.b += one; attempt(t);
        for (size_t k = 0; k < honest.pi2.L.size(); k++) {
            t = honest; t.pi2.L[k] = t.pi2.L[k] + g; attempt(t);
            t = honest; t.pi2.R[k] = t.pi2.R[k] + g; attempt(t);
        }
    }
    bool d_ok = mutants > 0 && rejected == mutants;

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "negatives: replay %s, out-of-range %s, forged cert %s, mutations %d/%d rejected",
                  a_ok ? "rejected" : "ACCEPTED", b_ok ? "rejected" : "ACCEPTED",
                  c_ok ? "rejected" : "ACCEPTED", rejected, mutants);
    report(3, a_ok && b_ok && c_ok && d_ok, buf);
}

// ---- criterion 4: special soundness extraction, 50 trials ----
void criterion_4(RandomSource& rng) {
#ifndef SL_TEST_HOOKS
    report(4, false, "special soundness: test hooks disabled in this build");
#else
    PublicParams pp = setup(128);
    int ok = 0;
    const int kTrials = 50;
    for (int trial = 0; trial < kTrials; trial++) {
        // random satisfied statement
        sok::Tx1Statement x;
        sok::Tx1Witness w;
        G1Point G = pp.g1;
        G1Point T = Scalar::random_nonzero(rng) * G;
        x.G = G;
        x.T = T;
        std::uint64_t v1 = rand_amount(rng) & 0xffff, v2 = rand_amount(rng) & 0xffff;
        w.v = {Scalar::from_u64(v1), Scalar::from_u64(v2)};
        w.v_hat = {Scalar::from_u64(v1), Scalar::from_u64(v2)};
        for (int j = 0; j < 2; j++) {
            w.c[j] = Scalar::random(rng);
            w.c_hat[j] = Scalar::random(rng);
            w.s[j] = Scalar::random(rng);
            w.gamma[j] = Scalar::random_nonzero(rng);
            w.r[j] = Scalar::random_nonzero(rng);
            w.S_hat[j] = Scalar::random(rng) * G;
            w.W[j] = Scalar::random(rng) * G;
            x.cm[j] = w.v[j] * G + w.c[j] * T;
            x.cm_hat[j] = w.v_hat[j] * G + w.c_hat[j] * T;
            x.Q[j] = (w.s[j] + w.c[j]) * G;
            x.Q_hat[j] = w.S_hat[j] + w.c_hat[j] * G;
            x.C_hat[j] = w.gamma[j] * G;
            x.D_hat[j] = w.c_hat[j] * G + w.gamma[j] * T;
            x.R_hat[j] = w.r[j] * G;
            x.T_cert[j] = Scalar::random(rng) * G;
            x.Z_cert[j] = w.W[j] + w.c_hat[j] * x.T_cert[j];
        }
        auto blinding = sok::testing::tx1_sample_blinding(rng);
        (void)sok::testing::tx1_commit(pp, x, w, blinding);
        Scalar e1 = Scalar::random(rng);
        Scalar e2 = Scalar::random(rng);
        if (e1 == e2) e2 += Scalar::one();
        sok::Tx1Proof p1 = sok::testing::tx1_respond(w, blinding, e1);
        sok::Tx1Proof p2 = sok::testing::tx1_respond(w, blinding, e2);
        Scalar dinv = (e2 - e1).inverse();
        Scalar v_ext = (p1.z_v[0] - p2.z_v[0]) * dinv;
        Scalar c_ext = (p1.z_c[0] - p2.z_c[0]) * dinv;
        Scalar sc_ext = (p1.z_sc[0] - p2.z_sc[0]) * dinv;
        if (v_ext == w.v[0] && c_ext == w.c[0] && sc_ext == w.s[0] + w.c[0]) ok++;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "special soundness extraction on C1/C3: %d/%d", ok, kTrials);
    report(4, ok == kTrials, buf);
#endif
}

// ---- criterion 5: range proof vs brute-force predicate, n = 4 exhaustive ----
void criterion_5(RandomSource& rng) {
    PublicParams pp = setup(128);
    G1Point base_t = Scalar::random_nonzero(rng) * pp.g1;
    int agree = 0;
    for (std::uint64_t v = 0; v < 16; v++) {
        bool predicate = v < 8; // [0, 2^(n-1)) with n = 4
        Scalar blind = Scalar::random(rng);
        rp::RangeStatement x;
        x.n = 4;
        x.base_g = pp.g1;
        x.base_t = base_t;
        x.commitments = {Scalar::from_u64(v) * x.base_g + blind * x.base_t};
        bool proved = false;
        try {
            rp::RangeProof proof = rp::prove_range(pp, x, {{v}, {blind}}, rng);
            proved = rp::verify_range(pp, x, proof);
        } catch (const std::invalid_argument&) {
            proved = false;
        }
        if (proved == predicate) agree++;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "range prover matches brute-force predicate on %d/16 values",
                  agree);
    report(5, agree == 16, buf);
}

// ---- criterion 6: tracing performance bound ----
void criterion_6(RandomSource& rng) {
    World w(rng);
    Registration user = uk_gen_and_register(w.pp, w.keys, w.state, rng);
    GenesisRecord rec = genesis(w.pp, w.keys, user.account, 1000000, w.state, rng);

    auto t0 = clock_type::now();
    // cold path: fresh table construction plus the solve (bypasses the
    // process-wide cache other criteria may have warmed)
    G1Point K = prim::pke_decrypt(rec.bundle.ct, w.keys.mk);
    G1Point vx = rec.account.cm - w.keys.mk * K;
    BsgsTable cold_table(w.pp.g1, kAmountBound);
    auto v = cold_table.solve(vx);
    double elapsed = seconds_since(t0);

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "BSGS trace of 1,000,000 under 2^32 bound: %.2f s (ceiling 30 s; "
                  "reference 2.03 s)",
                  elapsed);
    report(6, v == 1000000 && elapsed < 30.0, buf);
}

// ---- criterion 7: benchmark methodology ----
void criterion_7() {
    bench::Config cfg;
    cfg.iterations = 1000;
    cfg.sweep_iterations = 25;
    cfg.seed = 0x5eed;
    bench::Report rep = bench::run(cfg);

    const char* ops[] = {"Setup", "MKGen", "UKGen", "AAGen", "Trans", "VerfTX", "Trace"};
    bool shape_ok = true;
    for (const char* op : ops) {
        const bench::Row* row = rep.find(op, 2);
        if (!row || row->iterations < 1000) shape_ok = false;
    }
    const bench::Row* tr = rep.find("Trans", 2);
    const bench::Row* vf = rep.find("VerfTX", 2);
    bool speed_ok = tr && vf && tr->mean_ms < 500.0 && vf->mean_ms < 500.0;

    bool monotone = true;
    double prev = -1;
    for (int k : cfg.payee_counts) {
        const bench::Row* row = rep.find("Trans_proxy", k);
        if (!row) {
            monotone = false;
            break;
        }
        if (row->median_ms < prev) monotone = false;
        prev = row->median_ms;
    }

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "bench: 7 ops at >=1000 iters %s; Trans %.1f ms / VerfTX %.1f ms (<500, "
                  "reference 9.75/22.43); proxy series %s",
                  shape_ok ? "ok" : "MISSING", tr ? tr->mean_ms : -1.0, vf ? vf->mean_ms : -1.0,
                  monotone ? "monotone" : "NOT MONOTONE");
    report(7, shape_ok && speed_ok && monotone, buf);

    std::printf("---- benchmark report ----\n%s", bench::to_table(rep).c_str());
}

// ---- criterion 8: wire-format element census ----
void criterion_8(RandomSource& rng) {
    World w(rng);
    Registration alice = uk_gen_and_register(w.pp, w.keys, w.state, rng);
    Registration bob = uk_gen_and_register(w.pp, w.keys, w.state, rng);
    GenesisRecord g1 = genesis(w.pp, w.keys, alice.account, 3, w.state, rng);
    GenesisRecord g2 = genesis(w.pp, w.keys, alice.account, 4, w.state, rng);
    auto h1 = scan_genesis(w.pp, alice.secret, g1);
    auto h2 = scan_genesis(w.pp, alice.secret, g2);
    std::array<SpendInput, 2> inputs = {SpendInput{g1.account, alice.secret.sk, h1->c, h1->v},
                                        SpendInput{g2.account, alice.secret.sk, h2->c, h2->v}};
    Transaction tx =
        trans(w.pp, inputs, {bob.account, alice.account}, {5, 2}, w.pub, Bytes{}, rng);

    ElementCount census = count_tx_elements(tx);
    // structural enumeration: 20 statement + 4 sok + (4 + 2 log2 64) range +
    // 2x3 certificate + 2x3 bundle points in G1; one G2 point per certificate
    size_t expect_g1 = 20 + 4 + rp::expected_group_elements(kRangeBits, 2) + 6 + 6;
    size_t expect_g2 = 2;
    size_t wire_bytes = tx.serialize().size();
    size_t predicted =
        census.g1 * G1Point::kBytes + census.g2 * G2Point::kBytes + census.scalars * 32;

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "tx census %zu G1 + %zu G2 (expected %zu/%zu); %zu bytes on the wire; "
                  "formula (27+2log2 n)|G1|+|G2| at n=32 gives 37 G1 + 1 G2",
                  census.g1, census.g2, expect_g1, expect_g2, wire_bytes);
    bool ok = census.g1 == expect_g1 && census.g2 == expect_g2 && wire_bytes >= predicted &&
              wire_bytes <= predicted + 64;
    report(8, ok, buf);
}

} // namespace

int main() {
    SeededRandom rng(std::uint64_t{0xacce97a4ce});
    auto t0 = clock_type::now();
    criterion_1(rng);
    criterion_2(rng);
    criterion_3(rng);
    criterion_4(rng);
    criterion_5(rng);
    criterion_6(rng);
    criterion_7();
    criterion_8(rng);
    std::printf("acceptance finished in %.1f s with %d failure(s)\n", seconds_since(t0),
                g_failures);
    return g_failures;
}
