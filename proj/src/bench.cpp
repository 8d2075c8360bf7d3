#include "sl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>
#include <thread>

namespace sl::bench {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

Row summarize(const std::string& op, int payees, std::vector<double> samples, std::size_t bytes) {
    Row row;
    row.op = op;
    row.payees = payees;
    row.iterations = static_cast<int>(samples.size());
    row.bytes = bytes;
    if (samples.empty()) return row;
    double sum = 0;
    for (double s : samples) sum += s;
    row.mean_ms = sum / samples.size();
    std::sort(samples.begin(), samples.end());
    size_t mid = samples.size() / 2;
    row.median_ms = samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    double var = 0;
    for (double s : samples) var += (s - row.mean_ms) * (s - row.mean_ms);
    row.stddev_ms = samples.size() > 1 ? std::sqrt(var / (samples.size() - 1)) : 0.0;
    return row;
}

// one worker's slice of a timed trial set; merged in worker order
template <class Fn>
std::vector<double> run_trials(const Config& cfg, int total, Fn&& trial_factory) {
    int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        std::unique_ptr<RandomSource> rng =
            cfg.seed ? std::unique_ptr<RandomSource>(new SeededRandom(cfg.seed))
                     : std::unique_ptr<RandomSource>(new SystemRandom());
        auto trial = trial_factory(*rng);
        std::vector<double> out(total);
        for (int i = 0; i < total; i++) {
            auto t0 = clock_type::now();
            trial();
            out[i] = elapsed_ms(t0, clock_type::now());
        }
        return out;
    }
    std::vector<std::vector<double>> per(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; w++) {
        int n = total / threads + (w < total % threads ? 1 : 0);
        per[w].resize(n);
        pool.emplace_back([&, w, n] {
            std::unique_ptr<RandomSource> rng =
                cfg.seed ? std::unique_ptr<RandomSource>(new SeededRandom(cfg.seed + 1 + w))
                         : std::unique_ptr<RandomSource>(new SystemRandom());
            auto trial = trial_factory(*rng);
            for (int i = 0; i < n; i++) {
                auto t0 = clock_type::now();
                trial();
                per[w][i] = elapsed_ms(t0, clock_type::now());
            }
        });
    }
    for (auto& t : pool) t.join();
    std::vector<double> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

struct Fixture {
    PublicParams pp;
    ledger::ManagementKeys keys;
    ledger::PublicKeys pub;
    ledger::LedgerState state;
    ledger::Registration alice, bob, carol;
    std::array<ledger::SpendInput, 2> inputs;
    ledger::Transaction tx;
    Bytes tx_bytes;

    explicit Fixture(const Config& cfg, RandomSource& rng) : pp(setup(128)) {
        keys = ledger::mk_gen(pp, rng);
        pub = keys.public_keys();
        alice = ledger::uk_gen_and_register(pp, keys, state, rng);
        bob = ledger::uk_gen_and_register(pp, keys, state, rng);
        carol = ledger::uk_gen_and_register(pp, keys, state, rng);

        std::uint64_t half = cfg.amount / 2;
        auto g1 = ledger::genesis(pp, keys, alice.account, half, state, rng);
        auto g2 = ledger::genesis(pp, keys, alice.account, cfg.amount - half, state, rng);
        auto h1 = ledger::scan_genesis(pp, alice.secret, g1);
        auto h2 = ledger::scan_genesis(pp, alice.secret, g2);
        inputs = {ledger::SpendInput{g1.account, alice.secret.sk, h1->c, h1->v},
                  ledger::SpendInput{g2.account, alice.secret.sk, h2->c, h2->v}};
        tx = make_tx(cfg, rng);
        tx_bytes = tx.serialize();
    }

    ledger::Transaction make_tx(const Config& cfg, RandomSource& rng) const {
        std::uint64_t half = cfg.amount / 2;
        return ledger::trans(pp, inputs, {bob.account, carol.account},
                             {half, cfg.amount - half}, pub, Bytes{}, rng);
    }
};

} // namespace

const Row* Report::find(const std::string& op, int payees) const {
    for (const auto& r : rows)
        if (r.op == op && r.payees == payees) return &r;
    return nullptr;
}

Report run(const Config& cfg) {
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    Report report;

    std::unique_ptr<RandomSource> setup_rng =
        cfg.seed ? std::unique_ptr<RandomSource>(new SeededRandom(cfg.seed ^ 0x5e7f))
                 : std::unique_ptr<RandomSource>(new SystemRandom());
    Fixture fx(cfg, *setup_rng);

    // warm the BSGS table so Trace rows measure steady-state tracing
    (void)bsgs_table_for(G1Point::generator(), ledger::kAmountBound);

    auto add = [&](const std::string& op, int payees, std::vector<double> samples,
                   std::size_t bytes) {
        report.rows.push_back(summarize(op, payees, std::move(samples), bytes));
    };

    add("Setup", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource&) { return [] { (void)setup(128); }; }),
        fx.pp.serialize().size());

    add("MKGen", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource& rng) {
                       return [&] { (void)ledger::mk_gen(fx.pp, rng); };
                   }),
        fx.pub.serialize().size());

    add("UKGen", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource& rng) {
                       return [&] {
                           ledger::LedgerState scratch;
                           (void)ledger::uk_gen_and_register(fx.pp, fx.keys, scratch, rng);
                       };
                   }),
        2 * G1Point::kBytes);

    add("AAGen", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource& rng) {
                       return [&] {
                           (void)ledger::aa_gen(fx.pp, cfg.amount, fx.bob.account, fx.pub, rng);
                       };
                   }),
        2 * G1Point::kBytes);

    add("Trans", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource& rng) {
                       return [&] { (void)fx.make_tx(cfg, rng); };
                   }),
        fx.tx_bytes.size());

    add("VerfTX", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource&) {
                       return [&] {
                           ledger::LedgerState scratch;
                           auto res = ledger::verf_tx(fx.pp, fx.pub, fx.tx, scratch);
                           if (!res.ok()) throw std::logic_error("bench tx rejected");
                       };
                   }),
        fx.tx_bytes.size());

    add("Trace", 2,
        run_trials(cfg, cfg.iterations,
                   [&](RandomSource&) {
                       return [&] {
                           auto res = ledger::trace(fx.pp, fx.keys.mk, fx.tx, 0, fx.state);
                           if (!res.v) throw std::logic_error("bench trace failed");
                       };
                   }),
        0);

    if (cfg.sweep) {
        // payee scaling proxy: extra account generations on top of the 2-2 core
        int sweep_iters = std::max(1, cfg.sweep_iterations);
        for (int k : cfg.payee_counts) {
            add("AAGen_sweep", k,
                run_trials(cfg, sweep_iters,
                           [&](RandomSource& rng) {
                               return [&, k] {
                                   for (int i = 0; i < k; i++)
                                       (void)ledger::aa_gen(fx.pp, cfg.amount, fx.bob.account,
                                                            fx.pub, rng);
                               };
                           }),
                0);
            add("Trans_proxy", k,
                run_trials(cfg, sweep_iters,
                           [&](RandomSource& rng) {
                               return [&, k] {
                                   (void)fx.make_tx(cfg, rng);
                                   for (int i = 2; i < k; i++)
                                       (void)ledger::aa_gen(fx.pp, cfg.amount, fx.bob.account,
                                                            fx.pub, rng);
                               };
                           }),
                0);
            add("VerfTX_proxy", k,
                run_trials(cfg, sweep_iters,
                           [&](RandomSource&) {
                               return [&, k] {
                                   ledger::LedgerState scratch;
                                   (void)ledger::verf_tx(fx.pp, fx.pub, fx.tx, scratch);
                                   for (int i = 2; i < k; i++)
                                       (void)rac::verify(fx.pp, fx.pub.X, fx.tx.x1.Q_hat[0],
                                                         fx.tx.certs[0]);
                               };
                           }),
                0);
        }
    }

    auto census = ledger::count_tx_elements(fx.tx);
    report.tx_g1 = census.g1;
    report.tx_g2 = census.g2;
    report.tx_scalars = census.scalars;
    report.tx_bytes = fx.tx_bytes.size();
    // theoretical count: (27 + 2 log2 n)|G1| + |G2| per transaction
    {
        unsigned lg = 0; // log2 of the 32-bit amount width
        while ((1u << (lg + 1)) <= 32u) lg++;
        report.theory_g1 = 27 + 2 * lg;
        report.theory_g2 = 1;
    }
    return report;
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "op,payees,iterations,mean_ms,median_ms,stddev_ms,bytes\n";
    for (const auto& row : r.rows) {
        os << row.op << ',' << row.payees << ',' << row.iterations << ',' << row.mean_ms << ','
           << row.median_ms << ',' << row.stddev_ms << ',' << row.bytes << '\n';
    }
    return os.str();
}

std::string to_table(const Report& r) {
    std::ostringstream os;
    os << "op            payees  iters   mean_ms   median_ms  stddev_ms  bytes\n";
    char buf[160];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%-13s %6d %6d %10.3f %10.3f %10.3f %7zu\n",
                      row.op.c_str(), row.payees, row.iterations, row.mean_ms, row.median_ms,
                      row.stddev_ms, row.bytes);
        os << buf;
    }
    os << "tx element census: " << r.tx_g1 << " G1 + " << r.tx_g2 << " G2 + " << r.tx_scalars
       << " scalars (" << r.tx_bytes << " bytes serialized)\n";
    os << "reference formula (27 + 2 log2 n)|G1| + |G2| at n=32: " << r.theory_g1 << " G1 + "
       << r.theory_g2 << " G2\n";
    return os.str();
}

} // namespace sl::bench
