#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <sl/bench.hpp>
#include <sl/wire.hpp>

using namespace sl;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 2 missing file, 3 malformed input, 4 verification failure,
// 5 lookup/not-found, 64 usage
constexpr int kOk = 0;
constexpr int kMissingFile = 2;
constexpr int kMalformed = 3;
constexpr int kVerifyFailed = 4;
constexpr int kNotFound = 5;

std::unique_ptr<RandomSource> make_rng() {
#ifdef SL_TEST_HOOKS
    if (const char* seed = std::getenv("SL_SEED")) {
        return std::make_unique<SeededRandom>(
            static_cast<std::uint64_t>(std::strtoull(seed, nullptr, 10)));
    }
#endif
    return std::make_unique<SystemRandom>();
}

std::string hex(std::span<const std::uint8_t> b) {
    static const char* d = "0123456789abcdef";
    std::string s;
    for (auto c : b) {
        s.push_back(d[c >> 4]);
        s.push_back(d[c & 15]);
    }
    return s;
}

Bytes unhex(const std::string& s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::runtime_error("bad hex digit");
    };
    if (s.size() % 2) throw std::runtime_error("odd hex length");
    Bytes out;
    for (size_t i = 0; i < s.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nib(s[i]) * 16 + nib(s[i + 1])));
    return out;
}

// payee argument: a registered address as hex, or a user key file
G1Point resolve_payee(const std::string& arg) {
    if (arg.size() == 2 * G1Point::kBytes && arg.find('.') == std::string::npos) {
        return G1Point::from_bytes(unhex(arg));
    }
    return wire::load_user(arg).S;
}

int run_guarded(bool as_json, const std::function<int(json&)>& body) {
    json out;
    int rc;
    try {
        rc = body(out);
    } catch (const DecodeError& e) {
        out["error"] = e.what();
        out["kind"] = decode_errc_name(e.errc());
        rc = kMalformed;
    } catch (const std::invalid_argument& e) {
        out["error"] = e.what();
        rc = kMalformed;
    } catch (const std::runtime_error& e) {
        out["error"] = e.what();
        rc = std::string(e.what()).find("cannot open") != std::string::npos ? kMissingFile
                                                                            : kMalformed;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else if (out.contains("error")) {
        std::cerr << "error: " << out["error"].get<std::string>() << "\n";
    } else if (out.contains("message")) {
        std::cout << out["message"].get<std::string>() << "\n";
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SilentLedger privacy-preserving auditable transactions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string pp_path, keys_path, pub_path, ledger_path, user_path, tx_path, out_path;
    std::string payee1, payee2;
    std::uint64_t amount = 0, amount2 = 0;
    std::string memo;
    int index = -1;

    auto* c_setup = app.add_subcommand("setup", "generate public parameters");
    c_setup->add_option("--out", out_path, "parameter file")->required();

    auto* c_akg = app.add_subcommand("auditor-keygen", "generate auditor keys and an empty ledger");
    c_akg->add_option("--pp", pp_path)->required();
    c_akg->add_option("--out-secret", keys_path)->required();
    c_akg->add_option("--out-public", pub_path)->required();
    c_akg->add_option("--ledger", ledger_path, "initialize an empty ledger file");

    auto* c_reg = app.add_subcommand("register", "register a new long-term account");
    c_reg->add_option("--pp", pp_path)->required();
    c_reg->add_option("--keys", keys_path, "auditor secret key file")->required();
    c_reg->add_option("--ledger", ledger_path)->required();
    c_reg->add_option("--out", user_path, "user secret key file")->required();

    auto* c_gen = app.add_subcommand("genesis", "mint a funding output for a registered user");
    c_gen->add_option("--pp", pp_path)->required();
    c_gen->add_option("--keys", keys_path)->required();
    c_gen->add_option("--ledger", ledger_path)->required();
    c_gen->add_option("--user", user_path)->required();
    c_gen->add_option("--amount", amount)->required();

    auto* c_pay = app.add_subcommand("pay", "build a 2-2 transaction from owned outputs");
    c_pay->add_option("--pp", pp_path)->required();
    c_pay->add_option("--pub", pub_path, "auditor public key file")->required();
    c_pay->add_option("--ledger", ledger_path)->required();
    c_pay->add_option("--payer", user_path)->required();
    c_pay->add_option("--payee1", payee1, "payee address (hex) or key file")->required();
    c_pay->add_option("--payee2", payee2)->required();
    c_pay->add_option("--amount1", amount)->required();
    c_pay->add_option("--amount2", amount2)->required();
    c_pay->add_option("--memo", memo, "context bytes bound into the proof");
    c_pay->add_option("--out", tx_path, "transaction file")->required();

    auto* c_ver = app.add_subcommand("verify", "validator check; appends to the ledger on success");
    c_ver->add_option("--pp", pp_path)->required();
    c_ver->add_option("--pub", pub_path)->required();
    c_ver->add_option("--ledger", ledger_path)->required();
    c_ver->add_option("--tx", tx_path)->required();

    auto* c_trace = app.add_subcommand("trace", "auditor identity and amount recovery");
    c_trace->add_option("--pp", pp_path)->required();
    c_trace->add_option("--keys", keys_path)->required();
    c_trace->add_option("--ledger", ledger_path)->required();
    c_trace->add_option("--tx", tx_path)->required();
    c_trace->add_option("--index", index, "output index (default: both)");

    auto* c_scan = app.add_subcommand("scan", "payee-side output detection");
    c_scan->add_option("--pp", pp_path)->required();
    c_scan->add_option("--user", user_path)->required();
    c_scan->add_option("--tx", tx_path)->required();

    auto* c_bench = app.add_subcommand("bench", "benchmark the seven protocol algorithms");
    bench::Config bcfg;
    std::string csv_out;
    c_bench->add_option("--pp", pp_path, "unused; parameters are self-generated");
    c_bench->add_option("--iters", bcfg.iterations, "iterations per operation");
    c_bench->add_option("--sweep-iters", bcfg.sweep_iterations, "iterations for sweep rows");
    c_bench->add_option("--payees", bcfg.payee_counts, "payee-count sweep");
    c_bench->add_option("--amount", bcfg.amount);
    c_bench->add_option("--threads", bcfg.threads);
    c_bench->add_option("--csv-out", csv_out);
    bool no_sweep = false;
    c_bench->add_flag("--no-sweep", no_sweep);

    // let global flags like --json appear after the subcommand
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);
    auto rng = make_rng();

    if (*c_setup) {
        return run_guarded(as_json, [&](json& out) {
            wire::save_params(setup(128), out_path);
            out["message"] = "parameters written to " + out_path;
            return kOk;
        });
    }

    if (*c_akg) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            ledger::ManagementKeys keys = ledger::mk_gen(pp, *rng);
            wire::save_management_keys(keys, keys_path);
            wire::save_public_keys(keys.public_keys(), pub_path);
            if (!ledger_path.empty()) wire::save_ledger(ledger::LedgerState{}, ledger_path);
            out["message"] = "auditor keys written";
            return kOk;
        });
    }

    if (*c_reg) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto keys = wire::load_management_keys(keys_path);
            auto state = wire::load_ledger(ledger_path);
            auto reg = ledger::uk_gen_and_register(pp, keys, state, *rng);
            wire::save_ledger(state, ledger_path);
            wire::save_user(reg.secret, user_path);
            out["address"] = hex(reg.account.S.to_bytes());
            out["message"] = "registered " + hex(reg.account.S.to_bytes());
            return kOk;
        });
    }

    if (*c_gen) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto keys = wire::load_management_keys(keys_path);
            auto state = wire::load_ledger(ledger_path);
            auto user = wire::load_user(user_path);
            const auto* acct = state.find_account(user.S);
            if (!acct) throw std::invalid_argument("user is not registered");
            ledger::genesis(pp, keys, *acct, amount, state, *rng);
            wire::save_ledger(state, ledger_path);
            out["message"] = "minted " + std::to_string(amount);
            return kOk;
        });
    }

    if (*c_pay) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto pub = wire::load_public_keys(pub_path);
            auto state = wire::load_ledger(ledger_path);
            auto payer = wire::load_user(user_path);
            G1Point s1 = resolve_payee(payee1);
            G1Point s2 = resolve_payee(payee2);
            const auto* p1 = state.find_account(s1);
            const auto* p2 = state.find_account(s2);
            if (!p1 || !p2) {
                out["error"] = "payee not registered";
                return kNotFound;
            }
            // wallet view: owned unspent outputs from the log
            std::vector<ledger::SpendInput> funds;
            for (const auto& rec : state.log()) {
                if (std::holds_alternative<ledger::GenesisRecord>(rec)) {
                    const auto& g = std::get<ledger::GenesisRecord>(rec);
                    if (state.is_spent(g.account.Q)) continue;
                    if (auto hit = ledger::scan_genesis(pp, payer, g))
                        funds.push_back({g.account, payer.sk, hit->c, hit->v});
                } else {
                    const auto& t = std::get<ledger::Transaction>(rec);
                    if (auto hit = ledger::scan(pp, payer, t)) {
                        ledger::AnonymousAccount acc{t.x1.Q_hat[hit->output_index],
                                                     t.x1.cm_hat[hit->output_index]};
                        if (state.is_spent(acc.Q)) continue;
                        funds.push_back({acc, payer.sk, hit->c, hit->v});
                    }
                }
            }
            std::uint64_t want = amount + amount2;
            std::array<ledger::SpendInput, 2> chosen{};
            bool found = false;
            for (size_t i = 0; !found && i < funds.size(); i++)
                for (size_t j = i + 1; !found && j < funds.size(); j++)
                    if (funds[i].v + funds[j].v == want) {
                        chosen = {funds[i], funds[j]};
                        found = true;
                    }
            if (!found) {
                out["error"] = "no pair of owned outputs sums to the requested amount";
                return kNotFound;
            }
            Bytes m(memo.begin(), memo.end());
            auto tx = ledger::trans(pp, chosen, {*p1, *p2}, {amount, amount2}, pub, m, *rng);
            wire::save_tx(tx, tx_path);
            out["txid"] = hex(tx.id());
            out["message"] = "transaction written to " + tx_path;
            return kOk;
        });
    }

    if (*c_ver) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto pub = wire::load_public_keys(pub_path);
            auto state = wire::load_ledger(ledger_path);
            auto tx = wire::load_tx(tx_path);
            auto res = ledger::verf_tx(pp, pub, tx, state);
            out["reason"] = res.reason;
            if (!res.ok()) {
                out["error"] = res.reason;
                return kVerifyFailed;
            }
            wire::save_ledger(state, ledger_path);
            out["txid"] = hex(tx.id());
            out["message"] = "accepted";
            return kOk;
        });
    }

    if (*c_trace) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto keys = wire::load_management_keys(keys_path);
            auto state = wire::load_ledger(ledger_path);
            auto tx = wire::load_tx(tx_path);
            json outputs = json::array();
            std::string msg;
            int rc = kOk;
            for (size_t j = 0; j < 2; j++) {
                if (index >= 0 && static_cast<size_t>(index) != j) continue;
                auto res = ledger::trace(pp, keys.mk, tx, j, state);
                json o;
                o["index"] = j;
                o["address"] = hex(res.S.to_bytes());
                o["registered"] = res.registered;
                if (res.v) o["amount"] = *res.v;
                else o["amount_error"] = "bsgs-not-found";
                outputs.push_back(o);
                msg += "output " + std::to_string(j) + ": S=" + hex(res.S.to_bytes()) +
                       (res.registered ? "" : " (unknown-S)") +
                       " v=" + (res.v ? std::to_string(*res.v) : "not-found") + "\n";
                if (!res.registered || !res.v) rc = kNotFound;
            }
            out["outputs"] = outputs;
            if (!msg.empty()) msg.pop_back();
            out["message"] = msg;
            return rc;
        });
    }

    if (*c_scan) {
        return run_guarded(as_json, [&](json& out) {
            PublicParams pp = wire::load_params(pp_path);
            auto user = wire::load_user(user_path);
            auto tx = wire::load_tx(tx_path);
            auto hit = ledger::scan(pp, user, tx);
            if (!hit) {
                out["error"] = "no output addressed to this user";
                return kNotFound;
            }
            out["index"] = hit->output_index;
            out["amount"] = hit->v;
            out["spend_key"] = hex(hit->spend_key.to_bytes());
            out["message"] =
                "output " + std::to_string(hit->output_index) + " amount " + std::to_string(hit->v);
            return kOk;
        });
    }

    if (*c_bench) {
        return run_guarded(as_json, [&](json& out) {
            bcfg.sweep = !no_sweep;
#ifdef SL_TEST_HOOKS
            if (const char* seed = std::getenv("SL_SEED"))
                bcfg.seed = std::strtoull(seed, nullptr, 10);
#endif
            auto report = bench::run(bcfg);
            std::string csv = bench::to_csv(report);
            if (!csv_out.empty()) {
                std::ofstream f(csv_out);
                f << csv;
            }
            if (as_json) {
                json rows = json::array();
                for (const auto& r : report.rows) {
                    rows.push_back({{"op", r.op},
                                    {"payees", r.payees},
                                    {"iterations", r.iterations},
                                    {"mean_ms", r.mean_ms},
                                    {"median_ms", r.median_ms},
                                    {"stddev_ms", r.stddev_ms},
                                    {"bytes", r.bytes}});
                }
                out["rows"] = rows;
                out["tx_g1"] = report.tx_g1;
                out["tx_g2"] = report.tx_g2;
                out["tx_bytes"] = report.tx_bytes;
                out["theory_g1"] = report.theory_g1;
                out["theory_g2"] = report.theory_g2;
            } else {
                out["message"] = bench::to_table(report);
            }
            return kOk;
        });
    }

    return 64;
}
