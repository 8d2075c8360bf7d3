#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>

#include "sl/primitives.hpp"
#include "sl/rac.hpp"
#include "sl/rangeproof.hpp"
#include "sl/sok.hpp"

// Protocol orchestration: registration directory, anonymous account
// generation, 2-2 transaction construction, validator verification, auditor
// tracing, payee scanning, and double-spend tracking over an append-only log.

namespace sl::ledger {

// amounts are 32-bit; range statements use n = 33 so that [0, 2^32) is provable
constexpr std::uint32_t kRangeBits = 33;
constexpr std::uint64_t kAmountBound = 1ULL << 32;

struct PublicKeys {
    G1Point T;        // tracing key
    rac::VerifKey X;  // certificate verification key

    Bytes serialize() const;
    static PublicKeys deserialize(std::span<const std::uint8_t> in);
};

struct ManagementKeys {
    Scalar mk;
    G1Point T;
    Scalar x;
    rac::VerifKey X;

    PublicKeys public_keys() const { return {T, X}; }

    Bytes serialize() const;
    static ManagementKeys deserialize(std::span<const std::uint8_t> in);
};

struct UserSecret {
    Scalar sk; // long-term secret, S = sk G
    G1Point S;
    Scalar vk; // viewing secret, V = vk G
    G1Point V;

    Bytes serialize() const;
    static UserSecret deserialize(std::span<const std::uint8_t> in);
};

struct LongTermAccount {
    G1Point S;
    G1Point V;
    rac::Signature cert;

    Bytes serialize() const;
    static LongTermAccount deserialize(std::span<const std::uint8_t> in);
};

struct AnonymousAccount {
    G1Point Q;
    G1Point cm;
};

struct TraceBundle {
    prim::Ciphertext ct;
    G1Point R;
};

struct OutputSecrets {
    Scalar c;     // shared key (doubles as certificate randomizer)
    Scalar gamma; // audit-ciphertext randomness
    Scalar r;     // ephemeral secret
    std::uint64_t v;
    G1Point payee_S;
};

struct AaGenResult {
    AnonymousAccount account;
    TraceBundle bundle;
    rac::Signature cert; // adapted onto Q
    OutputSecrets secrets;
};

// spendable input from the owner's point of view
struct SpendInput {
    AnonymousAccount account;
    Scalar s; // owner long-term secret
    Scalar c; // shared key recovered at receipt
    std::uint64_t v;
};

struct Transaction {
    sok::Tx1Statement x1;
    sok::Tx1Proof pi1;
    rp::RangeProof pi2;
    std::array<rac::Signature, 2> certs;
    std::array<TraceBundle, 2> bundles;

    Bytes serialize() const;
    static Transaction deserialize(std::span<const std::uint8_t> in);
    std::array<std::uint8_t, 32> id() const;
};

// auditor-minted funding record (test/demo seeding; amount is public)
struct GenesisRecord {
    G1Point payee_S;
    AnonymousAccount account;
    TraceBundle bundle;
    rac::Signature cert;
    std::uint64_t amount = 0;
    sok::DlProof auditor_sig; // knowledge of mk, bound to the record body

    Bytes signed_payload() const;
    Bytes serialize() const;
    static GenesisRecord deserialize(std::span<const std::uint8_t> in);
};

using LogRecord = std::variant<GenesisRecord, Transaction>;

class LedgerState {
public:
    using AddressKey = std::array<std::uint8_t, G1Point::kBytes>;

    bool register_account(const LongTermAccount& acct); // false on duplicate S
    const LongTermAccount* find_account(const G1Point& S) const;
    size_t directory_size() const { return directory_.size(); }

    bool is_spent(const G1Point& Q) const;
    void mark_spent(const G1Point& Q);
    void append(LogRecord rec) { log_.push_back(std::move(rec)); }

    const std::vector<LogRecord>& log() const { return log_; }
    const std::map<AddressKey, LongTermAccount>& directory() const { return directory_; }
    const std::set<AddressKey>& spent() const { return spent_; }

    Bytes serialize() const;
    static LedgerState deserialize(std::span<const std::uint8_t> in);

private:
    std::map<AddressKey, LongTermAccount> directory_;
    std::vector<LogRecord> log_;
    std::set<AddressKey> spent_;
};

ManagementKeys mk_gen(const PublicParams& pp, RandomSource& rng);

struct Registration {
    LongTermAccount account;
    UserSecret secret;
};

// generates a user, proves knowledge of the long-term secret, signs and
// enters the account in the directory; throws on duplicate address
Registration uk_gen_and_register(const PublicParams& pp, const ManagementKeys& keys,
                                 LedgerState& state, RandomSource& rng);

AaGenResult aa_gen(const PublicParams& pp, std::uint64_t v, const LongTermAccount& payee,
                   const PublicKeys& pub, RandomSource& rng);

GenesisRecord genesis(const PublicParams& pp, const ManagementKeys& keys,
                      const LongTermAccount& payee, std::uint64_t v, LedgerState& state,
                      RandomSource& rng);

Transaction trans(const PublicParams& pp, const std::array<SpendInput, 2>& inputs,
                  const std::array<LongTermAccount, 2>& payees,
                  const std::array<std::uint64_t, 2>& out_values, const PublicKeys& pub,
                  std::span<const std::uint8_t> m, RandomSource& rng);

enum class Verdict {
    Accepted,
    DoubleSpend,
    BadCertificate,
    SokChallengeMismatch,
    RangeInvalid,
    InconsistentBody,
    WrongKeys,
};

struct VerifyResult {
    Verdict verdict;
    const char* reason; // short stable diagnostic string

    bool ok() const { return verdict == Verdict::Accepted; }
};

// full validator check; appends the transaction and marks inputs spent on
// success, leaves state untouched on rejection
VerifyResult verf_tx(const PublicParams& pp, const PublicKeys& pub, const Transaction& tx,
                     LedgerState& state);

struct TraceResult {
    G1Point S;
    bool registered = false;          // S found in the directory
    std::optional<std::uint64_t> v;   // nullopt when BSGS finds no amount
};

TraceResult trace(const PublicParams& pp, const Scalar& mk, const Transaction& tx,
                  size_t output_index, const LedgerState& state);

struct ScanHit {
    size_t output_index;
    Scalar c;         // recovered shared key
    Scalar spend_key; // sk + c
    std::uint64_t v;
};

std::optional<ScanHit> scan(const PublicParams& pp, const UserSecret& user, const Transaction& tx);
std::optional<ScanHit> scan_genesis(const PublicParams& pp, const UserSecret& user,
                                    const GenesisRecord& rec);

// group-element census of a serialized transaction (wire-format audit)
struct ElementCount {
    size_t g1 = 0;
    size_t g2 = 0;
    size_t scalars = 0;
};
ElementCount count_tx_elements(const Transaction& tx);

#ifdef SL_TEST_HOOKS
namespace testing {
// builds an imbalanced transaction with the honest prover algebra: the local
// balance check is skipped and z_bal is faked from the c-sum difference
Transaction trans_unbalanced(const PublicParams& pp, const std::array<SpendInput, 2>& inputs,
                             const std::array<LongTermAccount, 2>& payees,
                             const std::array<std::uint64_t, 2>& out_values, const PublicKeys& pub,
                             std::span<const std::uint8_t> m, RandomSource& rng);
} // namespace testing
#endif

} // namespace sl::ledger
