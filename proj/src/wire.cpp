#include "sl/wire.hpp"

#include <cstdio>
#include <stdexcept>

#include "sl/hashing.hpp"

namespace sl::ledger {

namespace {

constexpr char kLedgerMagic[8] = {'S', 'L', 'E', 'D', 'G', 'R', '0', '1'};
constexpr std::uint16_t kLedgerVersion = 1;

void put_point(Writer& w, const G1Point& p) { w.bytes(p.to_bytes()); }
G1Point get_point(Reader& r) { return G1Point::from_bytes(r.bytes(G1Point::kBytes)); }
void put_scalar(Writer& w, const Scalar& s) { w.bytes(s.to_bytes()); }
Scalar get_scalar(Reader& r) { return Scalar::from_bytes(r.bytes(Scalar::kBytes)); }

void put_bundle(Writer& w, const TraceBundle& b) {
    put_point(w, b.ct.C);
    put_point(w, b.ct.D);
    put_point(w, b.R);
}

TraceBundle get_bundle(Reader& r) {
    TraceBundle b;
    b.ct.C = get_point(r);
    b.ct.D = get_point(r);
    b.R = get_point(r);
    return b;
}

} // namespace

Bytes PublicKeys::serialize() const {
    Writer w;
    put_point(w, T);
    w.bytes(X.serialize());
    return std::move(w.buf());
}

PublicKeys PublicKeys::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    PublicKeys k;
    k.T = get_point(r);
    k.X = rac::VerifKey::deserialize(r.bytes(G2Point::kBytes));
    r.expect_done();
    return k;
}

Bytes ManagementKeys::serialize() const {
    Writer w;
    put_scalar(w, mk);
    put_scalar(w, x);
    return std::move(w.buf());
}

ManagementKeys ManagementKeys::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    ManagementKeys k;
    k.mk = get_scalar(r);
    k.x = get_scalar(r);
    r.expect_done();
    k.T = G1Point::mul_generator(k.mk);
    k.X = rac::VerifKey(k.x * G2Point::generator());
    return k;
}

Bytes UserSecret::serialize() const {
    Writer w;
    put_scalar(w, sk);
    put_scalar(w, vk);
    return std::move(w.buf());
}

UserSecret UserSecret::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    UserSecret u;
    u.sk = get_scalar(r);
    u.vk = get_scalar(r);
    r.expect_done();
    u.S = G1Point::mul_generator(u.sk);
    u.V = G1Point::mul_generator(u.vk);
    return u;
}

Bytes LongTermAccount::serialize() const {
    Writer w;
    put_point(w, S);
    put_point(w, V);
    w.bytes(cert.serialize());
    return std::move(w.buf());
}

LongTermAccount LongTermAccount::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    LongTermAccount a;
    a.S = get_point(r);
    a.V = get_point(r);
    a.cert = rac::Signature::deserialize(r.bytes(rac::Signature::kBytes));
    r.expect_done();
    return a;
}

Bytes Transaction::serialize() const {
    Writer w;
    w.bytes(x1.serialize());
    w.bytes(pi1.serialize());
    Bytes p2 = pi2.serialize();
    if (p2.size() > 0xffff) throw std::logic_error("range proof too large for framing");
    w.u16(static_cast<std::uint16_t>(p2.size()));
    w.bytes(p2);
    w.bytes(certs[0].serialize());
    w.bytes(certs[1].serialize());
    put_bundle(w, bundles[0]);
    put_bundle(w, bundles[1]);
    return std::move(w.buf());
}

Transaction Transaction::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    Transaction tx;
    tx.x1 = sok::Tx1Statement::read_from(r);
    tx.pi1 = sok::Tx1Proof::deserialize(r.bytes(sok::Tx1Proof::kBytes));
    std::uint16_t p2len = r.u16();
    tx.pi2 = rp::RangeProof::deserialize(r.bytes(p2len));
    tx.certs[0] = rac::Signature::deserialize(r.bytes(rac::Signature::kBytes));
    tx.certs[1] = rac::Signature::deserialize(r.bytes(rac::Signature::kBytes));
    tx.bundles[0] = get_bundle(r);
    tx.bundles[1] = get_bundle(r);
    r.expect_done();
    return tx;
}

std::array<std::uint8_t, 32> Transaction::id() const { return sha256(serialize()); }

Bytes GenesisRecord::signed_payload() const {
    Writer w;
    put_point(w, payee_S);
    put_point(w, account.Q);
    put_point(w, account.cm);
    put_bundle(w, bundle);
    w.bytes(cert.serialize());
    w.u64(amount);
    return std::move(w.buf());
}

Bytes GenesisRecord::serialize() const {
    Writer w;
    w.bytes(signed_payload());
    w.bytes(auditor_sig.serialize());
    return std::move(w.buf());
}

GenesisRecord GenesisRecord::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    GenesisRecord rec;
    rec.payee_S = get_point(r);
    rec.account.Q = get_point(r);
    rec.account.cm = get_point(r);
    rec.bundle = get_bundle(r);
    rec.cert = rac::Signature::deserialize(r.bytes(rac::Signature::kBytes));
    rec.amount = r.u64();
    rec.auditor_sig = sok::DlProof::deserialize(r.bytes(sok::DlProof::kBytes));
    r.expect_done();
    return rec;
}

Bytes LedgerState::serialize() const {
    Writer w;
    w.bytes(std::span(reinterpret_cast<const std::uint8_t*>(kLedgerMagic), 8));
    w.u16(kLedgerVersion);
    w.u32(static_cast<std::uint32_t>(directory_.size()));
    for (const auto& [key, acct] : directory_) w.blob(acct.serialize());
    w.u32(static_cast<std::uint32_t>(log_.size()));
    for (const auto& rec : log_) {
        if (std::holds_alternative<GenesisRecord>(rec)) {
            w.byte(0);
            w.blob(std::get<GenesisRecord>(rec).serialize());
        } else {
            w.byte(1);
            w.blob(std::get<Transaction>(rec).serialize());
        }
    }
    w.u32(static_cast<std::uint32_t>(spent_.size()));
    for (const auto& q : spent_) w.bytes(q);
    return std::move(w.buf());
}

LedgerState LedgerState::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    auto magic = r.bytes(8);
    for (int i = 0; i < 8; i++)
        if (magic[i] != static_cast<std::uint8_t>(kLedgerMagic[i]))
            throw DecodeError(DecodeErrc::Malformed, "not a ledger file");
    if (r.u16() != kLedgerVersion)
        throw DecodeError(DecodeErrc::VersionMismatch, "unsupported ledger version");
    LedgerState st;
    std::uint32_t nd = r.u32();
    for (std::uint32_t i = 0; i < nd; i++) {
        LongTermAccount acct = LongTermAccount::deserialize(r.blob());
        if (!st.register_account(acct))
            throw DecodeError(DecodeErrc::Malformed, "duplicate directory entry");
    }
    std::uint32_t nl = r.u32();
    for (std::uint32_t i = 0; i < nl; i++) {
        std::uint8_t tag = r.byte();
        Bytes body = r.blob();
        if (tag == 0) st.append(GenesisRecord::deserialize(body));
        else if (tag == 1) st.append(Transaction::deserialize(body));
        else throw DecodeError(DecodeErrc::Malformed, "unknown log record tag");
    }
    std::uint32_t ns = r.u32();
    for (std::uint32_t i = 0; i < ns; i++) {
        auto q = r.bytes(G1Point::kBytes);
        AddressKey key;
        std::copy(q.begin(), q.end(), key.begin());
        st.spent_.insert(key);
    }
    r.expect_done();
    return st;
}

} // namespace sl::ledger

namespace sl::wire {

Bytes read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::fseek(f, 0, SEEK_END);
    long sz = std::ftell(f);
    std::fseek(f, 0, SEEK_SET);
    Bytes buf(static_cast<size_t>(sz));
    size_t got = sz > 0 ? std::fread(buf.data(), 1, buf.size(), f) : 0;
    std::fclose(f);
    if (got != buf.size()) throw std::runtime_error("short read: " + path);
    return buf;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write file: " + path);
    size_t put = std::fwrite(data.data(), 1, data.size(), f);
    std::fclose(f);
    if (put != data.size()) throw std::runtime_error("short write: " + path);
}

void save_params(const PublicParams& pp, const std::string& path) {
    write_file(path, pp.serialize());
}
PublicParams load_params(const std::string& path) {
    return PublicParams::deserialize(read_file(path));
}

void save_management_keys(const ledger::ManagementKeys& keys, const std::string& path) {
    write_file(path, keys.serialize());
}
ledger::ManagementKeys load_management_keys(const std::string& path) {
    return ledger::ManagementKeys::deserialize(read_file(path));
}

void save_public_keys(const ledger::PublicKeys& keys, const std::string& path) {
    write_file(path, keys.serialize());
}
ledger::PublicKeys load_public_keys(const std::string& path) {
    return ledger::PublicKeys::deserialize(read_file(path));
}

void save_user(const ledger::UserSecret& user, const std::string& path) {
    write_file(path, user.serialize());
}
ledger::UserSecret load_user(const std::string& path) {
    return ledger::UserSecret::deserialize(read_file(path));
}

void save_ledger(const ledger::LedgerState& state, const std::string& path) {
    write_file(path, state.serialize());
}
ledger::LedgerState load_ledger(const std::string& path) {
    return ledger::LedgerState::deserialize(read_file(path));
}

void save_tx(const ledger::Transaction& tx, const std::string& path) {
    write_file(path, tx.serialize());
}
ledger::Transaction load_tx(const std::string& path) {
    return ledger::Transaction::deserialize(read_file(path));
}

} // namespace sl::wire
