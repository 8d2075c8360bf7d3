#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl {

using Bytes = std::vector<std::uint8_t>;

enum class DecodeErrc {
    WrongLength,
    NotOnCurve,
    NotInSubgroup,
    NonCanonical,
    Truncated,
    VersionMismatch,
    Malformed,
};

class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeErrc errc, const std::string& what)
        : std::runtime_error(what), errc_(errc) {}
    DecodeErrc errc() const { return errc_; }

private:
    DecodeErrc errc_;
};

inline const char* decode_errc_name(DecodeErrc e) {
    switch (e) {
        case DecodeErrc::WrongLength: return "wrong-length";
        case DecodeErrc::NotOnCurve: return "not-on-curve";
        case DecodeErrc::NotInSubgroup: return "not-in-subgroup";
        case DecodeErrc::NonCanonical: return "non-canonical";
        case DecodeErrc::Truncated: return "truncated";
        case DecodeErrc::VersionMismatch: return "version-mismatch";
        case DecodeErrc::Malformed: return "malformed";
    }
    return "unknown";
}

// Append-only byte sink used by all wire formats.
class Writer {
public:
    Bytes& buf() { return out_; }
    const Bytes& buf() const { return out_; }

    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void byte(std::uint8_t b) { out_.push_back(b); }
    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        for (int i = 3; i >= 0; i--) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 7; i >= 0; i--) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    // length-prefixed blob
    void blob(std::span<const std::uint8_t> b) {
        u32(static_cast<std::uint32_t>(b.size()));
        bytes(b);
    }

private:
    Bytes out_;
};

// Bounds-checked cursor over an input buffer.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    size_t remaining() const { return in_.size() - pos_; }
    bool done() const { return pos_ == in_.size(); }

    std::span<const std::uint8_t> bytes(size_t n) {
        if (remaining() < n) throw DecodeError(DecodeErrc::Truncated, "input truncated");
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::uint8_t byte() { return bytes(1)[0]; }
    std::uint16_t u16() {
        auto b = bytes(2);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }
    std::uint32_t u32() {
        auto b = bytes(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; i++) v = (v << 8) | b[i];
        return v;
    }
    std::uint64_t u64() {
        auto b = bytes(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; i++) v = (v << 8) | b[i];
        return v;
    }
    Bytes blob() {
        auto n = u32();
        auto b = bytes(n);
        return Bytes(b.begin(), b.end());
    }
    void expect_done() const {
        if (!done()) throw DecodeError(DecodeErrc::Malformed, "trailing bytes");
    }

private:
    std::span<const std::uint8_t> in_;
    size_t pos_ = 0;
};

} // namespace sl
