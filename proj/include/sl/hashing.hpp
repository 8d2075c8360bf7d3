#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sl/g1.hpp"
#include "sl/scalar.hpp"

namespace sl {

// Length-prefixed, domain-tagged hashing. Distinct tags behave as
// independent random oracles; parts cannot be re-split ambiguously.

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 64> sha512(std::span<const std::uint8_t> data);

using HashParts = std::vector<Bytes>;

Scalar hash_to_scalar(std::string_view domain_tag, const HashParts& parts);

// deterministic try-and-increment map onto the prime-order subgroup
G1Point hash_to_g1(std::string_view domain_tag, const HashParts& parts);

// transcript helper: accumulates parts, derives successive challenges
class Transcript {
public:
    explicit Transcript(std::string_view tag) : tag_(tag) {}

    void append(Bytes b) { parts_.push_back(std::move(b)); }
    void append(std::span<const std::uint8_t> b) { parts_.emplace_back(b.begin(), b.end()); }
    void append_point(const G1Point& p) {
        auto b = p.to_bytes();
        parts_.emplace_back(b.begin(), b.end());
    }
    void append_scalar(const Scalar& s) {
        auto b = s.to_bytes();
        parts_.emplace_back(b.begin(), b.end());
    }
    void append_label(std::string_view lbl) {
        parts_.emplace_back(lbl.begin(), lbl.end());
    }

    Scalar challenge() const { return hash_to_scalar(tag_, parts_); }

private:
    std::string tag_;
    HashParts parts_;
};

} // namespace sl
