#include "sl/fp.hpp"

#include "sl/detail/limbs.hpp"

namespace sl {

using namespace sl::detail;

namespace {

constexpr u64 kMod[6] = {0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL,
                         0x6730d2a0f6b0f624ULL, 0x64774b84f38512bfULL,
                         0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL};
constexpr u64 kN0 = 0x89f3fffcfffcfffdULL;
constexpr u64 kR[6] = {0x760900000002fffdULL, 0xebf4000bc40c0002ULL,
                       0x5f48985753c758baULL, 0x77ce585370525745ULL,
                       0x5c071a97a256ec6dULL, 0x15f65ec3fa80e493ULL};
constexpr u64 kR2[6] = {0xf4df1f341c341746ULL, 0x0a76e6a609d104f1ULL,
                        0x8de5476c4c95b6d5ULL, 0x67eb88a9939d83c0ULL,
                        0x9a793e85b519952dULL, 0x11988fe592cae3aaULL};
// p - 2 (inversion exponent)
constexpr std::uint8_t kModMinus2[48] = {
    0x1a, 0x01, 0x11, 0xea, 0x39, 0x7f, 0xe6, 0x9a, 0x4b, 0x1b, 0xa7, 0xb6,
    0x43, 0x4b, 0xac, 0xd7, 0x64, 0x77, 0x4b, 0x84, 0xf3, 0x85, 0x12, 0xbf,
    0x67, 0x30, 0xd2, 0xa0, 0xf6, 0xb0, 0xf6, 0x24, 0x1e, 0xab, 0xff, 0xfe,
    0xb1, 0x53, 0xff, 0xff, 0xb9, 0xfe, 0xff, 0xff, 0xff, 0xff, 0xaa, 0xa9};
// (p + 1) / 4 (sqrt exponent, p = 3 mod 4)
constexpr std::uint8_t kSqrtExp[48] = {
    0x06, 0x80, 0x44, 0x7a, 0x8e, 0x5f, 0xf9, 0xa6, 0x92, 0xc6, 0xe9, 0xed,
    0x90, 0xd2, 0xeb, 0x35, 0xd9, 0x1d, 0xd2, 0xe1, 0x3c, 0xe1, 0x44, 0xaf,
    0xd9, 0xcc, 0x34, 0xa8, 0x3d, 0xac, 0x3d, 0x89, 0x07, 0xaa, 0xff, 0xff,
    0xac, 0x54, 0xff, 0xff, 0xee, 0x7f, 0xbf, 0xff, 0xff, 0xff, 0xea, 0xab};
// (p - 1) / 2 (Euler criterion)
constexpr std::uint8_t kLegendreExp[48] = {
    0x0d, 0x00, 0x88, 0xf5, 0x1c, 0xbf, 0xf3, 0x4d, 0x25, 0x8d, 0xd3, 0xdb,
    0x21, 0xa5, 0xd6, 0x6b, 0xb2, 0x3b, 0xa5, 0xc2, 0x79, 0xc2, 0x89, 0x5f,
    0xb3, 0x98, 0x69, 0x50, 0x7b, 0x58, 0x7b, 0x12, 0x0f, 0x55, 0xff, 0xff,
    0x58, 0xa9, 0xff, 0xff, 0xdc, 0xff, 0x7f, 0xff, 0xff, 0xff, 0xd5, 0x55};

} // namespace

Fp Fp::one() {
    Fp f;
    for (size_t i = 0; i < kLimbs; i++) f.l_[i] = kR[i];
    return f;
}

Fp Fp::from_u64(std::uint64_t v) {
    Fp f;
    u64 raw[6] = {v, 0, 0, 0, 0, 0};
    limbs_mont_mul<6>(f.l_.data(), raw, kR2, kMod, kN0);
    return f;
}

Fp Fp::from_bytes(std::span<const std::uint8_t> be48) {
    if (be48.size() != kBytes)
        throw DecodeError(DecodeErrc::WrongLength, "field element must be 48 bytes");
    u64 raw[6];
    limbs_from_be<6>(raw, be48.data());
    if (limbs_cmp<6>(raw, kMod) >= 0)
        throw DecodeError(DecodeErrc::NonCanonical, "field element not reduced");
    Fp f;
    limbs_mont_mul<6>(f.l_.data(), raw, kR2, kMod, kN0);
    return f;
}

Fp Fp::from_bytes_reduce(std::span<const std::uint8_t> be) {
    // Horner over bytes: r = r*256 + b (mod p)
    Fp acc = Fp::zero();
    Fp c256 = Fp::from_u64(256);
    for (std::uint8_t b : be) {
        acc = acc * c256 + Fp::from_u64(b);
    }
    return acc;
}

std::array<std::uint8_t, Fp::kBytes> Fp::to_bytes() const {
    u64 one_raw[6] = {1, 0, 0, 0, 0, 0};
    u64 plain[6];
    limbs_mont_mul<6>(plain, l_.data(), one_raw, kMod, kN0);
    std::array<std::uint8_t, kBytes> out;
    limbs_to_be<6>(out.data(), plain);
    return out;
}

Fp Fp::operator+(const Fp& o) const {
    Fp f;
    limbs_add_mod<6>(f.l_.data(), l_.data(), o.l_.data(), kMod);
    return f;
}

Fp Fp::operator-(const Fp& o) const {
    Fp f;
    limbs_sub_mod<6>(f.l_.data(), l_.data(), o.l_.data(), kMod);
    return f;
}

Fp Fp::operator*(const Fp& o) const {
    Fp f;
    limbs_mont_mul<6>(f.l_.data(), l_.data(), o.l_.data(), kMod, kN0);
    return f;
}

Fp Fp::operator-() const { return Fp::zero() - *this; }

Fp Fp::pow(std::span<const std::uint8_t> exp_be) const {
    Fp acc = Fp::one();
    for (std::uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = acc.square();
            if ((byte >> bit) & 1) acc = acc * *this;
        }
    }
    return acc;
}

Fp Fp::inverse() const { return pow(kModMinus2); }

std::optional<Fp> Fp::sqrt() const {
    Fp cand = pow(kSqrtExp);
    if (cand.square() == *this) return cand;
    return std::nullopt;
}

bool Fp::is_quadratic_residue() const {
    if (is_zero()) return true;
    return pow(kLegendreExp) == Fp::one();
}

bool Fp::is_zero() const { return limbs_is_zero<6>(l_.data()); }

bool Fp::operator==(const Fp& o) const { return limbs_eq<6>(l_.data(), o.l_.data()); }

int Fp::cmp(const Fp& o) const {
    u64 one_raw[6] = {1, 0, 0, 0, 0, 0};
    u64 a[6], b[6];
    limbs_mont_mul<6>(a, l_.data(), one_raw, kMod, kN0);
    limbs_mont_mul<6>(b, o.l_.data(), one_raw, kMod, kN0);
    return limbs_cmp<6>(a, b);
}

} // namespace sl
