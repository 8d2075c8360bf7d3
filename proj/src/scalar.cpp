#include "sl/scalar.hpp"

#include "sl/detail/limbs.hpp"

namespace sl {

using namespace sl::detail;

namespace {

// q = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
constexpr u64 kMod[4] = {0xffffffff00000001ULL, 0x53bda402fffe5bfeULL,
                         0x3339d80809a1d805ULL, 0x73eda753299d7d48ULL};
constexpr u64 kN0 = 0xfffffffeffffffffULL;
// R = 2^256 mod q
constexpr u64 kR[4] = {0x00000001fffffffeULL, 0x5884b7fa00034802ULL,
                       0x998c4fefecbc4ff5ULL, 0x1824b159acc5056fULL};
// R^2 mod q
constexpr u64 kR2[4] = {0xc999e990f3f29c6dULL, 0x2b6cedcb87925c23ULL,
                        0x05d314967254398fULL, 0x0748d9d99f59ff11ULL};
// q - 2, big-endian, for Fermat inversion
constexpr std::uint8_t kModMinus2[32] = {
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
    0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
    0x5b, 0xfe, 0xff, 0xff, 0xff, 0xfe, 0xff, 0xff, 0xff, 0xff};

} // namespace

Scalar Scalar::one() {
    Scalar s;
    for (size_t i = 0; i < kLimbs; i++) s.l_[i] = kR[i];
    return s;
}

Scalar Scalar::from_u64(std::uint64_t v) {
    Scalar s;
    u64 raw[4] = {v, 0, 0, 0};
    limbs_mont_mul<4>(s.l_.data(), raw, kR2, kMod, kN0);
    return s;
}

Scalar Scalar::from_bytes(std::span<const std::uint8_t> be32) {
    if (be32.size() != kBytes)
        throw DecodeError(DecodeErrc::WrongLength, "scalar must be 32 bytes");
    u64 raw[4];
    limbs_from_be<4>(raw, be32.data());
    if (limbs_cmp<4>(raw, kMod) >= 0)
        throw DecodeError(DecodeErrc::NonCanonical, "scalar not reduced");
    Scalar s;
    limbs_mont_mul<4>(s.l_.data(), raw, kR2, kMod, kN0);
    return s;
}

Scalar Scalar::from_bytes_wide(std::span<const std::uint8_t> be64) {
    if (be64.size() != 64)
        throw DecodeError(DecodeErrc::WrongLength, "wide scalar input must be 64 bytes");
    // split hi*2^256 + lo; result = hi*R^2 + lo*R (Montgomery-multiplied by R^2 / R)
    u64 hi[4], lo[4];
    limbs_from_be<4>(hi, be64.data());
    limbs_from_be<4>(lo, be64.data() + 32);
    u64 hi_m[4], lo_m[4];
    limbs_mont_mul<4>(lo_m, lo, kR2, kMod, kN0); // lo in Montgomery form
    u64 r3[4];
    limbs_mont_mul<4>(r3, kR2, kR2, kMod, kN0); // R^3/R = R^2... stays R^2 in plain form
    limbs_mont_mul<4>(hi_m, hi, r3, kMod, kN0); // hi * 2^256 in Montgomery form
    Scalar s;
    limbs_add_mod<4>(s.l_.data(), hi_m, lo_m, kMod);
    return s;
}

Scalar Scalar::random(RandomSource& rng) {
    std::array<std::uint8_t, 64> buf;
    rng.fill(buf);
    return from_bytes_wide(buf);
}

Scalar Scalar::random_nonzero(RandomSource& rng) {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

std::array<std::uint8_t, Scalar::kBytes> Scalar::to_bytes() const {
    // out of Montgomery form: multiply by 1
    u64 one_raw[4] = {1, 0, 0, 0};
    u64 plain[4];
    limbs_mont_mul<4>(plain, l_.data(), one_raw, kMod, kN0);
    std::array<std::uint8_t, kBytes> out;
    limbs_to_be<4>(out.data(), plain);
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar s;
    limbs_add_mod<4>(s.l_.data(), l_.data(), o.l_.data(), kMod);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar s;
    limbs_sub_mod<4>(s.l_.data(), l_.data(), o.l_.data(), kMod);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar s;
    limbs_mont_mul<4>(s.l_.data(), l_.data(), o.l_.data(), kMod, kN0);
    return s;
}

Scalar Scalar::operator-() const { return Scalar::zero() - *this; }

Scalar Scalar::pow(std::span<const std::uint8_t> exp_be) const {
    Scalar acc = Scalar::one();
    for (std::uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = acc.square();
            if ((byte >> bit) & 1) acc = acc * *this;
        }
    }
    return acc;
}

Scalar Scalar::inverse() const { return pow(kModMinus2); }

bool Scalar::is_zero() const { return limbs_is_zero<4>(l_.data()); }

bool Scalar::operator==(const Scalar& o) const { return limbs_eq<4>(l_.data(), o.l_.data()); }

std::array<std::uint64_t, Scalar::kLimbs> Scalar::plain_limbs() const {
    u64 one_raw[4] = {1, 0, 0, 0};
    std::array<std::uint64_t, kLimbs> plain;
    limbs_mont_mul<4>(plain.data(), l_.data(), one_raw, kMod, kN0);
    return plain;
}

std::array<std::uint8_t, Scalar::kBytes> Scalar::order_bytes() {
    std::array<std::uint8_t, kBytes> out;
    limbs_to_be<4>(out.data(), kMod);
    return out;
}

} // namespace sl
