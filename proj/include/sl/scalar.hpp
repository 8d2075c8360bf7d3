#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "sl/encoding.hpp"
#include "sl/rng.hpp"

namespace sl {

// Element of the scalar field Z_q (q = group order, 255 bits).
// Stored in Montgomery form; canonical encoding is 32 bytes big-endian.
class Scalar {
public:
    static constexpr size_t kLimbs = 4;
    static constexpr size_t kBytes = 32;

    Scalar() : l_{0, 0, 0, 0} {}

    static Scalar zero() { return Scalar(); }
    static Scalar one();
    static Scalar from_u64(std::uint64_t v);
    // canonical decode, rejects values >= q
    static Scalar from_bytes(std::span<const std::uint8_t> be32);
    // 64-byte wide reduction mod q (hashing / unbiased sampling)
    static Scalar from_bytes_wide(std::span<const std::uint8_t> be64);
    static Scalar random(RandomSource& rng);
    static Scalar random_nonzero(RandomSource& rng);

    std::array<std::uint8_t, kBytes> to_bytes() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar square() const { return *this * *this; }
    // multiplicative inverse; inverse of zero is zero
    Scalar inverse() const;
    Scalar pow(std::span<const std::uint8_t> exp_be) const;

    bool is_zero() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // order of the group, big-endian
    static std::array<std::uint8_t, kBytes> order_bytes();

    // raw Montgomery limbs (little-endian); internal use and tests
    const std::uint64_t* limbs() const { return l_.data(); }
    // de-Montgomerized little-endian limbs (scalar-mult digit extraction)
    std::array<std::uint64_t, kLimbs> plain_limbs() const;

private:
    std::array<std::uint64_t, kLimbs> l_;
};

} // namespace sl
