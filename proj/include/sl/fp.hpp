#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "sl/encoding.hpp"

namespace sl {

// Element of the 381-bit base field. Montgomery form, 48-byte big-endian encoding.
class Fp {
public:
    static constexpr size_t kLimbs = 6;
    static constexpr size_t kBytes = 48;

    Fp() : l_{} {}

    static Fp zero() { return Fp(); }
    static Fp one();
    static Fp from_u64(std::uint64_t v);
    static Fp from_bytes(std::span<const std::uint8_t> be48); // rejects >= p
    // reduce arbitrary big-endian input mod p (hash-to-field)
    static Fp from_bytes_reduce(std::span<const std::uint8_t> be);

    std::array<std::uint8_t, kBytes> to_bytes() const;

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;

    Fp square() const { return *this * *this; }
    Fp dbl() const { return *this + *this; }
    Fp inverse() const; // inverse of zero is zero
    Fp pow(std::span<const std::uint8_t> exp_be) const;
    // square root for p = 3 mod 4; nullopt when not a QR
    std::optional<Fp> sqrt() const;
    bool is_quadratic_residue() const;

    bool is_zero() const;
    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }
    // compare canonical integer values (serialization sort flag)
    int cmp(const Fp& o) const;

    const std::uint64_t* limbs() const { return l_.data(); }

private:
    std::array<std::uint64_t, kLimbs> l_;
};

} // namespace sl
