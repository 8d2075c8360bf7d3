#pragma once

#include <cstdint>
#include <cstddef>

// Fixed-width little-endian limb arithmetic shared by the two prime fields.

namespace sl::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// a + b*c + carry -> low word, carry updated
inline u64 mac(u64 a, u64 b, u64 c, u64& carry) {
    u128 t = static_cast<u128>(b) * c + a + carry;
    carry = static_cast<u64>(t >> 64);
    return static_cast<u64>(t);
}

inline u64 adc(u64 a, u64 b, u64& carry) {
    u128 t = static_cast<u128>(a) + b + carry;
    carry = static_cast<u64>(t >> 64);
    return static_cast<u64>(t);
}

inline u64 sbb(u64 a, u64 b, u64& borrow) {
    u128 t = static_cast<u128>(a) - b - borrow;
    borrow = (t >> 64) ? 1 : 0;
    return static_cast<u64>(t);
}

template <size_t N>
inline bool limbs_eq(const u64* a, const u64* b) {
    u64 d = 0;
    for (size_t i = 0; i < N; i++) d |= a[i] ^ b[i];
    return d == 0;
}

template <size_t N>
inline bool limbs_is_zero(const u64* a) {
    u64 d = 0;
    for (size_t i = 0; i < N; i++) d |= a[i];
    return d == 0;
}

// -1 / 0 / +1 comparison, most-significant limb first
template <size_t N>
inline int limbs_cmp(const u64* a, const u64* b) {
    for (size_t i = N; i-- > 0;) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

// out = a + b mod m  (inputs reduced)
template <size_t N>
inline void limbs_add_mod(u64* out, const u64* a, const u64* b, const u64* m) {
    u64 t[N + 1];
    u64 carry = 0;
    for (size_t i = 0; i < N; i++) t[i] = adc(a[i], b[i], carry);
    t[N] = carry;
    u64 s[N];
    u64 borrow = 0;
    for (size_t i = 0; i < N; i++) s[i] = sbb(t[i], m[i], borrow);
    bool keep_sum = (t[N] == 0) && (borrow != 0);
    for (size_t i = 0; i < N; i++) out[i] = keep_sum ? t[i] : s[i];
}

// out = a - b mod m  (inputs reduced)
template <size_t N>
inline void limbs_sub_mod(u64* out, const u64* a, const u64* b, const u64* m) {
    u64 t[N];
    u64 borrow = 0;
    for (size_t i = 0; i < N; i++) t[i] = sbb(a[i], b[i], borrow);
    if (borrow) {
        u64 carry = 0;
        for (size_t i = 0; i < N; i++) t[i] = adc(t[i], m[i], carry);
    }
    for (size_t i = 0; i < N; i++) out[i] = t[i];
}

// CIOS Montgomery multiplication: out = a*b*R^-1 mod m, R = 2^(64N).
// Requires m < 2^(64N-1) so a single final subtraction suffices.
template <size_t N>
inline void limbs_mont_mul(u64* out, const u64* a, const u64* b, const u64* m, u64 n0) {
    u64 t[N + 2] = {0};
    for (size_t i = 0; i < N; i++) {
        u64 carry = 0;
        for (size_t j = 0; j < N; j++) t[j] = mac(t[j], a[i], b[j], carry);
        u64 carry2 = 0;
        t[N] = adc(t[N], carry, carry2);
        t[N + 1] = carry2;

        u64 k = t[0] * n0;
        carry = 0;
        (void)mac(t[0], k, m[0], carry);
        for (size_t j = 1; j < N; j++) t[j - 1] = mac(t[j], k, m[j], carry);
        carry2 = 0;
        t[N - 1] = adc(t[N], carry, carry2);
        t[N] = t[N + 1] + carry2;
        t[N + 1] = 0;
    }
    u64 s[N];
    u64 borrow = 0;
    for (size_t i = 0; i < N; i++) s[i] = sbb(t[i], m[i], borrow);
    bool keep_t = (t[N] == 0) && (borrow != 0);
    for (size_t i = 0; i < N; i++) out[i] = keep_t ? t[i] : s[i];
}

// big-endian byte IO (width = 8N bytes)
template <size_t N>
inline void limbs_from_be(u64* out, const std::uint8_t* bytes) {
    for (size_t i = 0; i < N; i++) {
        u64 w = 0;
        for (size_t j = 0; j < 8; j++) w = (w << 8) | bytes[(N - 1 - i) * 8 + j];
        out[i] = w;
    }
}

template <size_t N>
inline void limbs_to_be(std::uint8_t* bytes, const u64* a) {
    for (size_t i = 0; i < N; i++) {
        u64 w = a[N - 1 - i];
        for (size_t j = 0; j < 8; j++) bytes[i * 8 + j] = static_cast<std::uint8_t>(w >> (56 - 8 * j));
    }
}

} // namespace sl::detail
