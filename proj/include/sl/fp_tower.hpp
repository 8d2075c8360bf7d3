#pragma once

#include <span>

#include "sl/fp.hpp"

// Extension tower Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - xi) with xi = 1+u,
// Fp12 = Fp6[w]/(w^2 - v).

namespace sl {

struct Fp2 {
    Fp c0, c1;

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }
    static Fp2 xi() { return {Fp::one(), Fp::one()}; }

    Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp2 operator-() const { return {-c0, -c1}; }
    Fp2 operator*(const Fp2& o) const;
    Fp2 square() const;
    Fp2 dbl() const { return *this + *this; }
    Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }
    Fp2 mul_xi() const { return {c0 - c1, c0 + c1}; }
    Fp2 inverse() const;
    Fp2 conjugate() const { return {c0, -c1}; }
    std::optional<Fp2> sqrt() const;

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }
    // lexicographic on (c1, c0)
    int cmp_lex(const Fp2& o) const {
        int c = c1.cmp(o.c1);
        return c != 0 ? c : c0.cmp(o.c0);
    }
};

struct Fp6 {
    Fp2 c0, c1, c2; // c0 + c1 v + c2 v^2

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }
    Fp6 operator*(const Fp6& o) const;
    Fp6 square() const { return *this * *this; }
    Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }
    Fp6 mul_v() const { return {c2.mul_xi(), c0, c1}; }
    Fp6 inverse() const;

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Fp6& o) const { return !(*this == o); }
};

struct Fp12 {
    Fp6 c0, c1; // c0 + c1 w

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    Fp12 operator+(const Fp12& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp12 operator-(const Fp12& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp12 operator*(const Fp12& o) const;
    Fp12 square() const;
    Fp12 inverse() const;
    Fp12 conjugate() const { return {c0, -c1}; }
    Fp12 frobenius() const;  // x -> x^p
    Fp12 frobenius2() const; // x -> x^(p^2)
    Fp12 pow(std::span<const std::uint8_t> exp_be) const;
    // x -> x^z for the curve parameter z (z < 0 folded in via conjugation)
    Fp12 pow_z() const;

    // multiply by a sparse line value l0 + l3 v w + l5 v^2 w (l0 in Fp)
    Fp12 mul_by_line(const Fp& l0, const Fp2& l3, const Fp2& l5) const;

    bool is_one() const { return *this == one(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp12& o) const { return !(*this == o); }
};

} // namespace sl
