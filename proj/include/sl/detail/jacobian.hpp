#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Jacobian-coordinate short-Weierstrass arithmetic (a = 0), shared by both
// source groups. Z = 0 encodes the identity.

namespace sl::detail {

template <class F>
struct Jac {
    F X, Y, Z;

    static Jac identity() { return {F::one(), F::one(), F::zero()}; }
    bool is_identity() const { return Z.is_zero(); }
};

template <class F>
inline Jac<F> jac_dbl(const Jac<F>& P) {
    if (P.is_identity()) return P;
    F A = P.X.square();
    F B = P.Y.square();
    F C = B.square();
    F D = ((P.X + B).square() - A - C).dbl();
    F E = A + A + A;
    F Fq = E.square();
    F X3 = Fq - D.dbl();
    F Y3 = E * (D - X3) - C.dbl().dbl().dbl();
    F Z3 = (P.Y * P.Z).dbl();
    return {X3, Y3, Z3};
}

template <class F>
inline Jac<F> jac_add(const Jac<F>& P, const Jac<F>& Q) {
    if (P.is_identity()) return Q;
    if (Q.is_identity()) return P;
    F Z1Z1 = P.Z.square();
    F Z2Z2 = Q.Z.square();
    F U1 = P.X * Z2Z2;
    F U2 = Q.X * Z1Z1;
    F S1 = P.Y * Q.Z * Z2Z2;
    F S2 = Q.Y * P.Z * Z1Z1;
    if (U1 == U2) {
        if (S1 == S2) return jac_dbl(P);
        return Jac<F>::identity();
    }
    F H = U2 - U1;
    F I = H.dbl().square();
    F J = H * I;
    F r = (S2 - S1).dbl();
    F V = U1 * I;
    F X3 = r.square() - J - V.dbl();
    F Y3 = r * (V - X3) - (S1 * J).dbl();
    F Z3 = ((P.Z + Q.Z).square() - Z1Z1 - Z2Z2) * H;
    return {X3, Y3, Z3};
}

// Q affine (x, y), not identity
template <class F>
inline Jac<F> jac_add_affine(const Jac<F>& P, const F& qx, const F& qy) {
    if (P.is_identity()) return {qx, qy, F::one()};
    F Z1Z1 = P.Z.square();
    F U2 = qx * Z1Z1;
    F S2 = qy * P.Z * Z1Z1;
    if (P.X == U2) {
        if (P.Y == S2) return jac_dbl(P);
        return Jac<F>::identity();
    }
    F H = U2 - P.X;
    F I = H.dbl().square();
    F J = H * I;
    F r = (S2 - P.Y).dbl();
    F V = P.X * I;
    F X3 = r.square() - J - V.dbl();
    F Y3 = r * (V - X3) - (P.Y * J).dbl();
    F Z3 = (P.Z * H).dbl();
    return {X3, Y3, Z3};
}

template <class F>
inline Jac<F> jac_neg(const Jac<F>& P) {
    return {P.X, -P.Y, P.Z};
}

template <class F>
inline bool jac_eq(const Jac<F>& P, const Jac<F>& Q) {
    bool pi = P.is_identity(), qi = Q.is_identity();
    if (pi || qi) return pi == qi;
    F Z1Z1 = P.Z.square();
    F Z2Z2 = Q.Z.square();
    if (!(P.X * Z2Z2 == Q.X * Z1Z1)) return false;
    return P.Y * Z2Z2 * Q.Z == Q.Y * Z1Z1 * P.Z;
}

// normalize many points with a single inversion (Montgomery's trick);
// identity maps to (0, 0).
template <class F>
inline void jac_batch_normalize(const Jac<F>* in, size_t n, F* out_x, F* out_y) {
    std::vector<F> prods(n);
    F run = F::one();
    for (size_t i = 0; i < n; i++) {
        prods[i] = run;
        if (!in[i].is_identity()) run = run * in[i].Z;
    }
    F inv = run.inverse();
    for (size_t i = n; i-- > 0;) {
        if (in[i].is_identity()) {
            out_x[i] = F::zero();
            out_y[i] = F::zero();
            continue;
        }
        F zinv = inv * prods[i];
        inv = inv * in[i].Z;
        F zi2 = zinv.square();
        out_x[i] = in[i].X * zi2;
        out_y[i] = in[i].Y * zi2 * zinv;
    }
}

// w=4 signed windows (wNAF) from plain 256-bit little-endian limbs
inline std::vector<int8_t> wnaf4(const std::array<std::uint64_t, 4>& v) {
    std::array<std::uint64_t, 5> k = {v[0], v[1], v[2], v[3], 0};
    std::vector<int8_t> naf;
    naf.reserve(260);
    auto is_zero = [&] {
        return !(k[0] | k[1] | k[2] | k[3] | k[4]);
    };
    auto shr1 = [&] {
        for (int i = 0; i < 4; i++) k[i] = (k[i] >> 1) | (k[i + 1] << 63);
        k[4] >>= 1;
    };
    while (!is_zero()) {
        int8_t d = 0;
        if (k[0] & 1) {
            d = static_cast<int8_t>(k[0] & 0x1f);
            if (d > 16) d -= 32;
            // subtract d (add when d negative)
            if (d > 0) {
                std::uint64_t borrow = static_cast<std::uint64_t>(d), t;
                for (int i = 0; i < 5 && borrow; i++) {
                    t = k[i];
                    k[i] = t - borrow;
                    borrow = (k[i] > t) ? 1 : 0;
                }
            } else {
                std::uint64_t carry = static_cast<std::uint64_t>(-d), t;
                for (int i = 0; i < 5 && carry; i++) {
                    t = k[i];
                    k[i] = t + carry;
                    carry = (k[i] < t) ? 1 : 0;
                }
            }
        }
        naf.push_back(d);
        shr1();
    }
    return naf;
}

// variable-base scalar multiplication via wNAF, given plain limbs
template <class F>
inline Jac<F> jac_mul(const Jac<F>& P, const std::array<std::uint64_t, 4>& plain) {
    if (P.is_identity()) return P;
    auto naf = wnaf4(plain);
    if (naf.empty()) return Jac<F>::identity();
    // odd multiples P, 3P, ..., 15P
    Jac<F> tbl[8];
    tbl[0] = P;
    Jac<F> twoP = jac_dbl(P);
    for (int i = 1; i < 8; i++) tbl[i] = jac_add(tbl[i - 1], twoP);
    Jac<F> acc = Jac<F>::identity();
    for (size_t i = naf.size(); i-- > 0;) {
        acc = jac_dbl(acc);
        int8_t d = naf[i];
        if (d > 0) acc = jac_add(acc, tbl[(d - 1) / 2]);
        else if (d < 0) acc = jac_add(acc, jac_neg(tbl[(-d - 1) / 2]));
    }
    return acc;
}

// double-and-add over big-endian bytes (subgroup checks, cofactor clearing)
template <class F>
inline Jac<F> jac_mul_bytes(const Jac<F>& P, const std::uint8_t* bytes, size_t len) {
    Jac<F> acc = Jac<F>::identity();
    for (size_t i = 0; i < len; i++) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = jac_dbl(acc);
            if ((bytes[i] >> bit) & 1) acc = jac_add(acc, P);
        }
    }
    return acc;
}

} // namespace sl::detail
