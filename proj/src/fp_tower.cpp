#include "sl/fp_tower.hpp"

#include <mutex>

namespace sl {

Fp2 Fp2::operator*(const Fp2& o) const {
    Fp m0 = c0 * o.c0;
    Fp m1 = c1 * o.c1;
    Fp m2 = (c0 + c1) * (o.c0 + o.c1);
    return {m0 - m1, m2 - m0 - m1};
}

Fp2 Fp2::square() const {
    Fp re = (c0 + c1) * (c0 - c1);
    Fp im = (c0 * c1).dbl();
    return {re, im};
}

Fp2 Fp2::inverse() const {
    Fp d = (c0.square() + c1.square()).inverse();
    return {c0 * d, -(c1 * d)};
}

std::optional<Fp2> Fp2::sqrt() const {
    // complex method for p = 3 mod 4; candidate verified by squaring
    if (c1.is_zero()) {
        if (auto s = c0.sqrt()) return Fp2{*s, Fp::zero()};
        if (auto s = (-c0).sqrt()) return Fp2{Fp::zero(), *s};
        return std::nullopt;
    }
    Fp norm = c0.square() + c1.square();
    auto d = norm.sqrt();
    if (!d) return std::nullopt;
    Fp half = Fp::from_u64(2).inverse();
    Fp re2 = (c0 + *d) * half;
    auto re = re2.sqrt();
    if (!re) {
        re2 = (c0 - *d) * half;
        re = re2.sqrt();
        if (!re) return std::nullopt;
    }
    Fp im = c1 * half * re->inverse();
    Fp2 cand{*re, im};
    if (cand.square() == *this) return cand;
    return std::nullopt;
}

Fp6 Fp6::operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0;
    Fp2 t1 = c1 * o.c1;
    Fp2 t2 = c2 * o.c2;
    Fp2 r0 = t0 + ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_xi();
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
}

Fp6 Fp6::inverse() const {
    Fp2 a0 = c0.square() - (c1 * c2).mul_xi();
    Fp2 a1 = c2.square().mul_xi() - c0 * c1;
    Fp2 a2 = c1.square() - c0 * c2;
    Fp2 t = (c0 * a0 + ((c1 * a2 + c2 * a1)).mul_xi()).inverse();
    return {a0 * t, a1 * t, a2 * t};
}

Fp12 Fp12::operator*(const Fp12& o) const {
    Fp6 t0 = c0 * o.c0;
    Fp6 t1 = c1 * o.c1;
    Fp6 r0 = t0 + t1.mul_v();
    Fp6 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1;
    return {r0, r1};
}

Fp12 Fp12::square() const {
    // complex squaring over Fp6
    Fp6 ab = c0 * c1;
    Fp6 t = (c0 + c1) * (c0 + c1.mul_v());
    Fp6 r0 = t - ab - ab.mul_v();
    Fp6 r1 = ab + ab;
    return {r0, r1};
}

Fp12 Fp12::inverse() const {
    Fp6 d = (c0.square() - c1.square().mul_v()).inverse();
    return {c0 * d, -(c1 * d)};
}

namespace {

// Frobenius coefficients gamma1[m] = xi^(m (p-1)/6) and gamma2[m] = gamma1[m]^(p+1),
// indexed by the flat w-degree m = 2k + j of each tower coefficient.
struct FrobTables {
    Fp2 g1[6];
    Fp2 g2[6];
};

const FrobTables& frob_tables() {
    static FrobTables tbl;
    static std::once_flag once;
    std::call_once(once, [] {
        static const std::uint8_t kExp[48] = {
            0x04, 0x55, 0x82, 0xfc, 0x5e, 0xea, 0xa6, 0x6f, 0x0c, 0x84, 0x9b, 0xf3,
            0xb5, 0xe1, 0xf2, 0x23, 0xe6, 0x13, 0xe1, 0xeb, 0x7d, 0xeb, 0x83, 0x1f,
            0xe6, 0x88, 0x23, 0x1a, 0xd3, 0xc8, 0x29, 0x06, 0x05, 0x1c, 0xaa, 0xaa,
            0x72, 0xe3, 0x55, 0x55, 0x49, 0xaa, 0x7f, 0xff, 0xff, 0xff, 0xf1, 0xc7};
        // base = xi^((p-1)/6) computed by square-and-multiply in Fp2
        Fp2 base = Fp2::one();
        Fp2 x = Fp2::xi();
        for (std::uint8_t byte : kExp) {
            for (int bit = 7; bit >= 0; bit--) {
                base = base.square();
                if ((byte >> bit) & 1) base = base * x;
            }
        }
        tbl.g1[0] = Fp2::one();
        for (int m = 1; m < 6; m++) tbl.g1[m] = tbl.g1[m - 1] * base;
        for (int m = 0; m < 6; m++) tbl.g2[m] = tbl.g1[m].conjugate() * tbl.g1[m];
    });
    return tbl;
}

} // namespace

Fp12 Fp12::frobenius() const {
    const auto& t = frob_tables();
    Fp12 r;
    r.c0.c0 = c0.c0.conjugate() * t.g1[0];
    r.c0.c1 = c0.c1.conjugate() * t.g1[2];
    r.c0.c2 = c0.c2.conjugate() * t.g1[4];
    r.c1.c0 = c1.c0.conjugate() * t.g1[1];
    r.c1.c1 = c1.c1.conjugate() * t.g1[3];
    r.c1.c2 = c1.c2.conjugate() * t.g1[5];
    return r;
}

Fp12 Fp12::frobenius2() const {
    const auto& t = frob_tables();
    Fp12 r;
    r.c0.c0 = c0.c0 * t.g2[0];
    r.c0.c1 = c0.c1 * t.g2[2];
    r.c0.c2 = c0.c2 * t.g2[4];
    r.c1.c0 = c1.c0 * t.g2[1];
    r.c1.c1 = c1.c1 * t.g2[3];
    r.c1.c2 = c1.c2 * t.g2[5];
    return r;
}

Fp12 Fp12::pow(std::span<const std::uint8_t> exp_be) const {
    Fp12 acc = Fp12::one();
    for (std::uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; bit--) {
            acc = acc.square();
            if ((byte >> bit) & 1) acc = acc * *this;
        }
    }
    return acc;
}

Fp12 Fp12::pow_z() const {
    // |z| = 0xd201000000010000; z is negative so conjugate at the end
    // (valid for cyclotomic-subgroup elements, the only callers)
    constexpr std::uint64_t kAbsZ = 0xd201000000010000ULL;
    Fp12 acc = *this;
    for (int bit = 62; bit >= 0; bit--) {
        acc = acc.square();
        if ((kAbsZ >> bit) & 1) acc = acc * *this;
    }
    return acc.conjugate();
}

Fp12 Fp12::mul_by_line(const Fp& l0, const Fp2& l3, const Fp2& l5) const {
    Fp12 line;
    line.c0.c0 = Fp2{l0, Fp::zero()};
    line.c1.c1 = l3;
    line.c1.c2 = l5;
    return *this * line;
}

} // namespace sl
