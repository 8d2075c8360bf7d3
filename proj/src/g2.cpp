#include "sl/g2.hpp"

namespace sl {

using detail::Jac;

namespace {

constexpr std::uint8_t kFlagCompressed = 0x80;
constexpr std::uint8_t kFlagInfinity = 0x40;
constexpr std::uint8_t kFlagSort = 0x20;

const std::uint8_t kGenXc0[48] = {
    0x02, 0x4a, 0xa2, 0xb2, 0xf0, 0x8f, 0x0a, 0x91, 0x26, 0x08, 0x05, 0x27,
    0x2d, 0xc5, 0x10, 0x51, 0xc6, 0xe4, 0x7a, 0xd4, 0xfa, 0x40, 0x3b, 0x02,
    0xb4, 0x51, 0x0b, 0x64, 0x7a, 0xe3, 0xd1, 0x77, 0x0b, 0xac, 0x03, 0x26,
    0xa8, 0x05, 0xbb, 0xef, 0xd4, 0x80, 0x56, 0xc8, 0xc1, 0x21, 0xbd, 0xb8};
const std::uint8_t kGenXc1[48] = {
    0x13, 0xe0, 0x2b, 0x60, 0x52, 0x71, 0x9f, 0x60, 0x7d, 0xac, 0xd3, 0xa0,
    0x88, 0x27, 0x4f, 0x65, 0x59, 0x6b, 0xd0, 0xd0, 0x99, 0x20, 0xb6, 0x1a,
    0xb5, 0xda, 0x61, 0xbb, 0xdc, 0x7f, 0x50, 0x49, 0x33, 0x4c, 0xf1, 0x12,
    0x13, 0x94, 0x5d, 0x57, 0xe5, 0xac, 0x7d, 0x05, 0x5d, 0x04, 0x2b, 0x7e};
const std::uint8_t kGenYc0[48] = {
    0x0c, 0xe5, 0xd5, 0x27, 0x72, 0x7d, 0x6e, 0x11, 0x8c, 0xc9, 0xcd, 0xc6,
    0xda, 0x2e, 0x35, 0x1a, 0xad, 0xfd, 0x9b, 0xaa, 0x8c, 0xbd, 0xd3, 0xa7,
    0x6d, 0x42, 0x9a, 0x69, 0x51, 0x60, 0xd1, 0x2c, 0x92, 0x3a, 0xc9, 0xcc,
    0x3b, 0xac, 0xa2, 0x89, 0xe1, 0x93, 0x54, 0x86, 0x08, 0xb8, 0x28, 0x01};
const std::uint8_t kGenYc1[48] = {
    0x06, 0x06, 0xc4, 0xa0, 0x2e, 0xa7, 0x34, 0xcc, 0x32, 0xac, 0xd2, 0xb0,
    0x2b, 0xc2, 0x8b, 0x99, 0xcb, 0x3e, 0x28, 0x7e, 0x85, 0xa7, 0x63, 0xaf,
    0x26, 0x74, 0x92, 0xab, 0x57, 0x2e, 0x99, 0xab, 0x3f, 0x37, 0x0d, 0x27,
    0x5c, 0xec, 0x1d, 0xa1, 0xaa, 0xa9, 0x07, 0x5f, 0xf0, 0x5f, 0x79, 0xbe};

Fp2 curve_b2() { return Fp2{Fp::from_u64(4), Fp::from_u64(4)}; }

bool y_is_lex_largest(const Fp2& y) { return y.cmp_lex(-y) > 0; }

} // namespace

G2Point G2Point::generator() {
    static const G2Point g = [] {
        Fp2 x{Fp::from_bytes(kGenXc0), Fp::from_bytes(kGenXc1)};
        Fp2 y{Fp::from_bytes(kGenYc0), Fp::from_bytes(kGenYc1)};
        return G2Point(Jac<Fp2>{x, y, Fp2::one()});
    }();
    return g;
}

G2Point G2Point::mul(const Scalar& k) const { return G2Point(detail::jac_mul(p_, k.plain_limbs())); }

bool G2Point::is_on_curve() const {
    if (is_identity()) return true;
    Fp2 z2 = p_.Z.square();
    Fp2 z6 = z2.square() * z2;
    return p_.Y.square() == p_.X.square() * p_.X + curve_b2() * z6;
}

bool G2Point::in_subgroup() const {
    auto order = Scalar::order_bytes();
    return detail::jac_mul_bytes(p_, order.data(), order.size()).is_identity();
}

G2Affine G2Point::to_affine() const {
    if (is_identity()) return {Fp2::zero(), Fp2::zero(), true};
    Fp2 zinv = p_.Z.inverse();
    Fp2 zi2 = zinv.square();
    return {p_.X * zi2, p_.Y * zi2 * zinv, false};
}

std::array<std::uint8_t, G2Point::kBytes> G2Point::to_bytes() const {
    std::array<std::uint8_t, kBytes> out{};
    if (is_identity()) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    G2Affine a = to_affine();
    auto c1 = a.x.c1.to_bytes();
    auto c0 = a.x.c0.to_bytes();
    std::copy(c1.begin(), c1.end(), out.begin());
    std::copy(c0.begin(), c0.end(), out.begin() + 48);
    out[0] |= kFlagCompressed;
    if (y_is_lex_largest(a.y)) out[0] |= kFlagSort;
    return out;
}

G2Point G2Point::from_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes)
        throw DecodeError(DecodeErrc::WrongLength, "G2 encoding must be 96 bytes");
    std::uint8_t flags = in[0];
    if (!(flags & kFlagCompressed))
        throw DecodeError(DecodeErrc::Malformed, "G2 encoding missing compression flag");
    if (flags & kFlagInfinity) {
        if (flags != (kFlagCompressed | kFlagInfinity))
            throw DecodeError(DecodeErrc::Malformed, "bad G2 infinity flags");
        for (size_t i = 1; i < kBytes; i++)
            if (in[i] != 0) throw DecodeError(DecodeErrc::Malformed, "bad G2 infinity padding");
        return identity();
    }
    std::array<std::uint8_t, 48> c1b, c0b;
    std::copy(in.begin(), in.begin() + 48, c1b.begin());
    std::copy(in.begin() + 48, in.end(), c0b.begin());
    c1b[0] &= 0x1f;
    Fp2 x{Fp::from_bytes(c0b), Fp::from_bytes(c1b)};
    Fp2 rhs = x.square() * x + curve_b2();
    auto y = rhs.sqrt();
    if (!y) throw DecodeError(DecodeErrc::NotOnCurve, "G2 x not on curve");
    bool sort = (flags & kFlagSort) != 0;
    Fp2 yy = (y_is_lex_largest(*y) == sort) ? *y : -*y;
    G2Point p(Jac<Fp2>{x, yy, Fp2::one()});
    if (!p.in_subgroup())
        throw DecodeError(DecodeErrc::NotInSubgroup, "G2 point not in prime-order subgroup");
    return p;
}

} // namespace sl
