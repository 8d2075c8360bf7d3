#include "sl/g1.hpp"

#include <mutex>

namespace sl {

using detail::Jac;

namespace {

constexpr std::uint8_t kFlagCompressed = 0x80;
constexpr std::uint8_t kFlagInfinity = 0x40;
constexpr std::uint8_t kFlagSort = 0x20;

const std::uint8_t kGenX[48] = {
    0x17, 0xf1, 0xd3, 0xa7, 0x31, 0x97, 0xd7, 0x94, 0x26, 0x95, 0x63, 0x8c,
    0x4f, 0xa9, 0xac, 0x0f, 0xc3, 0x68, 0x8c, 0x4f, 0x97, 0x74, 0xb9, 0x05,
    0xa1, 0x4e, 0x3a, 0x3f, 0x17, 0x1b, 0xac, 0x58, 0x6c, 0x55, 0xe8, 0x3f,
    0xf9, 0x7a, 0x1a, 0xef, 0xfb, 0x3a, 0xf0, 0x0a, 0xdb, 0x22, 0xc6, 0xbb};
const std::uint8_t kGenY[48] = {
    0x08, 0xb3, 0xf4, 0x81, 0xe3, 0xaa, 0xa0, 0xf1, 0xa0, 0x9e, 0x30, 0xed,
    0x74, 0x1d, 0x8a, 0xe4, 0xfc, 0xf5, 0xe0, 0x95, 0xd5, 0xd0, 0x0a, 0xf6,
    0x00, 0xdb, 0x18, 0xcb, 0x2c, 0x04, 0xb3, 0xed, 0xd0, 0x3c, 0xc7, 0x44,
    0xa2, 0x88, 0x8a, 0xe4, 0x0c, 0xaa, 0x23, 0x29, 0x46, 0xc5, 0xe7, 0xe1};

Fp curve_b() { return Fp::from_u64(4); }

bool y_is_lex_largest(const Fp& y) { return y.cmp(-y) > 0; }

// 4-bit fixed-base windows for the generator
struct GenTable {
    // 64 windows x 15 odd...all multiples j*16^i, j=1..15
    std::vector<G1Affine> entries; // [win*15 + (j-1)]
};

const GenTable& gen_table() {
    static GenTable tbl;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<Jac<Fp>> pts;
        pts.reserve(64 * 15);
        Jac<Fp> base = G1Point::generator().jac();
        for (int win = 0; win < 64; win++) {
            Jac<Fp> acc = Jac<Fp>::identity();
            for (int j = 1; j <= 15; j++) {
                acc = detail::jac_add(acc, base);
                pts.push_back(acc);
            }
            // base <<= 4
            base = detail::jac_add(acc, base); // 16*base
        }
        tbl.entries.resize(pts.size());
        std::vector<Fp> xs(pts.size()), ys(pts.size());
        detail::jac_batch_normalize<Fp>(pts.data(), pts.size(), xs.data(), ys.data());
        for (size_t i = 0; i < pts.size(); i++)
            tbl.entries[i] = {xs[i], ys[i], pts[i].is_identity()};
    });
    return tbl;
}

} // namespace

G1Point G1Point::generator() {
    static const G1Point g = [] {
        Jac<Fp> j{Fp::from_bytes(kGenX), Fp::from_bytes(kGenY), Fp::one()};
        return G1Point(j);
    }();
    return g;
}

G1Point G1Point::mul(const Scalar& k) const { return G1Point(detail::jac_mul(p_, k.plain_limbs())); }

G1Point G1Point::mul_generator(const Scalar& k) {
    const auto& tbl = gen_table();
    auto limbs = k.plain_limbs();
    Jac<Fp> acc = Jac<Fp>::identity();
    for (int win = 0; win < 64; win++) {
        unsigned d = (limbs[win / 16] >> (4 * (win % 16))) & 0xf;
        if (d == 0) continue;
        const G1Affine& e = tbl.entries[static_cast<size_t>(win) * 15 + (d - 1)];
        acc = detail::jac_add_affine(acc, e.x, e.y);
    }
    return G1Point(acc);
}

bool G1Point::is_on_curve() const {
    if (is_identity()) return true;
    // Y^2 = X^3 + b Z^6
    Fp z2 = p_.Z.square();
    Fp z6 = z2.square() * z2;
    return p_.Y.square() == p_.X.square() * p_.X + curve_b() * z6;
}

bool G1Point::in_subgroup() const {
    auto order = Scalar::order_bytes();
    return detail::jac_mul_bytes(p_, order.data(), order.size()).is_identity();
}

G1Affine G1Point::to_affine() const {
    if (is_identity()) return {Fp::zero(), Fp::zero(), true};
    Fp zinv = p_.Z.inverse();
    Fp zi2 = zinv.square();
    return {p_.X * zi2, p_.Y * zi2 * zinv, false};
}

G1Point G1Point::from_affine(const G1Affine& a) {
    if (a.infinity) return identity();
    G1Point p(Jac<Fp>{a.x, a.y, Fp::one()});
    if (!p.is_on_curve())
        throw DecodeError(DecodeErrc::NotOnCurve, "G1 point not on curve");
    return p;
}

void G1Point::batch_to_affine(std::span<const G1Point> in, std::span<G1Affine> out) {
    std::vector<Jac<Fp>> js(in.size());
    for (size_t i = 0; i < in.size(); i++) js[i] = in[i].jac();
    std::vector<Fp> xs(in.size()), ys(in.size());
    detail::jac_batch_normalize<Fp>(js.data(), js.size(), xs.data(), ys.data());
    for (size_t i = 0; i < in.size(); i++) out[i] = {xs[i], ys[i], js[i].is_identity()};
}

std::array<std::uint8_t, G1Point::kBytes> G1Point::to_bytes() const {
    std::array<std::uint8_t, kBytes> out{};
    if (is_identity()) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    G1Affine a = to_affine();
    auto xb = a.x.to_bytes();
    std::copy(xb.begin(), xb.end(), out.begin());
    out[0] |= kFlagCompressed;
    if (y_is_lex_largest(a.y)) out[0] |= kFlagSort;
    return out;
}

G1Point G1Point::from_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes)
        throw DecodeError(DecodeErrc::WrongLength, "G1 encoding must be 48 bytes");
    std::uint8_t flags = in[0];
    if (!(flags & kFlagCompressed))
        throw DecodeError(DecodeErrc::Malformed, "G1 encoding missing compression flag");
    if (flags & kFlagInfinity) {
        if (flags != (kFlagCompressed | kFlagInfinity))
            throw DecodeError(DecodeErrc::Malformed, "bad G1 infinity flags");
        for (size_t i = 1; i < kBytes; i++)
            if (in[i] != 0) throw DecodeError(DecodeErrc::Malformed, "bad G1 infinity padding");
        return identity();
    }
    std::array<std::uint8_t, kBytes> xb;
    std::copy(in.begin(), in.end(), xb.begin());
    xb[0] &= 0x1f;
    Fp x = Fp::from_bytes(xb);
    Fp rhs = x.square() * x + curve_b();
    auto y = rhs.sqrt();
    if (!y) throw DecodeError(DecodeErrc::NotOnCurve, "G1 x not on curve");
    bool sort = (flags & kFlagSort) != 0;
    Fp yy = (y_is_lex_largest(*y) == sort) ? *y : -*y;
    G1Point p(Jac<Fp>{x, yy, Fp::one()});
    if (!p.in_subgroup())
        throw DecodeError(DecodeErrc::NotInSubgroup, "G1 point not in prime-order subgroup");
    return p;
}

G1Point G1Point::msm(std::span<const G1Affine> points, std::span<const Scalar> scalars) {
    size_t n = std::min(points.size(), scalars.size());
    if (n == 0) return identity();
    if (n < 4) {
        Jac<Fp> acc = Jac<Fp>::identity();
        for (size_t i = 0; i < n; i++) {
            if (points[i].infinity) continue;
            Jac<Fp> p{points[i].x, points[i].y, Fp::one()};
            acc = detail::jac_add(acc, detail::jac_mul(p, scalars[i].plain_limbs()));
        }
        return G1Point(acc);
    }
    size_t c = n < 32 ? 4 : (n < 256 ? 6 : 8); // window bits
    size_t windows = (256 + c - 1) / c;
    std::vector<std::array<std::uint64_t, 4>> plain(n);
    for (size_t i = 0; i < n; i++) plain[i] = scalars[i].plain_limbs();
    auto digit = [&](size_t i, size_t win) -> std::uint64_t {
        size_t bit = win * c;
        size_t limb = bit / 64, off = bit % 64;
        std::uint64_t d = plain[i][limb] >> off;
        if (off + c > 64 && limb + 1 < 4) d |= plain[i][limb + 1] << (64 - off);
        return d & ((1ULL << c) - 1);
    };
    Jac<Fp> total = Jac<Fp>::identity();
    std::vector<Jac<Fp>> buckets(1ULL << c);
    for (size_t win = windows; win-- > 0;) {
        for (size_t k = 0; k < c; k++) total = detail::jac_dbl(total);
        for (auto& b : buckets) b = Jac<Fp>::identity();
        for (size_t i = 0; i < n; i++) {
            std::uint64_t d = digit(i, win);
            if (d && !points[i].infinity)
                buckets[d] = detail::jac_add_affine(buckets[d], points[i].x, points[i].y);
        }
        Jac<Fp> run = Jac<Fp>::identity();
        Jac<Fp> sum = Jac<Fp>::identity();
        for (size_t b = buckets.size() - 1; b >= 1; b--) {
            run = detail::jac_add(run, buckets[b]);
            sum = detail::jac_add(sum, run);
        }
        total = detail::jac_add(total, sum);
    }
    return G1Point(total);
}

G1Point G1Point::msm(std::span<const G1Point> points, std::span<const Scalar> scalars) {
    std::vector<G1Affine> aff(points.size());
    batch_to_affine(points, aff);
    return msm(std::span<const G1Affine>(aff), scalars);
}

} // namespace sl
