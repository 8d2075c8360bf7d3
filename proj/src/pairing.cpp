#include "sl/pairing.hpp"

#include <stdexcept>

namespace sl {

namespace {

constexpr std::uint64_t kAbsZ = 0xd201000000010000ULL;

Fp2 inv_xi() {
    static const Fp2 v = Fp2::xi().inverse();
    return v;
}

} // namespace

PreparedG2::PreparedG2(const G2Point& q) : infinity_(q.is_identity()) {
    if (infinity_) return;
    G2Affine Q = q.to_affine();
    Fp2 ax = Q.x, ay = Q.y; // running point T
    Fp2 ixi = inv_xi();

    auto push_line = [&](const Fp2& lambda, const Fp2& tx, const Fp2& ty) {
        lines_.push_back(Line{(lambda * tx - ty) * ixi, lambda * ixi});
    };
    auto dbl_step = [&] {
        Fp2 lambda = ax.square().mul_fp(Fp::from_u64(3)) * ay.dbl().inverse();
        push_line(lambda, ax, ay);
        Fp2 x3 = lambda.square() - ax.dbl();
        ay = lambda * (ax - x3) - ay;
        ax = x3;
    };
    auto add_step = [&] {
        Fp2 den = Q.x - ax;
        if (den.is_zero()) throw std::logic_error("degenerate Miller addition");
        Fp2 lambda = (Q.y - ay) * den.inverse();
        push_line(lambda, ax, ay);
        Fp2 x3 = lambda.square() - ax - Q.x;
        ay = lambda * (ax - x3) - ay;
        ax = x3;
    };

    for (int bit = 62; bit >= 0; bit--) {
        dbl_step();
        if ((kAbsZ >> bit) & 1) add_step();
    }
}

Fp12 miller_loop(const G1Affine& p, const PreparedG2& q) {
    if (p.infinity || q.is_infinity()) return Fp12::one();
    Fp12 f = Fp12::one();
    size_t li = 0;
    const auto& lines = q.lines();
    auto apply = [&] {
        const auto& l = lines[li++];
        f = f.mul_by_line(p.y, l.a, -(l.b.mul_fp(p.x)));
    };
    for (int bit = 62; bit >= 0; bit--) {
        f = f.square();
        apply();
        if ((kAbsZ >> bit) & 1) apply();
    }
    // curve parameter is negative
    return f.conjugate();
}

GtElem final_exponentiation(const Fp12& f) {
    // easy part: f^((p^6-1)(p^2+1))
    Fp12 g = f.conjugate() * f.inverse();
    g = g.frobenius2() * g;
    // hard part, cubed exponent: g^3 * g^((z-1)^2 (z+p) (z^2+p^2-1))
    Fp12 t = g.pow_z() * g.conjugate();
    t = t.pow_z() * t.conjugate();
    t = t.pow_z() * t.frobenius();
    t = t.pow_z().pow_z() * t.frobenius2() * t.conjugate();
    return GtElem(t * g.square() * g);
}

const PreparedG2& prepared_g2_gen() {
    static const PreparedG2 prep(G2Point::generator());
    return prep;
}

GtElem pairing(const G1Point& p, const G2Point& q) {
    if (p.is_identity() || q.is_identity()) return GtElem::one();
    PreparedG2 pq(q);
    return final_exponentiation(miller_loop(p.to_affine(), pq));
}

bool pairing_check(const std::vector<std::pair<G1Point, G2Point>>& pairs) {
    std::vector<PreparedG2> prepared;
    prepared.reserve(pairs.size());
    std::vector<std::pair<G1Point, const PreparedG2*>> view;
    view.reserve(pairs.size());
    for (const auto& [p, q] : pairs) {
        prepared.emplace_back(q);
        view.emplace_back(p, &prepared.back());
    }
    return pairing_check_prepared(view);
}

bool pairing_check_prepared(const std::vector<std::pair<G1Point, const PreparedG2*>>& pairs) {
    Fp12 acc = Fp12::one();
    bool any = false;
    for (const auto& [p, q] : pairs) {
        if (p.is_identity() || q->is_infinity()) continue;
        acc = acc * miller_loop(p.to_affine(), *q);
        any = true;
    }
    if (!any) return true;
    return final_exponentiation(acc).is_one();
}

GtElem GtElem::pow(const Scalar& k) const {
    auto bytes = k.to_bytes();
    return GtElem(v_.pow(bytes));
}

GtElem GtElem::pow_u64(std::uint64_t k) const {
    std::array<std::uint8_t, 8> be;
    for (int i = 0; i < 8; i++) be[i] = static_cast<std::uint8_t>(k >> (56 - 8 * i));
    return GtElem(v_.pow(be));
}

std::array<std::uint8_t, GtElem::kBytes> GtElem::to_bytes() const {
    std::array<std::uint8_t, kBytes> out;
    const Fp2* cs[6] = {&v_.c0.c0, &v_.c0.c1, &v_.c0.c2, &v_.c1.c0, &v_.c1.c1, &v_.c1.c2};
    size_t off = 0;
    for (const Fp2* c : cs) {
        auto b0 = c->c0.to_bytes();
        auto b1 = c->c1.to_bytes();
        std::copy(b0.begin(), b0.end(), out.begin() + off);
        std::copy(b1.begin(), b1.end(), out.begin() + off + 48);
        off += 96;
    }
    return out;
}

GtElem GtElem::from_bytes(std::span<const std::uint8_t> in) {
    if (in.size() != kBytes)
        throw DecodeError(DecodeErrc::WrongLength, "Gt encoding must be 576 bytes");
    Fp12 v;
    Fp2* cs[6] = {&v.c0.c0, &v.c0.c1, &v.c0.c2, &v.c1.c0, &v.c1.c1, &v.c1.c2};
    size_t off = 0;
    for (Fp2* c : cs) {
        c->c0 = Fp::from_bytes(in.subspan(off, 48));
        c->c1 = Fp::from_bytes(in.subspan(off + 48, 48));
        off += 96;
    }
    GtElem g(v);
    auto order = Scalar::order_bytes();
    if (!g.raw().pow(order).is_one())
        throw DecodeError(DecodeErrc::NotInSubgroup, "Gt element not in target subgroup");
    return g;
}

} // namespace sl
