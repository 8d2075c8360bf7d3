#pragma once

#include <array>
#include <span>

#include "sl/detail/jacobian.hpp"
#include "sl/fp_tower.hpp"
#include "sl/scalar.hpp"

namespace sl {

struct G2Affine {
    Fp2 x, y;
    bool infinity = true;
};

// Point of the prime-order subgroup of the twist E'(Fp2): y^2 = x^3 + 4(1+u).
// Compressed encoding: 96 bytes (x.c1 with flags, then x.c0).
class G2Point {
public:
    static constexpr size_t kBytes = 96;

    G2Point() : p_(detail::Jac<Fp2>::identity()) {}

    static G2Point identity() { return G2Point(); }
    static G2Point generator();
    static G2Point from_bytes(std::span<const std::uint8_t> in);
    std::array<std::uint8_t, kBytes> to_bytes() const;

    G2Point operator+(const G2Point& o) const { return G2Point(detail::jac_add(p_, o.p_)); }
    G2Point operator-(const G2Point& o) const {
        return G2Point(detail::jac_add(p_, detail::jac_neg(o.p_)));
    }
    G2Point operator-() const { return G2Point(detail::jac_neg(p_)); }

    friend G2Point operator*(const Scalar& k, const G2Point& P) { return P.mul(k); }
    G2Point mul(const Scalar& k) const;

    bool is_identity() const { return p_.is_identity(); }
    bool operator==(const G2Point& o) const { return detail::jac_eq(p_, o.p_); }
    bool operator!=(const G2Point& o) const { return !(*this == o); }

    bool is_on_curve() const;
    bool in_subgroup() const;

    G2Affine to_affine() const;

    const detail::Jac<Fp2>& jac() const { return p_; }
    explicit G2Point(const detail::Jac<Fp2>& j) : p_(j) {}

private:
    detail::Jac<Fp2> p_;
};

} // namespace sl
