#pragma once

#include <array>
#include <span>
#include <vector>

#include "sl/detail/jacobian.hpp"
#include "sl/fp.hpp"
#include "sl/scalar.hpp"

namespace sl {

struct G1Affine {
    Fp x, y;
    bool infinity = true;
};

// Point of the prime-order subgroup of E(Fp): y^2 = x^3 + 4.
// Compressed encoding: 48 bytes, flag bits in the top byte.
class G1Point {
public:
    static constexpr size_t kBytes = 48;

    G1Point() : p_(detail::Jac<Fp>::identity()) {}

    static G1Point identity() { return G1Point(); }
    static G1Point generator();
    static G1Point from_bytes(std::span<const std::uint8_t> in); // full validation
    std::array<std::uint8_t, kBytes> to_bytes() const;

    G1Point operator+(const G1Point& o) const { return G1Point(detail::jac_add(p_, o.p_)); }
    G1Point operator-(const G1Point& o) const {
        return G1Point(detail::jac_add(p_, detail::jac_neg(o.p_)));
    }
    G1Point operator-() const { return G1Point(detail::jac_neg(p_)); }
    G1Point dbl() const { return G1Point(detail::jac_dbl(p_)); }

    friend G1Point operator*(const Scalar& k, const G1Point& P) { return P.mul(k); }
    G1Point mul(const Scalar& k) const;
    // k * generator, using the fixed-base table
    static G1Point mul_generator(const Scalar& k);

    bool is_identity() const { return p_.is_identity(); }
    bool operator==(const G1Point& o) const { return detail::jac_eq(p_, o.p_); }
    bool operator!=(const G1Point& o) const { return !(*this == o); }

    bool is_on_curve() const;
    bool in_subgroup() const;

    G1Affine to_affine() const;
    static G1Point from_affine(const G1Affine& a); // validates on-curve only
    static void batch_to_affine(std::span<const G1Point> in, std::span<G1Affine> out);

    // multi-scalar multiplication (Pippenger)
    static G1Point msm(std::span<const G1Affine> points, std::span<const Scalar> scalars);
    static G1Point msm(std::span<const G1Point> points, std::span<const Scalar> scalars);

    // internal raw access (pairing, hashing)
    const detail::Jac<Fp>& jac() const { return p_; }
    explicit G1Point(const detail::Jac<Fp>& j) : p_(j) {}

private:
    detail::Jac<Fp> p_;
};

} // namespace sl
