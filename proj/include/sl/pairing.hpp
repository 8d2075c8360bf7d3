#pragma once

#include <utility>
#include <vector>

#include "sl/fp_tower.hpp"
#include "sl/g1.hpp"
#include "sl/g2.hpp"

namespace sl {

// Element of the target group (image of the pairing).
class GtElem {
public:
    static constexpr size_t kBytes = 576;

    GtElem() : v_(Fp12::one()) {}
    explicit GtElem(const Fp12& v) : v_(v) {}

    static GtElem one() { return GtElem(); }

    GtElem operator*(const GtElem& o) const { return GtElem(v_ * o.v_); }
    GtElem inverse() const { return GtElem(v_.inverse()); }
    GtElem pow(const Scalar& k) const;
    GtElem pow_u64(std::uint64_t k) const;

    bool is_one() const { return v_.is_one(); }
    bool operator==(const GtElem& o) const { return v_ == o.v_; }
    bool operator!=(const GtElem& o) const { return !(*this == o); }

    std::array<std::uint8_t, kBytes> to_bytes() const;
    static GtElem from_bytes(std::span<const std::uint8_t> in); // validates subgroup

    const Fp12& raw() const { return v_; }

private:
    Fp12 v_;
};

// Cached Miller-loop line coefficients for a fixed G2 argument.
class PreparedG2 {
public:
    PreparedG2() : infinity_(true) {}
    explicit PreparedG2(const G2Point& q);

    bool is_infinity() const { return infinity_; }

    struct Line {
        Fp2 a; // w^3 coefficient
        Fp2 b; // w^5 coefficient scale (multiplied by -x_P at evaluation)
    };
    const std::vector<Line>& lines() const { return lines_; }

private:
    std::vector<Line> lines_;
    bool infinity_;
};

Fp12 miller_loop(const G1Affine& p, const PreparedG2& q);
GtElem final_exponentiation(const Fp12& f);

// process-wide prepared G2 generator
const PreparedG2& prepared_g2_gen();

GtElem pairing(const G1Point& p, const G2Point& q);
// product of pairings == 1 ?
bool pairing_check(const std::vector<std::pair<G1Point, G2Point>>& pairs);
bool pairing_check_prepared(const std::vector<std::pair<G1Point, const PreparedG2*>>& pairs);

} // namespace sl
