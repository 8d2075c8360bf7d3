#pragma once

#include <string>

#include "sl/g1.hpp"
#include "sl/g2.hpp"
#include "sl/pairing.hpp"

namespace sl {

// Bilinear-group public parameters. g is the pairing of the two generators.
struct PublicParams {
    G1Point g1;
    G2Point g2;
    GtElem g;
    std::string curve_id;

    std::array<std::uint8_t, 32> order() const { return Scalar::order_bytes(); }

    Bytes serialize() const;
    static PublicParams deserialize(std::span<const std::uint8_t> in);
};

// security_bits must be 128 (the only supported level)
PublicParams setup(unsigned security_bits);

} // namespace sl
