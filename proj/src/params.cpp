#include "sl/params.hpp"

#include <stdexcept>

namespace sl {

namespace {
constexpr char kCurveId[] = "BLS12-381";
constexpr std::uint16_t kParamsVersion = 1;
} // namespace

PublicParams setup(unsigned security_bits) {
    if (security_bits != 128)
        throw std::invalid_argument("unsupported security level (only 128 bits)");
    PublicParams pp;
    pp.g1 = G1Point::generator();
    pp.g2 = G2Point::generator();
    pp.g = pairing(pp.g1, pp.g2);
    pp.curve_id = kCurveId;
    return pp;
}

Bytes PublicParams::serialize() const {
    Writer w;
    w.u16(kParamsVersion);
    w.blob(Bytes(curve_id.begin(), curve_id.end()));
    w.bytes(g1.to_bytes());
    w.bytes(g2.to_bytes());
    return std::move(w.buf());
}

PublicParams PublicParams::deserialize(std::span<const std::uint8_t> in) {
    Reader r(in);
    if (r.u16() != kParamsVersion)
        throw DecodeError(DecodeErrc::VersionMismatch, "unsupported params version");
    Bytes id = r.blob();
    std::string curve(id.begin(), id.end());
    if (curve != kCurveId)
        throw DecodeError(DecodeErrc::Malformed, "unknown curve id");
    PublicParams pp;
    pp.curve_id = curve;
    pp.g1 = G1Point::from_bytes(r.bytes(G1Point::kBytes));
    pp.g2 = G2Point::from_bytes(r.bytes(G2Point::kBytes));
    r.expect_done();
    pp.g = pairing(pp.g1, pp.g2);
    return pp;
}

} // namespace sl
