#include "sl/hashing.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace sl {

namespace {

void digest(const EVP_MD* md, std::span<const std::uint8_t> data, std::uint8_t* out,
            unsigned out_len) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    unsigned len = out_len;
    if (EVP_DigestInit_ex(ctx, md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, out, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("digest failed");
    }
    EVP_MD_CTX_free(ctx);
}

Bytes frame(std::string_view tag, const HashParts& parts) {
    Bytes buf;
    auto put_u32 = [&](std::uint32_t v) {
        for (int i = 3; i >= 0; i--) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    };
    auto put_u64 = [&](std::uint64_t v) {
        for (int i = 7; i >= 0; i--) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    };
    put_u32(static_cast<std::uint32_t>(tag.size()));
    buf.insert(buf.end(), tag.begin(), tag.end());
    put_u32(static_cast<std::uint32_t>(parts.size()));
    for (const auto& p : parts) {
        put_u64(p.size());
        buf.insert(buf.end(), p.begin(), p.end());
    }
    return buf;
}

// G1 cofactor (z-1)^2/3
constexpr std::uint8_t kG1Cofactor[16] = {0x39, 0x6c, 0x8c, 0x00, 0x55, 0x55, 0xe1, 0x56,
                                          0x8c, 0x00, 0xaa, 0xab, 0x00, 0x00, 0xaa, 0xab};

} // namespace

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 32> out;
    digest(EVP_sha256(), data, out.data(), 32);
    return out;
}

std::array<std::uint8_t, 64> sha512(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 64> out;
    digest(EVP_sha512(), data, out.data(), 64);
    return out;
}

Scalar hash_to_scalar(std::string_view domain_tag, const HashParts& parts) {
    if (domain_tag.empty()) throw std::invalid_argument("empty domain tag");
    Bytes buf = frame(domain_tag, parts);
    auto h = sha512(buf);
    return Scalar::from_bytes_wide(h);
}

G1Point hash_to_g1(std::string_view domain_tag, const HashParts& parts) {
    if (domain_tag.empty()) throw std::invalid_argument("empty domain tag");
    Bytes buf = frame(domain_tag, parts);
    buf.push_back(0);
    for (unsigned ctr = 0; ctr < 256; ctr++) {
        buf.back() = static_cast<std::uint8_t>(ctr);
        auto h = sha512(buf);
        Fp x = Fp::from_bytes_reduce(std::span(h).first(48));
        Fp rhs = x.square() * x + Fp::from_u64(4);
        auto y = rhs.sqrt();
        if (!y) continue;
        Fp yy = (h[63] & 1) ? -*y : *y;
        detail::Jac<Fp> j{x, yy, Fp::one()};
        auto cleared = detail::jac_mul_bytes(j, kG1Cofactor, sizeof(kG1Cofactor));
        if (cleared.is_identity()) continue;
        return G1Point(cleared);
    }
    throw std::runtime_error("hash_to_g1 failed to find a point");
}

} // namespace sl
