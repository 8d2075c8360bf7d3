#include "sl/rng.hpp"

#include <openssl/rand.h>

#include <cstring>
#include <stdexcept>

#include "sl/hashing.hpp"

namespace sl {

void SystemRandom::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        throw std::runtime_error("OS randomness unavailable");
}

SeededRandom::SeededRandom(std::span<const std::uint8_t> seed) {
    auto h = sha512(seed);
    std::memcpy(key_.data(), h.data(), h.size());
}

SeededRandom::SeededRandom(std::uint64_t seed) {
    std::array<std::uint8_t, 8> be;
    for (int i = 0; i < 8; i++) be[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    auto h = sha512(be);
    std::memcpy(key_.data(), h.data(), h.size());
}

void SeededRandom::refill() {
    std::array<std::uint8_t, 72> buf;
    std::memcpy(buf.data(), key_.data(), 64);
    for (int i = 0; i < 8; i++)
        buf[64 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    counter_++;
    auto h = sha512(buf);
    std::memcpy(block_.data(), h.data(), 64);
    avail_ = 64;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
    size_t pos = 0;
    while (pos < out.size()) {
        if (avail_ == 0) refill();
        size_t take = std::min(avail_, out.size() - pos);
        std::memcpy(out.data() + pos, block_.data() + (64 - avail_), take);
        avail_ -= take;
        pos += take;
    }
}

RandomSource& system_rng() {
    static SystemRandom rng;
    return rng;
}

} // namespace sl
