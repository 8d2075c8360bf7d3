#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <span>

namespace sl {

// Randomness source abstraction. The system source wraps the OS CSPRNG;
// the seeded source is a deterministic stream for reproducible test runs.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;
};

class SystemRandom final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

// SHA-512 counter stream keyed by an arbitrary seed.
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::span<const std::uint8_t> seed);
    explicit SeededRandom(std::uint64_t seed);
    void fill(std::span<std::uint8_t> out) override;

private:
    void refill();
    std::array<std::uint8_t, 64> key_{};
    std::array<std::uint8_t, 64> block_{};
    std::uint64_t counter_ = 0;
    size_t avail_ = 0;
};

RandomSource& system_rng();

} // namespace sl
