#pragma once

#include <cstdint>
#include <random>

namespace rsss {

// Source of uniform 64-bit words. Dealing and encoding paths take one by
// reference so the caller controls seeding: fresh system entropy in normal
// use, a fixed seed when archives must be reproducible.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual std::uint64_t next_u64() = 0;
};

class SystemRandomSource final : public RandomSource {
public:
    SystemRandomSource();
    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

class SeededRandomSource final : public RandomSource {
public:
    explicit SeededRandomSource(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Uniform value in [0, bound) by rejection sampling. A plain modulo would
// bias small residues; draws are retried until they fall below the largest
// multiple of bound.
std::uint64_t uniform_below(RandomSource& rng, std::uint64_t bound);

} // namespace rsss
