#include "rsss/random.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace rsss {

SystemRandomSource::SystemRandomSource() {
    std::random_device rd;
    std::array<std::uint32_t, 8> entropy{};
    for (auto& word : entropy) {
        word = rd();
    }
    std::seed_seq seq(entropy.begin(), entropy.end());
    engine_.seed(seq);
}

std::uint64_t uniform_below(RandomSource& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: zero bound");
    }
    // 2^64 mod bound, computed as (2^64 - bound) mod bound in 64-bit wraparound.
    const std::uint64_t rem = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng.next_u64();
        // Accept r < 2^64 - rem, the largest multiple of bound.
        if (rem == 0 || r <= std::numeric_limits<std::uint64_t>::max() - rem) {
            return r % bound;
        }
    }
}

} // namespace rsss
