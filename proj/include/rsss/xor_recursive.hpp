#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsss/random.hpp"

namespace rsss {

// Bit string with the leftmost bit at index 0, matching the way the strings
// are written out ("1011" has bit(0) == 1, bit(3) == 1).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    static BitString parse(std::string_view text);
    static BitString zeros(std::size_t count);
    static BitString random(std::size_t count, RandomSource& rng);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t bit(std::size_t i) const { return bits_.at(i); }
    std::string str() const;

    BitString operator^(const BitString& other) const;
    BitString left_half() const;
    BitString right_half() const;

    friend BitString concat(const BitString& left, const BitString& right);

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Secrets for the 2-of-2 chained XOR scheme. Sizes must double at each step;
// that is what lets both shares of one level ride inside the next level's
// shares.
struct BitSecretChain {
    explicit BitSecretChain(std::vector<BitString> secrets);

    std::vector<BitString> secrets;

    std::size_t depth() const noexcept { return secrets.size(); }
};

// The two final shares. Each is as long as the largest secret; XORing them
// yields that secret, and their halves carry the previous level.
struct BitSharePair {
    BitString share_a;
    BitString share_b;

    bool operator==(const BitSharePair&) const = default;
};

// Chained 2-of-2 XOR dealing. Level 1 splits the first secret as
// (r, r ^ s1) with r uniform. At each later level with previous shares
// (A, B) and the next secret split into halves (hi, lo), the new pair is
//
//   (A || (lo ^ B),  (hi ^ A) || B)
//
// so the pair still XORs to the new secret while hiding the old shares in
// opposite halves. Other pad placements per level would also work; this
// fixed rule is the one the reconstruction below expects.
BitSharePair xor_deal(const BitSecretChain& chain, RandomSource& rng);

// Inverse walk: the shares XOR to the largest secret; the first half of
// share A and the second half of share B are the previous level's pair.
// Runs `depth` levels and returns the secrets smallest first.
BitSecretChain xor_reconstruct(const BitSharePair& pair, std::size_t depth);

} // namespace rsss
