#include "rsss/xor_recursive.hpp"

#include <stdexcept>

namespace rsss {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("bit string: values must be 0 or 1");
        }
    }
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string: unexpected character '" +
                                        std::string(1, c) + "'");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t count) {
    return BitString(std::vector<std::uint8_t>(count, 0));
}

BitString BitString::random(std::size_t count, RandomSource& rng) {
    std::vector<std::uint8_t> bits(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 64 == 0) {
            word = rng.next_u64();
        }
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
    }
    return BitString(std::move(bits));
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

BitString BitString::operator^(const BitString& other) const {
    if (bits_.size() != other.bits_.size()) {
        throw std::invalid_argument("bit string: xor length mismatch");
    }
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out[i] = bits_[i] ^ other.bits_[i];
    }
    return BitString(std::move(out));
}

BitString BitString::left_half() const {
    if (bits_.size() % 2 != 0) {
        throw std::invalid_argument("bit string: cannot halve odd length");
    }
    return BitString({bits_.begin(), bits_.begin() + bits_.size() / 2});
}

BitString BitString::right_half() const {
    if (bits_.size() % 2 != 0) {
        throw std::invalid_argument("bit string: cannot halve odd length");
    }
    return BitString({bits_.begin() + bits_.size() / 2, bits_.end()});
}

BitString concat(const BitString& left, const BitString& right) {
    std::vector<std::uint8_t> out;
    out.reserve(left.bits_.size() + right.bits_.size());
    out.insert(out.end(), left.bits_.begin(), left.bits_.end());
    out.insert(out.end(), right.bits_.begin(), right.bits_.end());
    return BitString(std::move(out));
}

BitSecretChain::BitSecretChain(std::vector<BitString> chain) : secrets(std::move(chain)) {
    if (secrets.empty()) {
        throw std::invalid_argument("secret chain: empty");
    }
    if (secrets.front().empty()) {
        throw std::invalid_argument("secret chain: first secret must have at least one bit");
    }
    for (std::size_t i = 1; i < secrets.size(); ++i) {
        if (secrets[i].size() != 2 * secrets[i - 1].size()) {
            throw std::invalid_argument("secret chain: secret " + std::to_string(i + 1) +
                                        " must be twice the size of its predecessor");
        }
    }
}

BitSharePair xor_deal(const BitSecretChain& chain, RandomSource& rng) {
    const BitString pad = BitString::random(chain.secrets.front().size(), rng);
    BitString share_a = pad;
    BitString share_b = pad ^ chain.secrets.front();
    for (std::size_t i = 1; i < chain.secrets.size(); ++i) {
        const BitString hi = chain.secrets[i].left_half();
        const BitString lo = chain.secrets[i].right_half();
        BitString next_a = concat(share_a, lo ^ share_b);
        BitString next_b = concat(hi ^ share_a, share_b);
        share_a = std::move(next_a);
        share_b = std::move(next_b);
    }
    return {std::move(share_a), std::move(share_b)};
}

BitSecretChain xor_reconstruct(const BitSharePair& pair, std::size_t depth) {
    if (depth == 0) {
        throw std::invalid_argument("xor_reconstruct: depth must be at least 1");
    }
    if (pair.share_a.size() != pair.share_b.size()) {
        throw std::invalid_argument("xor_reconstruct: share lengths differ");
    }
    if (pair.share_a.empty()) {
        throw std::invalid_argument("xor_reconstruct: empty shares");
    }
    const std::size_t scale = std::size_t{1} << (depth - 1);
    if (pair.share_a.size() % scale != 0) {
        throw std::invalid_argument("xor_reconstruct: share length not divisible by 2^(depth-1)");
    }

    std::vector<BitString> secrets(depth);
    BitString a = pair.share_a;
    BitString b = pair.share_b;
    for (std::size_t level = depth; level-- > 0;) {
        secrets[level] = a ^ b;
        if (level > 0) {
            a = a.left_half();
            b = b.right_half();
        }
    }
    return BitSecretChain(std::move(secrets));
}

} // namespace rsss
