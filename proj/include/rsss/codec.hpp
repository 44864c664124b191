#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsss/random.hpp"
#include "rsss/recursive.hpp"

namespace rsss {

// Raised for malformed, inconsistent or corrupted archives. Parameter misuse
// stays std::invalid_argument.
class ArchiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// On-disk archive layout (all integers little-endian):
//
//   offset  size  field
//        0     4  magic "RSSS"
//        4     1  version (1)
//        5     8  p
//       13     2  k
//       15     2  n
//       17     2  share_index (1..n)
//       19     8  original_length in bytes
//       27     1  limb_bytes
//       28   8*E  share elements, one u64 per dealt block
//
// where E = ceil(ceil(original_length / limb_bytes) / (k-1)).
struct ArchiveHeader {
    static constexpr std::size_t kEncodedSize = 28;
    static constexpr std::uint8_t kVersion = 1;

    std::uint64_t p = 0;
    std::uint16_t k = 0;
    std::uint16_t n = 0;
    std::uint16_t share_index = 0;
    std::uint64_t original_length = 0;
    std::uint8_t limb_bytes = 0;

    std::uint64_t element_count() const;

    bool operator==(const ArchiveHeader&) const = default;
};

struct ShareArchive {
    ArchiveHeader header;
    std::vector<std::uint64_t> elements;

    bool operator==(const ShareArchive&) const = default;
};

// Widest whole-byte limb guaranteed below p: floor((bitlen(p) - 1) / 8).
// Primes below 2^9 cannot hold a full byte and are rejected.
std::uint8_t limb_bytes_for(PrimeModulus p);

// Splits a byte stream into n share archives. Bytes are packed
// little-endian into limbs of limb_bytes each, limbs are grouped k-1 per
// block (the last limb and the last block are zero-padded), and every block
// is dealt independently with fresh randomness. Archive i collects the
// share at index i of every block, in block order.
std::vector<ShareArchive> encode_message(std::span<const std::uint8_t> message,
                                         const RecursiveParams& params, RandomSource& rng);

// Rebuilds the byte stream from any k or more mutually consistent archives.
// Reconstructed limbs wider than limb_bytes indicate corruption.
std::vector<std::uint8_t> decode_message(std::span<const ShareArchive> archives);

std::vector<std::uint8_t> write_archive(const ShareArchive& archive);
ShareArchive read_archive(std::span<const std::uint8_t> bytes);

} // namespace rsss
