#include "rsss/codec.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>

namespace rsss {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'R', 'S', 'S', 'S'};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint16_t get_u16(std::span<const std::uint8_t> in, std::size_t at) {
    return static_cast<std::uint16_t>(in[at] | (std::uint16_t{in[at + 1]} << 8));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= std::uint64_t{in[at + i]} << (8 * i);
    }
    return v;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return a == 0 ? 0 : (a - 1) / b + 1;
}

} // namespace

std::uint64_t ArchiveHeader::element_count() const {
    return ceil_div(ceil_div(original_length, limb_bytes), std::uint64_t{k} - 1);
}

std::uint8_t limb_bytes_for(PrimeModulus p) {
    const unsigned limb = (p.bit_length() - 1) / 8;
    if (limb == 0) {
        throw std::invalid_argument("codec: modulus too small to pack bytes, need p >= 2^9");
    }
    return static_cast<std::uint8_t>(limb);
}

std::vector<ShareArchive> encode_message(std::span<const std::uint8_t> message,
                                         const RecursiveParams& params, RandomSource& rng) {
    const std::uint8_t limb_bytes = limb_bytes_for(params.p);
    const std::uint32_t group = params.k - 1;

    ArchiveHeader header;
    header.p = params.p.value();
    header.k = static_cast<std::uint16_t>(params.k);
    header.n = static_cast<std::uint16_t>(params.n);
    header.original_length = message.size();
    header.limb_bytes = limb_bytes;

    std::vector<ShareArchive> archives(params.n);
    const std::uint64_t blocks = header.element_count();
    for (std::uint32_t i = 0; i < params.n; ++i) {
        archives[i].header = header;
        archives[i].header.share_index = static_cast<std::uint16_t>(i + 1);
        archives[i].elements.reserve(blocks);
    }

    std::vector<FieldElement> limbs;
    limbs.reserve(group);
    std::size_t offset = 0;
    for (std::uint64_t block = 0; block < blocks; ++block) {
        limbs.clear();
        for (std::uint32_t s = 0; s < group; ++s) {
            std::uint64_t limb = 0;
            for (std::uint32_t b = 0; b < limb_bytes && offset + b < message.size(); ++b) {
                limb |= std::uint64_t{message[offset + b]} << (8 * b);
            }
            offset = std::min<std::size_t>(offset + limb_bytes, message.size());
            limbs.emplace_back(limb, params.p);
        }
        const ShareSet dealt = recursive_deal(SecretVector(limbs), params, rng);
        for (const auto& share : dealt.shares) {
            archives[share.index - 1].elements.push_back(share.y.value());
        }
    }
    return archives;
}

std::vector<std::uint8_t> decode_message(std::span<const ShareArchive> archives) {
    if (archives.empty()) {
        throw ArchiveError("insufficient shares: no archives given");
    }
    const ArchiveHeader& first = archives.front().header;
    if (first.k < 2 || first.limb_bytes == 0) {
        throw ArchiveError("invalid header: bad threshold or limb width");
    }
    std::set<std::uint16_t> indices;
    for (const auto& archive : archives) {
        const ArchiveHeader& h = archive.header;
        if (h.p != first.p || h.k != first.k || h.n != first.n ||
            h.original_length != first.original_length || h.limb_bytes != first.limb_bytes) {
            throw ArchiveError("header mismatch: archives come from different encodings");
        }
        if (!indices.insert(h.share_index).second) {
            throw ArchiveError("duplicate share index " + std::to_string(h.share_index));
        }
        if (archive.elements.size() != h.element_count()) {
            throw ArchiveError("payload size mismatch in share " + std::to_string(h.share_index));
        }
    }
    if (archives.size() < first.k) {
        throw ArchiveError("insufficient shares: need " + std::to_string(first.k) + ", got " +
                           std::to_string(archives.size()));
    }

    const RecursiveParams params(PrimeModulus(first.p), first.k, first.n);
    if (limb_bytes_for(params.p) != first.limb_bytes) {
        throw ArchiveError("limb width inconsistent with modulus");
    }
    const std::uint64_t limb_limit = std::uint64_t{1} << (8 * first.limb_bytes);
    const std::uint64_t blocks = first.element_count();

    std::vector<std::uint8_t> message;
    message.reserve(blocks * first.limb_bytes * (first.k - 1));
    std::vector<Share> block_shares;
    block_shares.reserve(archives.size());
    for (std::uint64_t block = 0; block < blocks; ++block) {
        block_shares.clear();
        for (const auto& archive : archives) {
            block_shares.push_back(
                {archive.header.share_index, FieldElement(archive.elements[block], params.p)});
        }
        const SecretVector limbs = recursive_reconstruct(block_shares, params);
        for (const auto& limb : limbs.elements()) {
            if (limb.value() >= limb_limit) {
                throw ArchiveError("corruption detected: reconstructed limb exceeds " +
                                   std::to_string(first.limb_bytes) + " bytes");
            }
            for (std::uint32_t b = 0; b < first.limb_bytes; ++b) {
                message.push_back(static_cast<std::uint8_t>(limb.value() >> (8 * b)));
            }
        }
    }
    message.resize(first.original_length);
    return message;
}

std::vector<std::uint8_t> write_archive(const ShareArchive& archive) {
    std::vector<std::uint8_t> out;
    out.reserve(ArchiveHeader::kEncodedSize + 8 * archive.elements.size());
    for (std::uint8_t byte : kMagic) {
        out.push_back(byte);
    }
    out.push_back(ArchiveHeader::kVersion);
    put_u64(out, archive.header.p);
    put_u16(out, archive.header.k);
    put_u16(out, archive.header.n);
    put_u16(out, archive.header.share_index);
    put_u64(out, archive.header.original_length);
    out.push_back(archive.header.limb_bytes);
    for (std::uint64_t element : archive.elements) {
        put_u64(out, element);
    }
    return out;
}

ShareArchive read_archive(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < ArchiveHeader::kEncodedSize) {
        throw ArchiveError("truncated archive: " + std::to_string(bytes.size()) +
                           " bytes is shorter than the header");
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw ArchiveError("bad magic: not a share archive");
    }
    if (bytes[4] != ArchiveHeader::kVersion) {
        throw ArchiveError("unsupported version " + std::to_string(bytes[4]));
    }

    ShareArchive archive;
    archive.header.p = get_u64(bytes, 5);
    archive.header.k = get_u16(bytes, 13);
    archive.header.n = get_u16(bytes, 15);
    archive.header.share_index = get_u16(bytes, 17);
    archive.header.original_length = get_u64(bytes, 19);
    archive.header.limb_bytes = bytes[27];

    std::optional<PrimeModulus> p;
    try {
        p.emplace(archive.header.p);
    } catch (const std::invalid_argument& e) {
        throw ArchiveError(std::string("invalid header: ") + e.what());
    }
    const ArchiveHeader& h = archive.header;
    if (h.k < 2 || h.k > h.n || h.n >= h.p) {
        throw ArchiveError("invalid header: bad threshold parameters");
    }
    if (h.share_index < 1 || h.share_index > h.n) {
        throw ArchiveError("invalid header: share index outside [1, n]");
    }
    if (h.limb_bytes != limb_bytes_for(*p)) {
        throw ArchiveError("invalid header: limb width inconsistent with modulus");
    }

    const std::size_t payload = bytes.size() - ArchiveHeader::kEncodedSize;
    const std::uint64_t expected = h.element_count();
    if (payload % 8 != 0 || payload / 8 < expected) {
        throw ArchiveError("truncated payload: expected " + std::to_string(expected) +
                           " elements");
    }
    if (payload / 8 > expected) {
        throw ArchiveError("trailing data after " + std::to_string(expected) + " elements");
    }
    archive.elements.reserve(expected);
    for (std::uint64_t i = 0; i < expected; ++i) {
        const std::uint64_t element = get_u64(bytes, ArchiveHeader::kEncodedSize + 8 * i);
        if (element >= h.p) {
            throw ArchiveError("corrupt element " + std::to_string(i) +
                               ": value not below the modulus");
        }
        archive.elements.push_back(element);
    }
    return archive;
}

} // namespace rsss
