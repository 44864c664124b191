#include "rsss/shamir.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rsss/poly.hpp"

namespace rsss {

ShamirParams::ShamirParams(PrimeModulus modulus, std::uint32_t threshold,
                           std::uint32_t share_count)
    : p(modulus), k(threshold), n(share_count) {
    if (k < 2) {
        throw std::invalid_argument("params: threshold must be at least 2");
    }
    if (k > n) {
        throw std::invalid_argument("params: threshold exceeds share count");
    }
    if (n >= p.value()) {
        throw std::invalid_argument("params: share count must be below the modulus");
    }
}

std::vector<Share> shamir_deal(const FieldElement& secret, const ShamirParams& params,
                               RandomSource& rng) {
    if (secret.modulus() != params.p) {
        throw std::invalid_argument("shamir_deal: secret modulus differs from params");
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(params.k);
    coeffs.push_back(secret);
    for (std::uint32_t i = 1; i < params.k; ++i) {
        coeffs.push_back(uniform_element(params.p, rng));
    }
    const Polynomial poly(std::move(coeffs));

    std::vector<Share> shares;
    shares.reserve(params.n);
    for (std::uint32_t x = 1; x <= params.n; ++x) {
        shares.push_back({x, poly.evaluate(x)});
    }
    return shares;
}

namespace {

// Validated, sorted by index, truncated to the k lowest. Shared with the
// recursive scheme, which applies the same selection rule.
std::vector<Share> select_reconstruction_set(std::span<const Share> shares,
                                             std::uint32_t k, std::uint32_t n) {
    if (shares.size() < k) {
        throw std::invalid_argument("insufficient shares: need " + std::to_string(k) +
                                    ", got " + std::to_string(shares.size()));
    }
    std::set<std::uint32_t> seen;
    for (const auto& s : shares) {
        if (s.index < 1 || s.index > n) {
            throw std::invalid_argument("share index " + std::to_string(s.index) +
                                        " outside [1, " + std::to_string(n) + "]");
        }
        if (!seen.insert(s.index).second) {
            throw std::invalid_argument("duplicate share index " + std::to_string(s.index));
        }
    }
    std::vector<Share> chosen(shares.begin(), shares.end());
    std::sort(chosen.begin(), chosen.end(),
              [](const Share& a, const Share& b) { return a.index < b.index; });
    chosen.erase(chosen.begin() + k, chosen.end());
    return chosen;
}

} // namespace

FieldElement shamir_reconstruct(std::span<const Share> shares, const ShamirParams& params) {
    const auto chosen = select_reconstruction_set(shares, params.k, params.n);
    std::vector<SharePoint> points;
    points.reserve(chosen.size());
    for (const auto& s : chosen) {
        points.push_back({s.index, s.y});
    }
    return interpolate(points, params.k).free_term();
}

namespace detail {

std::vector<Share> lowest_k_shares(std::span<const Share> shares, std::uint32_t k,
                                   std::uint32_t n) {
    return select_reconstruction_set(shares, k, n);
}

} // namespace detail

} // namespace rsss
