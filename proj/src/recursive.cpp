#include "rsss/recursive.hpp"

#include <stdexcept>

namespace rsss {

RecursiveParams::RecursiveParams(PrimeModulus modulus, std::uint32_t threshold,
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

SecretVector::SecretVector(std::vector<FieldElement> secrets)
    : secrets_(std::move(secrets)) {
    if (secrets_.empty()) {
        throw std::invalid_argument("secret vector: empty");
    }
    for (const auto& s : secrets_) {
        if (s.modulus() != secrets_.front().modulus()) {
            throw std::invalid_argument("secret vector: mixed moduli");
        }
    }
}

SecretVector SecretVector::from_integers(std::span<const std::uint64_t> values,
                                         PrimeModulus modulus) {
    std::vector<FieldElement> secrets;
    secrets.reserve(values.size());
    for (std::uint64_t v : values) {
        secrets.emplace_back(v, modulus);
    }
    return SecretVector(std::move(secrets));
}

namespace {

std::vector<Share> sample(const Polynomial& poly, std::uint32_t count) {
    std::vector<Share> shares;
    shares.reserve(count);
    for (std::uint32_t x = 1; x <= count; ++x) {
        shares.push_back({x, poly.evaluate(x)});
    }
    return shares;
}

} // namespace

ShareSet recursive_deal_deterministic(const SecretVector& secrets, const FieldElement& slope,
                                      const RecursiveParams& params,
                                      DealTranscript* transcript) {
    if (secrets.size() != params.k - 1) {
        throw std::invalid_argument("recursive_deal: expected " + std::to_string(params.k - 1) +
                                    " secrets, got " + std::to_string(secrets.size()));
    }
    if (secrets.modulus() != params.p || slope.modulus() != params.p) {
        throw std::invalid_argument("recursive_deal: modulus differs from params");
    }

    Polynomial level({secrets[0], slope});
    // For k = 2 the single secret is shared directly by the line.
    std::vector<Share> shares = sample(level, params.k == 2 ? params.n : 2);
    if (transcript) {
        transcript->level_polys.clear();
        transcript->level_shares.clear();
        transcript->level_polys.push_back(level);
        transcript->level_shares.push_back(shares);
    }

    for (std::uint32_t i = 2; i + 1 <= params.k; ++i) {
        // Previous level's share at x = j becomes the coefficient of x^j.
        std::vector<FieldElement> coeffs;
        coeffs.reserve(i + 1);
        coeffs.push_back(secrets[i - 1]);
        for (const auto& s : shares) {
            coeffs.push_back(s.y);
        }
        level = Polynomial(std::move(coeffs));
        shares = sample(level, i + 1 == params.k ? params.n : i + 1);
        if (transcript) {
            transcript->level_polys.push_back(level);
            transcript->level_shares.push_back(shares);
        }
    }
    return {std::move(shares), params};
}

ShareSet recursive_deal(const SecretVector& secrets, const RecursiveParams& params,
                        RandomSource& rng, DealTranscript* transcript) {
    return recursive_deal_deterministic(secrets, uniform_element(params.p, rng), params,
                                        transcript);
}

SecretVector recursive_reconstruct(std::span<const Share> shares,
                                   const RecursiveParams& params) {
    const auto chosen = detail::lowest_k_shares(shares, params.k, params.n);
    std::vector<SharePoint> points;
    points.reserve(chosen.size());
    for (const auto& s : chosen) {
        points.push_back({s.index, s.y});
    }

    Polynomial level = interpolate(points, params.k);
    std::vector<FieldElement> secrets(params.k - 1, FieldElement::zero(params.p));
    secrets[params.k - 2] = level.free_term();

    // Unwind: the coefficient of x^j in level i+1 is the level-i share at
    // x = j; interpolating those points recovers level i and its free term.
    for (std::uint32_t i = params.k - 2; i >= 1; --i) {
        points.clear();
        for (std::size_t j = 1; j < level.length(); ++j) {
            points.push_back({j, level.coefficient(j)});
        }
        level = interpolate(points, i + 1);
        secrets[i - 1] = level.free_term();
    }
    return SecretVector(std::move(secrets));
}

Rational blowup_factor(const RecursiveParams& params) {
    return {params.n, params.k - 1};
}

} // namespace rsss
