#include "rsss/oracle.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace rsss {

namespace {

constexpr std::uint64_t kMaxAssignments = std::uint64_t{1} << 26;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (result > limit / base) {
            return limit + 1;
        }
        result *= base;
    }
    return result;
}

void validate_observed(std::span<const Share> observed, std::uint64_t p, std::uint32_t n) {
    std::set<std::uint32_t> seen;
    for (const auto& s : observed) {
        if (s.index < 1 || s.index > n) {
            throw std::invalid_argument("observed share index outside [1, n]");
        }
        if (!seen.insert(s.index).second) {
            throw std::invalid_argument("duplicate observed share index");
        }
        if (s.y.modulus().value() != p) {
            throw std::invalid_argument("observed share modulus differs from params");
        }
    }
}

// H = log2(C) - (sum c*log2(c)) / C. The second term vanishes when every
// consistent candidate is a distinct tuple, which keeps the uniform case
// bit-exact at log2(C).
double entropy_bits(const std::map<std::vector<std::uint64_t>, std::uint64_t>& counts,
                    std::uint64_t total) {
    if (total == 0) {
        return 0.0;
    }
    double weighted = 0.0;
    for (const auto& [tuple, count] : counts) {
        if (count > 1) {
            weighted += static_cast<double>(count) * std::log2(static_cast<double>(count));
        }
    }
    return std::log2(static_cast<double>(total)) - weighted / static_cast<double>(total);
}

void accumulate(ConditionalReport& report, const std::vector<std::uint64_t>& secrets) {
    ++report.candidate_count;
    ++report.joint_counts[secrets];
    for (std::size_t i = 0; i < secrets.size(); ++i) {
        ++report.marginal_counts[i][secrets[i]];
    }
}

// Advances a base-p odometer; false once it wraps around to all zeros.
bool next_tuple(std::vector<std::uint64_t>& tuple, std::uint64_t p) {
    for (auto& digit : tuple) {
        if (++digit < p) {
            return true;
        }
        digit = 0;
    }
    return false;
}

} // namespace

Rational ConditionalReport::joint_probability(const std::vector<std::uint64_t>& tuple) const {
    if (candidate_count == 0) {
        throw std::logic_error("report: no consistent candidates");
    }
    const auto it = joint_counts.find(tuple);
    return {it == joint_counts.end() ? 0 : it->second, candidate_count};
}

Rational ConditionalReport::marginal_probability(std::size_t position,
                                                 std::uint64_t value) const {
    if (candidate_count == 0) {
        throw std::logic_error("report: no consistent candidates");
    }
    const auto& counts = marginal_counts.at(position);
    const auto it = counts.find(value);
    return {it == counts.end() ? 0 : it->second, candidate_count};
}

ConditionalReport enumerate_shamir(const ShamirParams& params, const FieldElement& true_secret,
                                   std::span<const Share> observed) {
    const std::uint64_t p = params.p.value();
    if (p > 31) {
        throw std::invalid_argument("enumerate_shamir: prime too large, need p <= 31");
    }
    const std::uint64_t total = checked_pow(p, params.k, kMaxAssignments);
    if (total > kMaxAssignments) {
        throw std::invalid_argument("enumerate_shamir: p^k too large to enumerate");
    }
    if (true_secret.modulus() != params.p) {
        throw std::invalid_argument("enumerate_shamir: secret modulus differs from params");
    }
    validate_observed(observed, p, params.n);

    ConditionalReport report;
    report.scheme = SchemeKind::shamir;
    report.prime = p;
    report.threshold = params.k;
    report.share_count = params.n;
    report.observed.assign(observed.begin(), observed.end());
    report.total_assignments = total;
    report.marginal_counts.resize(1);
    report.true_secrets = std::vector<std::uint64_t>{true_secret.value()};

    // Raw residues in the hot loop; coeffs[0] is the candidate free term.
    std::vector<std::uint64_t> coeffs(params.k, 0);
    do {
        bool consistent = true;
        for (const auto& share : observed) {
            std::uint64_t acc = 0;
            const std::uint64_t x = share.index % p;
            for (std::size_t j = coeffs.size(); j-- > 0;) {
                acc = (acc * x + coeffs[j]) % p;
            }
            if (acc != share.y.value()) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            accumulate(report, {coeffs[0]});
        }
    } while (next_tuple(coeffs, p));

    report.joint_entropy_bits = entropy_bits(report.joint_counts, report.candidate_count);
    return report;
}

ConditionalReport enumerate_recursive(const RecursiveParams& params,
                                      std::span<const Share> observed) {
    const std::uint64_t p = params.p.value();
    if (p > 13 || params.k > 4) {
        throw std::invalid_argument(
            "enumerate_recursive: intractable size, need p <= 13 and k <= 4");
    }
    validate_observed(observed, p, params.n);

    ConditionalReport report;
    report.scheme = SchemeKind::recursive;
    report.prime = p;
    report.threshold = params.k;
    report.share_count = params.n;
    report.observed.assign(observed.begin(), observed.end());
    report.total_assignments = checked_pow(p, params.k, kMaxAssignments);
    report.marginal_counts.resize(params.k - 1);

    // Every final share is a linear function of (s_1..s_{k-1}, slope) with no
    // constant term, so the dealing of each basis vector gives one column of
    // the map and candidates can be scanned with plain dot products.
    const std::uint32_t dims = params.k;
    std::vector<std::vector<std::uint64_t>> columns(dims);
    for (std::uint32_t d = 0; d < dims; ++d) {
        std::vector<FieldElement> basis(params.k - 1, FieldElement::zero(params.p));
        FieldElement slope = FieldElement::zero(params.p);
        if (d < params.k - 1) {
            basis[d] = FieldElement::one(params.p);
        } else {
            slope = FieldElement::one(params.p);
        }
        const ShareSet dealt =
            recursive_deal_deterministic(SecretVector(std::move(basis)), slope, params);
        columns[d].reserve(params.n);
        for (const auto& share : dealt.shares) {
            columns[d].push_back(share.y.value());
        }
    }

    std::vector<std::uint64_t> assignment(dims, 0);  // secrets then slope
    std::vector<std::uint64_t> secrets(params.k - 1, 0);
    do {
        bool consistent = true;
        for (const auto& share : observed) {
            std::uint64_t acc = 0;
            for (std::uint32_t d = 0; d < dims; ++d) {
                acc += assignment[d] * columns[d][share.index - 1];
            }
            if (acc % p != share.y.value()) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            secrets.assign(assignment.begin(), assignment.end() - 1);
            accumulate(report, secrets);
        }
    } while (next_tuple(assignment, p));

    report.joint_entropy_bits = entropy_bits(report.joint_counts, report.candidate_count);
    return report;
}

Rational nominal_blowup(BlowupScheme scheme, std::uint32_t k, std::uint32_t n) {
    if (k < 2 || k > n) {
        throw std::invalid_argument("nominal_blowup: need 2 <= k <= n");
    }
    switch (scheme) {
        case BlowupScheme::conventional:
            return {n, 1};
        case BlowupScheme::recursive_multi:
            return {n, k - 1};
        case BlowupScheme::optimal:
            return {n, k};
    }
    throw std::invalid_argument("nominal_blowup: unknown scheme");
}

Rational measured_blowup(std::uint64_t total_secret_bits, std::uint64_t total_share_bits) {
    if (total_secret_bits == 0 || total_share_bits == 0) {
        throw std::invalid_argument("measured_blowup: sizes must be positive");
    }
    return {total_share_bits, total_secret_bits};
}

} // namespace rsss
