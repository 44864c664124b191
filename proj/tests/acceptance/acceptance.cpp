// Acceptance suite: every shipped guarantee, one line of output each.
// Run with no arguments for all criteria or with a list of numbers, e.g.
// "acceptance 3 8". Exits nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rsss/codec.hpp"
#include "rsss/oracle.hpp"
#include "rsss/poly.hpp"
#include "rsss/recursive.hpp"
#include "rsss/shamir.hpp"
#include "rsss/xor_recursive.hpp"
#include "support/sources.hpp"
#include "support/vandermonde.hpp"

using rsss::FieldElement;
using rsss::PrimeModulus;
using rsss::Rational;
using rsss::RecursiveParams;
using rsss::SecretVector;
using rsss::ShamirParams;
using rsss::Share;

namespace {

constexpr std::uint64_t kPrime61 = (std::uint64_t{1} << 61) - 1;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Body>
void for_each_combination(std::uint32_t n, std::uint32_t k, Body&& body) {
    std::vector<std::uint32_t> pick(k);
    for (std::uint32_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        body(pick);
        std::int64_t at = static_cast<std::int64_t>(k) - 1;
        while (at >= 0 && pick[at] == n - k + at) --at;
        if (at < 0) return;
        ++pick[at];
        for (std::uint32_t i = static_cast<std::uint32_t>(at) + 1; i < k; ++i) {
            pick[i] = pick[i - 1] + 1;
        }
    }
}

// --- criterion 1: the pinned dealing reproduces the full golden transcript,
// --- exactly, in under a millisecond.
Outcome criterion1() {
    Outcome out;
    const PrimeModulus p(31);
    const RecursiveParams params(p, 5, 7);
    const SecretVector secrets = SecretVector::from_integers({{17, 28, 5, 12}}, p);

    rsss::DealTranscript transcript;
    rsss::ShareSet dealt{{}, params};
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        testsupport::ScriptedSource rng({22});
        const auto start = std::chrono::steady_clock::now();
        dealt = rsss::recursive_deal(secrets, params, rng, &transcript);
        best = std::min(best, seconds_since(start));
    }

    const std::vector<std::vector<std::uint64_t>> golden_levels = {
        {8, 30}, {4, 9, 12}, {30, 21, 19, 3}, {23, 15, 24, 3, 8, 12, 29}};
    const std::vector<std::vector<std::uint64_t>> golden_polys = {
        {17, 22}, {28, 8, 30}, {5, 4, 9, 12}, {12, 30, 21, 19, 3}};

    if (transcript.level_shares.size() != 4 || transcript.level_polys.size() != 4) {
        out.fail("transcript does not have 4 levels");
        return out;
    }
    for (std::size_t level = 0; level < 4; ++level) {
        for (std::size_t i = 0; i < golden_levels[level].size(); ++i) {
            const auto& share = transcript.level_shares[level][i];
            if (share.index != i + 1 || share.y.value() != golden_levels[level][i]) {
                out.fail("level " + std::to_string(level + 1) + " share " + std::to_string(i + 1) +
                         " is " + std::to_string(share.y.value()) + ", want " +
                         std::to_string(golden_levels[level][i]));
            }
        }
        if (transcript.level_polys[level] !=
            rsss::Polynomial::from_values(golden_polys[level], p)) {
            out.fail("level " + std::to_string(level + 1) + " polynomial differs");
        }
    }
    for (std::size_t i = 0; i < dealt.shares.size(); ++i) {
        if (dealt.shares[i].index != i + 1 ||
            dealt.shares[i].y.value() != golden_levels[3][i]) {
            out.fail("final share " + std::to_string(i + 1) + " differs");
        }
    }
    if (best >= 1e-3) {
        out.fail("dealing took " + std::to_string(best * 1e3) + " ms, limit 1 ms");
    }
    std::ostringstream detail;
    detail << "all 16 intermediate and 7 final values exact, dealing took " << best * 1e6
           << " us (< 1 ms)";
    out.detail = detail.str();
    return out;
}

// --- criterion 2: five specific shares rebuild the golden coefficients and
// --- all four secrets exactly.
Outcome criterion2() {
    Outcome out;
    const PrimeModulus p(31);
    const RecursiveParams params(p, 5, 7);
    const std::vector<Share> shares = {
        {1, FieldElement(23, p)}, {3, FieldElement(24, p)}, {4, FieldElement(3, p)},
        {5, FieldElement(8, p)},  {7, FieldElement(29, p)},
    };

    std::vector<rsss::SharePoint> points;
    for (const auto& s : shares) points.push_back({s.index, s.y});
    const rsss::Polynomial top = rsss::interpolate(points, 5);
    const std::vector<std::uint64_t> expected_coeffs = {12, 30, 21, 19, 3};
    for (std::size_t i = 0; i < expected_coeffs.size(); ++i) {
        if (top.coefficient(i).value() != expected_coeffs[i]) {
            out.fail("coefficient " + std::to_string(i) + " is " +
                     std::to_string(top.coefficient(i).value()) + ", want " +
                     std::to_string(expected_coeffs[i]));
        }
    }

    const SecretVector recovered = rsss::recursive_reconstruct(shares, params);
    const SecretVector expected = SecretVector::from_integers({{17, 28, 5, 12}}, p);
    if (!(recovered == expected)) {
        out.fail("recovered secrets differ");
    }
    out.detail = "coefficients [12,30,21,19,3] and secrets (17,28,5,12) exact";
    return out;
}

// --- criterion 3: 1000 random instances, every k-subset reconstructs all
// --- secrets exactly, within 30 s.
Outcome criterion3() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    rsss::SeededRandomSource rng(20240331);
    std::uint64_t subsets_checked = 0;
    for (int trial = 0; trial < 1000 && out.pass; ++trial) {
        const PrimeModulus p(trial % 2 == 0 ? 31 : kPrime61);
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rsss::uniform_below(rng, 7));
        const std::uint32_t n =
            k + static_cast<std::uint32_t>(rsss::uniform_below(rng, 13 - k));
        const RecursiveParams params(p, k, n);
        std::vector<FieldElement> values;
        for (std::uint32_t i = 0; i + 1 < k; ++i) {
            values.push_back(rsss::uniform_element(p, rng));
        }
        const SecretVector secrets(values);
        const auto dealt = rsss::recursive_deal(secrets, params, rng);

        for_each_combination(n, k, [&](const std::vector<std::uint32_t>& pick) {
            std::vector<Share> subset;
            subset.reserve(k);
            for (std::uint32_t i : pick) subset.push_back(dealt.shares[i]);
            if (!(rsss::recursive_reconstruct(subset, params) == secrets)) {
                out.fail("trial " + std::to_string(trial) + " subset failed (k=" +
                         std::to_string(k) + ", n=" + std::to_string(n) + ")");
            }
            ++subsets_checked;
        });
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        out.fail("took " + std::to_string(elapsed) + " s, limit 30 s");
    }
    std::ostringstream detail;
    detail << "1000 instances, " << subsets_checked << " subsets, all exact, " << elapsed
           << " s (< 30 s)";
    out.detail = detail.str();
    return out;
}

// --- criterion 4: exhaustive single-secret secrecy. For p in {5,7,11,13},
// --- k in {2,3}, every secret, every dealing, every (k-1)-subset: the
// --- conditional free-term distribution is exactly uniform.
Outcome criterion4() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t conditionals = 0;
    for (std::uint64_t prime : {5ull, 7ull, 11ull, 13ull}) {
        const PrimeModulus p(prime);
        for (std::uint32_t k : {2u, 3u}) {
            const std::uint32_t n = k + 1;
            const ShamirParams params(p, k, n);
            // Conditionals depend only on the observed (subset, values); cache
            // verdicts so repeated transcripts don't re-enumerate.
            std::set<std::vector<std::uint64_t>> checked;

            std::vector<std::uint64_t> coeff_tail(k - 1, 0);
            for (std::uint64_t secret = 0; secret < prime && out.pass; ++secret) {
                std::fill(coeff_tail.begin(), coeff_tail.end(), 0);
                bool more = true;
                while (more && out.pass) {
                    testsupport::ScriptedSource rng(coeff_tail);
                    const auto shares =
                        rsss::shamir_deal(FieldElement(secret, p), params, rng);

                    for_each_combination(n, k - 1, [&](const std::vector<std::uint32_t>& pick) {
                        if (!out.pass) return;
                        std::vector<Share> observed;
                        std::vector<std::uint64_t> key;
                        for (std::uint32_t i : pick) {
                            observed.push_back(shares[i]);
                            key.push_back(shares[i].index);
                            key.push_back(shares[i].y.value());
                        }
                        if (!checked.insert(key).second) {
                            return;
                        }
                        const auto report =
                            rsss::enumerate_shamir(params, FieldElement(secret, p), observed);
                        ++conditionals;
                        for (std::uint64_t value = 0; value < prime; ++value) {
                            if (!(report.marginal_probability(0, value) ==
                                  Rational(1, prime))) {
                                out.fail("p=" + std::to_string(prime) +
                                         " k=" + std::to_string(k) + ": non-uniform marginal");
                                return;
                            }
                        }
                    });

                    // next coefficient vector
                    more = false;
                    for (auto& digit : coeff_tail) {
                        if (++digit < prime) {
                            more = true;
                            break;
                        }
                        digit = 0;
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        out.fail("took " + std::to_string(elapsed) + " s, limit 60 s");
    }
    std::ostringstream detail;
    detail << conditionals << " distinct conditionals, all exactly uniform, " << elapsed
           << " s (< 60 s)";
    out.detail = detail.str();
    return out;
}

// --- criterion 5: recursive dimension count at p=11, k=3, n=4. Every
// --- transcript, every 2-subset: exactly p candidates, entropy log2(p).
Outcome criterion5() {
    Outcome out;
    const PrimeModulus p(11);
    const RecursiveParams params(p, 3, 4);
    std::uint64_t reports = 0;
    for (std::uint64_t s1 = 0; s1 < 11 && out.pass; ++s1) {
        for (std::uint64_t s2 = 0; s2 < 11 && out.pass; ++s2) {
            for (std::uint64_t slope = 0; slope < 11 && out.pass; ++slope) {
                const auto dealt = rsss::recursive_deal_deterministic(
                    SecretVector::from_integers({{s1, s2}}, p), FieldElement(slope, p), params);
                for_each_combination(4, 2, [&](const std::vector<std::uint32_t>& pick) {
                    if (!out.pass) return;
                    const std::vector<Share> observed = {dealt.shares[pick[0]],
                                                         dealt.shares[pick[1]]};
                    const auto report = rsss::enumerate_recursive(params, observed);
                    ++reports;
                    if (report.candidate_count != 11) {
                        out.fail("candidate_count " +
                                 std::to_string(report.candidate_count) + ", want 11");
                        return;
                    }
                    if (report.joint_entropy_bits !=
                        std::log2(static_cast<double>(report.candidate_count))) {
                        out.fail("entropy is not exactly log2(candidate_count)");
                        return;
                    }
                    if (report.joint_counts.count({s1, s2}) != 1) {
                        out.fail("dealt secrets missing from the candidate set");
                    }
                });
            }
        }
    }
    std::ostringstream detail;
    detail << reports << " reports: candidate_count = 11 = p and entropy = log2(11) bits, exact";
    out.detail = detail.str();
    return out;
}

// --- criterion 6: blow-up factors as exact rationals.
Outcome criterion6() {
    Outcome out;
    const PrimeModulus p(31);
    if (!(rsss::blowup_factor(RecursiveParams(p, 5, 7)) == Rational(7, 4))) {
        out.fail("recursive (5,7) blow-up is not 7/4");
    }
    for (std::uint32_t k = 2; k <= 6; ++k) {
        for (std::uint32_t n = k; n <= 8; ++n) {
            if (!(rsss::nominal_blowup(rsss::BlowupScheme::conventional, k, n) ==
                  Rational(n, 1))) {
                out.fail("conventional blow-up is not n");
            }
            if (!(rsss::nominal_blowup(rsss::BlowupScheme::optimal, k, n) == Rational(n, k))) {
                out.fail("optimal blow-up is not n/k");
            }
            if (!(rsss::nominal_blowup(rsss::BlowupScheme::recursive_multi, k, n) ==
                  Rational(n, k - 1))) {
                out.fail("recursive blow-up is not n/(k-1)");
            }
            // Measured sizes of each scheme reduce to the same rationals.
            const std::uint64_t b = 61;
            if (!(rsss::measured_blowup(b, n * b) == Rational(n, 1)) ||
                !(rsss::measured_blowup((k - 1) * b, n * b) == Rational(n, k - 1)) ||
                !(rsss::measured_blowup(k * b, n * b) == Rational(n, k))) {
                out.fail("measured ratios disagree with nominal factors");
            }
        }
    }
    out.detail = "recursive 7/4, conventional n, optimal n/k, measured = nominal, all exact";
    return out;
}

// --- criterion 7: XOR chain golden values and the bit-count identity.
Outcome criterion7() {
    Outcome out;
    const rsss::BitSecretChain chain({rsss::BitString::parse("1"), rsss::BitString::parse("01"),
                                      rsss::BitString::parse("1011")});
    testsupport::ScriptedSource rng({0});
    const auto pair = rsss::xor_deal(chain, rng);
    if (pair.share_a.str() != "0010" || pair.share_b.str() != "1001") {
        out.fail("shares are (" + pair.share_a.str() + ", " + pair.share_b.str() +
                 "), want (0010, 1001)");
    }
    const auto back = rsss::xor_reconstruct(pair, 3);
    if (back.secrets.size() != 3 || back.secrets[0].str() != "1" ||
        back.secrets[1].str() != "01" || back.secrets[2].str() != "1011") {
        out.fail("reconstruction differs from (1, 01, 1011)");
    }
    const std::size_t share_bits = pair.share_a.size() + pair.share_b.size();
    std::size_t secret_bits = 0;
    for (const auto& s : chain.secrets) secret_bits += s.size();
    if (share_bits != 2 * chain.secrets.back().size() ||
        secret_bits != 2 * chain.secrets.back().size() - chain.secrets.front().size() ||
        share_bits != 8 || secret_bits != 7) {
        out.fail("bit-count identity violated");
    }
    out.detail = "shares (0010, 1001), chain (1, 01, 1011), 8 share bits carry 7 secret bits";
    return out;
}

// --- criterion 8: codec round trip for the pinned sizes over every
// --- 5-of-7 archive subset, plus the exact 7/4 payload ratio.
Outcome criterion8() {
    Outcome out;
    const RecursiveParams params(PrimeModulus(kPrime61), 5, 7);
    rsss::SeededRandomSource rng(424242);
    std::uint64_t decodes = 0;
    for (std::size_t size : {0ul, 1ul, 55ul, 56ul, 57ul, 1000000ul}) {
        std::vector<std::uint8_t> message(size);
        for (auto& b : message) {
            b = static_cast<std::uint8_t>(rsss::uniform_below(rng, 256));
        }
        const auto archives = rsss::encode_message(message, params, rng);
        for_each_combination(7, 5, [&](const std::vector<std::uint32_t>& pick) {
            if (!out.pass) return;
            std::vector<rsss::ShareArchive> subset;
            for (std::uint32_t i : pick) subset.push_back(archives[i]);
            if (rsss::decode_message(subset) != message) {
                out.fail("size " + std::to_string(size) + ": subset decode differs");
            }
            ++decodes;
        });
        if (size > 0) {
            std::uint64_t payload_bytes = 0;
            for (const auto& archive : archives) {
                payload_bytes += 8 * archive.elements.size();
            }
            // Padded message in on-disk element slots: one 8-byte slot per
            // limb, (k-1) limbs per block.
            const std::uint64_t padded_bytes = 8 * (params.k - 1) * archives[0].elements.size();
            if (!(Rational(payload_bytes, padded_bytes) == Rational(7, 4))) {
                out.fail("size " + std::to_string(size) + ": payload ratio is " +
                         Rational(payload_bytes, padded_bytes).str() + ", want 7/4");
            }
        }
    }
    std::ostringstream detail;
    detail << decodes << " subset decodes byte-exact across sizes {0,1,55,56,57,10^6}, "
           << "payload ratio exactly 7/4";
    out.detail = detail.str();
    return out;
}

// --- criterion 9: interpolation agrees with an independent Vandermonde
// --- solve on every instance with p <= 13 and length <= 4.
Outcome criterion9() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t instances = 0;
    for (std::uint64_t prime : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        const PrimeModulus p(prime);
        const std::uint32_t max_len =
            static_cast<std::uint32_t>(std::min<std::uint64_t>(4, prime - 1));
        for (std::uint32_t len = 1; len <= max_len && out.pass; ++len) {
            for_each_combination(static_cast<std::uint32_t>(prime - 1), len,
                                 [&](const std::vector<std::uint32_t>& pick) {
                if (!out.pass) return;
                std::vector<std::uint64_t> xs(len);
                for (std::uint32_t i = 0; i < len; ++i) xs[i] = pick[i] + 1;

                std::vector<std::uint64_t> ys(len, 0);
                bool more = true;
                while (more && out.pass) {
                    std::vector<rsss::SharePoint> points;
                    points.reserve(len);
                    for (std::uint32_t i = 0; i < len; ++i) {
                        points.push_back({xs[i], FieldElement(ys[i], p)});
                    }
                    const rsss::Polynomial poly = rsss::interpolate(points, len);
                    const auto oracle = testsupport::vandermonde_solve(xs, ys, prime);
                    for (std::uint32_t i = 0; i < len; ++i) {
                        if (poly.coefficient(i).value() != oracle[i]) {
                            out.fail("p=" + std::to_string(prime) + " len=" +
                                     std::to_string(len) + ": coefficient mismatch");
                            break;
                        }
                    }
                    ++instances;
                    more = false;
                    for (auto& digit : ys) {
                        if (++digit < prime) {
                            more = true;
                            break;
                        }
                        digit = 0;
                    }
                }
            });
        }
    }
    std::ostringstream detail;
    detail << instances << " instances, interpolation equals the Vandermonde solve exactly, "
           << seconds_since(start) << " s";
    out.detail = detail.str();
    return out;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "golden dealing transcript", criterion1},
    {2, "golden reconstruction", criterion2},
    {3, "round trip over every k-subset, 1000 instances", criterion3},
    {4, "single-secret sharing: exhaustive perfect secrecy", criterion4},
    {5, "recursive scheme: candidate count = p given k-1 shares", criterion5},
    {6, "blow-up factors as exact rationals", criterion6},
    {7, "xor chain golden values", criterion7},
    {8, "codec round trip and payload ratio", criterion8},
    {9, "interpolation vs Vandermonde oracle, exhaustive", criterion9},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    bool all_pass = true;
    for (const auto& criterion : kCriteria) {
        if (!selected.empty() && selected.count(criterion.id) == 0) {
            continue;
        }
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && outcome.pass;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id
                  << ": " << criterion.title << " -- " << outcome.detail << "\n";
    }
    return all_pass ? 0 : 1;
}
