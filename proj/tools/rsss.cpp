// rsss - split files into threshold share archives and join them back.
//
// split     encode a file into n archives, any k of which restore it
// join      decode a file from k or more archives
// inspect   print an archive header without decoding
// analyze   exhaustively measure secrecy at toy parameters
// xor-demo  walk the chained 2-of-2 XOR scheme on bit strings

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rsss/codec.hpp"
#include "rsss/oracle.hpp"
#include "rsss/recursive.hpp"
#include "rsss/shamir.hpp"
#include "rsss/xor_recursive.hpp"

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

std::unique_ptr<rsss::RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return std::make_unique<rsss::SeededRandomSource>(*seed);
    }
    return std::make_unique<rsss::SystemRandomSource>();
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("failed reading " + path.string());
    }
    return bytes;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot create " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

// Share number suggested by a file name like "data.share3.rsss", if any.
std::optional<std::uint32_t> index_from_filename(const fs::path& path) {
    const std::string name = path.filename().string();
    const auto at = name.rfind(".share");
    if (at == std::string::npos) {
        return std::nullopt;
    }
    std::size_t pos = at + 6;
    std::uint64_t value = 0;
    bool any = false;
    while (pos < name.size() && name[pos] >= '0' && name[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(name[pos] - '0');
        any = true;
        ++pos;
    }
    if (!any || value == 0 || value > 0xffff) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(value);
}

int run_split(std::uint32_t k, std::uint32_t n, std::uint64_t prime, const fs::path& input,
              const fs::path& outdir, const std::optional<std::uint64_t>& seed) {
    const rsss::RecursiveParams params(rsss::PrimeModulus(prime), k, n);
    const auto message = read_file(input);
    auto rng = make_rng(seed);
    const auto archives = rsss::encode_message(message, params, *rng);

    fs::create_directories(outdir);
    const std::string stem = input.stem().string();
    for (const auto& archive : archives) {
        const fs::path out =
            outdir / (stem + ".share" + std::to_string(archive.header.share_index) + ".rsss");
        write_file(out, rsss::write_archive(archive));
    }
    std::cout << "wrote " << archives.size() << " share archives to " << outdir.string() << "\n";
    std::cout << "blow-up factor: " << rsss::blowup_factor(params).str() << "\n";
    return 0;
}

int run_join(const std::vector<fs::path>& share_paths, const fs::path& output) {
    std::vector<rsss::ShareArchive> archives;
    archives.reserve(share_paths.size());
    for (const auto& path : share_paths) {
        archives.push_back(rsss::read_archive(read_file(path)));
        const auto hinted = index_from_filename(path);
        if (hinted && *hinted != archives.back().header.share_index) {
            std::cerr << "warning: " << path.string() << " is named share " << *hinted
                      << " but its header says " << archives.back().header.share_index
                      << "; trusting the header\n";
        }
    }
    const auto message = rsss::decode_message(archives);
    write_file(output, message);
    std::cout << "reconstructed " << message.size() << " bytes to " << output.string() << "\n";
    return 0;
}

int run_inspect(const fs::path& path) {
    const auto archive = rsss::read_archive(read_file(path));
    const auto& h = archive.header;
    std::cout << "archive:         " << path.string() << "\n"
              << "version:         " << int{rsss::ArchiveHeader::kVersion} << "\n"
              << "prime p:         " << h.p << "\n"
              << "threshold k:     " << h.k << "\n"
              << "shares n:        " << h.n << "\n"
              << "share index:     " << h.share_index << "\n"
              << "original length: " << h.original_length << " bytes\n"
              << "limb bytes:      " << int{h.limb_bytes} << "\n"
              << "elements:        " << archive.elements.size() << " (payload "
              << archive.elements.size() * 8 << " bytes)\n";
    return 0;
}

std::string rational_str(const rsss::Rational& r) { return r.str(); }

void print_report_table(const rsss::ConditionalReport& report) {
    std::cout << "scheme:             "
              << (report.scheme == rsss::SchemeKind::shamir ? "shamir" : "recursive") << "\n"
              << "prime p:            " << report.prime << "\n"
              << "threshold k:        " << report.threshold << "\n"
              << "shares n:           " << report.share_count << "\n";
    std::cout << "observed shares:    ";
    if (report.observed.empty()) {
        std::cout << "(none)";
    }
    for (const auto& s : report.observed) {
        std::cout << "(" << s.index << ", " << s.y.value() << ") ";
    }
    std::cout << "\n";
    if (report.true_secrets) {
        std::cout << "dealt secrets:      ";
        for (auto v : *report.true_secrets) {
            std::cout << v << " ";
        }
        std::cout << "\n";
    }
    std::cout << "assignments:        " << report.total_assignments << "\n"
              << "consistent:         " << report.candidate_count << "\n"
              << std::setprecision(6) << std::fixed
              << "joint entropy:      " << report.joint_entropy_bits << " bits\n"
              << "log2(consistent):   " << std::log2(static_cast<double>(report.candidate_count))
              << " bits\n"
              << std::defaultfloat;
    for (std::size_t i = 0; i < report.marginal_counts.size(); ++i) {
        std::cout << "secret " << i + 1 << " marginal:  ";
        for (const auto& [value, count] : report.marginal_counts[i]) {
            std::cout << value << ":" << count << "/" << report.candidate_count << " ";
        }
        std::cout << "\n";
    }
    if (report.joint_counts.size() <= 40) {
        std::cout << "joint distribution:\n";
        for (const auto& [tuple, count] : report.joint_counts) {
            std::cout << "  (";
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                std::cout << tuple[i] << (i + 1 < tuple.size() ? ", " : "");
            }
            std::cout << "): " << count << "/" << report.candidate_count << "\n";
        }
    } else {
        std::cout << "joint distribution: " << report.joint_counts.size() << " tuples\n";
    }
    std::cout << "blow-up this scheme:  "
              << rational_str(rsss::nominal_blowup(report.scheme == rsss::SchemeKind::shamir
                                                       ? rsss::BlowupScheme::conventional
                                                       : rsss::BlowupScheme::recursive_multi,
                                                   report.threshold, report.share_count))
              << "\n"
              << "blow-up conventional: "
              << rational_str(rsss::nominal_blowup(rsss::BlowupScheme::conventional,
                                                   report.threshold, report.share_count))
              << "\n"
              << "blow-up optimal:      "
              << rational_str(rsss::nominal_blowup(rsss::BlowupScheme::optimal, report.threshold,
                                                   report.share_count))
              << "\n";
}

void print_report_plain(const rsss::ConditionalReport& report) {
    std::cout << "scheme=" << (report.scheme == rsss::SchemeKind::shamir ? "shamir" : "recursive")
              << "\n"
              << "p=" << report.prime << "\n"
              << "k=" << report.threshold << "\n"
              << "n=" << report.share_count << "\n";
    std::cout << "observed=";
    for (std::size_t i = 0; i < report.observed.size(); ++i) {
        std::cout << report.observed[i].index << ":" << report.observed[i].y.value()
                  << (i + 1 < report.observed.size() ? "," : "");
    }
    std::cout << "\n";
    if (report.true_secrets) {
        std::cout << "true_secrets=";
        for (std::size_t i = 0; i < report.true_secrets->size(); ++i) {
            std::cout << (*report.true_secrets)[i]
                      << (i + 1 < report.true_secrets->size() ? "," : "");
        }
        std::cout << "\n";
    }
    std::cout << "total_assignments=" << report.total_assignments << "\n"
              << "candidate_count=" << report.candidate_count << "\n"
              << "joint_entropy_bits=" << std::setprecision(17) << report.joint_entropy_bits
              << "\n";
    for (std::size_t i = 0; i < report.marginal_counts.size(); ++i) {
        for (const auto& [value, count] : report.marginal_counts[i]) {
            std::cout << "marginal." << i + 1 << "." << value << "="
                      << rational_str({count, report.candidate_count}) << "\n";
        }
    }
    for (const auto& [tuple, count] : report.joint_counts) {
        std::cout << "joint.";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            std::cout << tuple[i] << (i + 1 < tuple.size() ? "," : "");
        }
        std::cout << "=" << rational_str({count, report.candidate_count}) << "\n";
    }
}

int run_analyze(const std::string& scheme, std::uint64_t prime, std::uint32_t k, std::uint32_t n,
                const std::string& secrets_csv, std::optional<std::uint32_t> observe,
                const std::optional<std::uint64_t>& seed, const std::string& format) {
    const rsss::PrimeModulus p(prime);
    auto rng = make_rng(seed);
    const std::uint32_t observed_count = observe.value_or(k - 1);
    if (observed_count > n) {
        throw std::runtime_error("cannot observe more shares than were dealt");
    }

    std::vector<std::uint64_t> secret_values;
    for (const auto& item : split_list(secrets_csv)) {
        try {
            secret_values.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw std::runtime_error("--secrets expects comma-separated integers, got '" +
                                     item + "'");
        }
    }

    rsss::ConditionalReport report;
    if (scheme == "shamir") {
        const rsss::ShamirParams params(p, k, n);
        if (secret_values.empty()) {
            secret_values.push_back(rsss::uniform_element(p, *rng).value());
        }
        if (secret_values.size() != 1) {
            throw std::runtime_error("shamir analysis takes exactly one secret");
        }
        const rsss::FieldElement secret(secret_values[0], p);
        const auto shares = rsss::shamir_deal(secret, params, *rng);
        const std::vector<rsss::Share> observed(shares.begin(),
                                                shares.begin() + observed_count);
        report = rsss::enumerate_shamir(params, secret, observed);
    } else if (scheme == "recursive") {
        const rsss::RecursiveParams params(p, k, n);
        if (secret_values.empty()) {
            for (std::uint32_t i = 0; i + 1 < k; ++i) {
                secret_values.push_back(rsss::uniform_element(p, *rng).value());
            }
        }
        const auto secrets = rsss::SecretVector::from_integers(secret_values, p);
        const auto dealt = rsss::recursive_deal(secrets, params, *rng);
        const std::vector<rsss::Share> observed(dealt.shares.begin(),
                                                dealt.shares.begin() + observed_count);
        report = rsss::enumerate_recursive(params, observed);
        report.true_secrets = secret_values;
    } else {
        throw std::runtime_error("unknown scheme '" + scheme + "'");
    }

    if (format == "plain") {
        print_report_plain(report);
    } else {
        print_report_table(report);
    }
    return 0;
}

int run_xor_demo(const std::string& secrets_csv, const std::optional<std::uint64_t>& seed) {
    // Fixed all-zero pad, so repeated runs print the same shares.
    struct ZeroSource final : rsss::RandomSource {
        std::uint64_t next_u64() override { return 0; }
    };

    std::vector<rsss::BitString> secrets;
    for (const auto& item : split_list(secrets_csv)) {
        secrets.push_back(rsss::BitString::parse(item));
    }
    const bool builtin = secrets.empty();
    if (builtin) {
        secrets = {rsss::BitString::parse("1"), rsss::BitString::parse("01"),
                   rsss::BitString::parse("1011")};
    }
    const rsss::BitSecretChain chain(std::move(secrets));

    std::unique_ptr<rsss::RandomSource> rng;
    if (builtin && !seed) {
        rng = std::make_unique<ZeroSource>();
    } else {
        rng = make_rng(seed);
    }

    const auto pair = rsss::xor_deal(chain, *rng);
    std::cout << "secrets:";
    for (const auto& s : chain.secrets) {
        std::cout << " " << s.str();
    }
    std::cout << "\nshares: " << pair.share_a.str() << " " << pair.share_b.str() << "\n";

    const auto back = rsss::xor_reconstruct(pair, chain.depth());
    std::cout << "reconstructed:";
    for (const auto& s : back.secrets) {
        std::cout << " " << s.str();
    }
    std::cout << "\n";

    const std::size_t share_bits = 2 * pair.share_a.size();
    const std::size_t secret_bits = 2 * chain.secrets.back().size() - chain.secrets.front().size();
    std::cout << share_bits << " share bits carry " << secret_bits << " secret bits\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive threshold secret sharing for files"};
    app.require_subcommand(1);

    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::uint64_t prime = kDefaultPrime;
    std::string input;
    std::string outdir;
    std::string output;
    std::vector<std::string> share_paths;
    std::string archive_path;
    std::optional<std::uint64_t> seed;
    std::string scheme = "recursive";
    std::string secrets_csv;
    std::optional<std::uint32_t> observe;
    std::string format = "table";

    auto* split = app.add_subcommand("split", "split a file into n share archives");
    split->add_option("-k,--threshold", k, "shares needed to reconstruct")->required();
    split->add_option("-n,--shares", n, "total shares to produce")->required();
    split->add_option("-p,--prime", prime, "field modulus (default 2^61-1)");
    split->add_option("-i,--input", input, "file to split")->required()->check(CLI::ExistingFile);
    split->add_option("-o,--output-dir", outdir, "directory for the archives")->required();
    split->add_option("--seed", seed, "fix the randomness (reproducible archives; testing only)");

    auto* join = app.add_subcommand("join", "reconstruct a file from k or more archives");
    join->add_option("-o,--output", output, "path for the reconstructed file")->required();
    join->add_option("shares", share_paths, "share archive paths")
        ->required()
        ->check(CLI::ExistingFile);

    auto* inspect = app.add_subcommand("inspect", "print an archive header");
    inspect->add_option("archive", archive_path, "archive path")
        ->required()
        ->check(CLI::ExistingFile);

    auto* analyze = app.add_subcommand("analyze", "measure secrecy exhaustively at toy sizes");
    analyze->add_option("--scheme", scheme, "shamir or recursive (default recursive)");
    analyze->add_option("-p,--prime", prime, "toy field modulus")->required();
    analyze->add_option("-k,--threshold", k, "shares needed to reconstruct")->required();
    analyze->add_option("-n,--shares", n, "total shares")->required();
    analyze->add_option("--secrets", secrets_csv, "comma-separated secrets (random if omitted)");
    analyze->add_option("--observe", observe, "observed share count (default k-1)");
    analyze->add_option("--seed", seed, "fix the randomness of the dealing");
    analyze->add_option("--format", format, "plain or table (default table)")
        ->check(CLI::IsMember({"plain", "table"}));

    auto* xor_demo = app.add_subcommand("xor-demo", "chained 2-of-2 XOR sharing of bit strings");
    xor_demo->add_option("--secrets", secrets_csv,
                         "comma-separated bit strings, each twice the previous size");
    xor_demo->add_option("--seed", seed, "randomize the pad from this seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (split->parsed()) {
            return run_split(k, n, prime, input, outdir, seed);
        }
        if (join->parsed()) {
            std::vector<fs::path> paths(share_paths.begin(), share_paths.end());
            return run_join(paths, output);
        }
        if (inspect->parsed()) {
            return run_inspect(archive_path);
        }
        if (analyze->parsed()) {
            return run_analyze(scheme, prime, k, n, secrets_csv, observe, seed, format);
        }
        if (xor_demo->parsed()) {
            return run_xor_demo(secrets_csv, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "rsss: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
