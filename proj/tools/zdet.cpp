// zdet: exact determinants of integer matrices.
//
//   zdet det    --input A.txt [--algorithm auto|padic|multimodular|bareiss|cofactor]
//   zdet gen    --n 40 --bound 100 --seed 7 --output A.txt
//   zdet bench  --sizes 10,20,40 --algorithms bareiss,multimodular --trials 3
//
// Exit codes: 0 ok, 1 I/O or parse failure, 2 usage error, 3 cross-algorithm
// disagreement (bench only). Results go to stdout, diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zdet/engine.hpp"
#include "zdet/matrix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return kExitOk;
}

void print_report(const zdet::DetReport& rep, std::ostream& os) {
    os << "algorithm=" << zdet::to_string(rep.algorithm) << "\n";
    if (rep.divisor_d) os << "divisor_d=" << rep.divisor_d->get_str() << "\n";
    os << "crt_primes_used=" << rep.crt_primes_used << "\n";
    if (rep.lifting_steps) os << "lifting_steps=" << *rep.lifting_steps << "\n";
    os << "prime_retries=" << rep.prime_retries << "\n";
    os << "fell_back=" << (rep.fell_back ? "true" : "false") << "\n";
    os << "wall_time=" << rep.wall_time << "\n";
}

struct DetArgs {
    std::string input;
    std::string format = "auto";
    std::string algorithm = "auto";
    std::uint64_t seed = 0;
    bool verbose = false;
};

int run_det(const DetArgs& args) {
    const auto choice = zdet::parse_algorithm_choice(args.algorithm);
    if (!choice) {
        std::cerr << "error: unknown algorithm '" << args.algorithm << "'\n";
        return kExitUsage;
    }

    std::string text;
    if (int rc = read_file(args.input, text); rc != kExitOk) return rc;

    bool json = args.format == "json";
    if (args.format == "auto") {
        const auto dot = args.input.rfind('.');
        json = dot != std::string::npos && args.input.substr(dot) == ".json";
    }

    zdet::EnginePolicy policy;
    policy.algorithm_choice = *choice;
    policy.seed = args.seed;

    try {
        const zdet::IntegerMatrix a =
            json ? zdet::parse_matrix_json(text) : zdet::parse_matrix(text);
        const zdet::DetReport rep = zdet::det(a, policy);
        if (args.verbose) print_report(rep, std::cerr);
        std::cout << rep.value.get_str() << "\n";
        return kExitOk;
    } catch (const zdet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct GenArgs {
    int n = 0;
    std::uint64_t bound = 0;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenArgs& args) {
    if (args.n < 1) {
        std::cerr << "error: --n must be >= 1\n";
        return kExitUsage;
    }
    if (args.bound < 1 || args.bound > (1ULL << 62)) {
        std::cerr << "error: --bound must be in [1, 2^62]\n";
        return kExitUsage;
    }
    const zdet::IntegerMatrix a = zdet::random_matrix(args.n, args.bound, args.seed);
    std::ofstream out(args.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << args.output << "' for writing\n";
        return kExitIo;
    }
    out << zdet::serialize_matrix(a);
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << args.output << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

struct BenchArgs {
    std::string sizes;
    std::uint64_t bound = 100;
    std::string algorithms = "bareiss,multimodular,padic,auto";
    std::uint64_t seed = 0;
    int trials = 1;
    std::string output;
};

std::uint64_t bench_seed(std::uint64_t seed, int size, int trial) {
    zdet::Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(size) +
                          static_cast<std::uint64_t>(trial)));
    return rng.next();
}

int run_bench(const BenchArgs& args) {
    std::vector<int> sizes;
    for (const std::string& tok : split_csv(args.sizes)) {
        try {
            const int v = std::stoi(tok);
            if (v < 1) throw std::invalid_argument(tok);
            sizes.push_back(v);
        } catch (const std::exception&) {
            std::cerr << "error: bad size '" << tok << "'\n";
            return kExitUsage;
        }
    }
    if (sizes.empty()) {
        std::cerr << "error: --sizes must list at least one dimension\n";
        return kExitUsage;
    }

    std::vector<zdet::AlgorithmChoice> algos;
    for (const std::string& tok : split_csv(args.algorithms)) {
        const auto choice = zdet::parse_algorithm_choice(tok);
        if (!choice || *choice == zdet::AlgorithmChoice::cofactor) {
            std::cerr << "error: bench algorithm must be one of "
                         "padic,multimodular,bareiss,auto (got '"
                      << tok << "')\n";
            return kExitUsage;
        }
        algos.push_back(*choice);
    }
    if (algos.empty()) {
        std::cerr << "error: --algorithms must list at least one algorithm\n";
        return kExitUsage;
    }
    if (args.trials < 1) {
        std::cerr << "error: --trials must be >= 1\n";
        return kExitUsage;
    }
    if (args.bound < 1 || args.bound > (1ULL << 62)) {
        std::cerr << "error: --bound must be in [1, 2^62]\n";
        return kExitUsage;
    }

    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << args.output << "' for writing\n";
            return kExitIo;
        }
    }
    std::ostream& out = args.output.empty() ? std::cout : file;

    out << "n,entry_bound,algorithm,seed,wall_time_s,crt_primes,value_digits\n";
    for (int size : sizes) {
        for (int trial = 0; trial < args.trials; ++trial) {
            const std::uint64_t mseed = bench_seed(args.seed, size, trial);
            const zdet::IntegerMatrix a =
                zdet::random_matrix(size, args.bound, mseed);

            std::optional<mpz_class> reference;
            for (const auto algo : algos) {
                zdet::EnginePolicy policy;
                policy.algorithm_choice = algo;
                policy.seed = mseed;
                const zdet::DetReport rep = zdet::det(a, policy);

                if (reference && rep.value != *reference) {
                    std::cerr << "DISAGREEMENT: n=" << size << " trial=" << trial
                              << " seed=" << mseed << " "
                              << zdet::to_string(algo) << " returned "
                              << rep.value.get_str() << ", expected "
                              << reference->get_str() << "\n";
                    return kExitDisagreement;
                }
                if (!reference) reference = rep.value;

                const std::string digits = mpz_class(abs(rep.value)).get_str();
                char wall[32];
                std::snprintf(wall, sizeof(wall), "%.6f", rep.wall_time);
                out << size << ',' << args.bound << ','
                    << zdet::to_string(algo) << ',' << mseed << ',' << wall
                    << ',' << rep.crt_primes_used << ',' << digits.size()
                    << "\n";
            }
        }
    }
    out.flush();
    if (!out) {
        std::cerr << "error: write failed\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinants of integer matrices"};
    app.require_subcommand(1);

    DetArgs det_args;
    CLI::App* det_cmd = app.add_subcommand("det", "compute a determinant");
    det_cmd->add_option("--input,-i", det_args.input, "matrix file")->required();
    det_cmd->add_option("--format", det_args.format, "text, json, or auto")
        ->check(CLI::IsMember({"text", "json", "auto"}));
    det_cmd->add_option("--algorithm,-a", det_args.algorithm,
                        "auto, padic, multimodular, bareiss, or cofactor");
    det_cmd->add_option("--seed", det_args.seed, "seed for the randomized paths");
    det_cmd->add_flag("--verbose,-v", det_args.verbose,
                      "print the full report to stderr");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random matrix");
    gen_cmd->add_option("--n", gen_args.n, "dimension")->required();
    gen_cmd->add_option("--bound", gen_args.bound, "entries uniform in [-bound, bound]")
        ->required();
    gen_cmd->add_option("--seed", gen_args.seed, "generator seed");
    gen_cmd->add_option("--output,-o", gen_args.output, "output file")->required();

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time algorithms on seeded matrices, CSV out");
    bench_cmd->add_option("--sizes", bench_args.sizes, "comma list of dimensions")
        ->required();
    bench_cmd->add_option("--bound", bench_args.bound, "entry bound");
    bench_cmd->add_option("--algorithms", bench_args.algorithms,
                          "comma list from padic,multimodular,bareiss,auto");
    bench_cmd->add_option("--seed", bench_args.seed, "base seed");
    bench_cmd->add_option("--trials", bench_args.trials, "matrices per size");
    bench_cmd->add_option("--output,-o", bench_args.output,
                          "CSV file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message to stderr
        return kExitUsage;
    }

    try {
        if (det_cmd->parsed()) return run_det(det_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (bench_cmd->parsed()) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
