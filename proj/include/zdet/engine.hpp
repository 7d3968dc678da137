#pragma once
// The two headline determinant algorithms plus dispatch:
//
//   padic        draw a prime p and a random vector v, solve A x = v by
//                Dixon lifting, take d = lcm of the denominators of x
//                (a divisor of det A), then finish det/d by CRT over word
//                primes whose product exceeds 2*H/d.
//   multimodular det mod word primes until the product exceeds twice the
//                Hadamard bound H, then one symmetric CRT recombination.
//
// Every random draw flows from the seed through Rng; identical seeds give
// identical primes, vectors, and reports (wall time aside).

#include <cstdint>
#include <optional>
#include <string>

#include "zdet/matrix.hpp"

namespace zdet {

enum class Algorithm { padic, multimodular, bareiss, cofactor };
enum class AlgorithmChoice { automatic, padic, multimodular, bareiss, cofactor };

std::string to_string(Algorithm a);
std::string to_string(AlgorithmChoice c);
std::optional<AlgorithmChoice> parse_algorithm_choice(const std::string& name);

inline constexpr int kDixonPrimeBits = 59;
inline constexpr int kCrtPrimeBits = 59;
inline constexpr int kSingularPrimeRetries = 3;
inline constexpr std::uint64_t kDixonVectorBound = 1ULL << 60;

struct DetReport {
    mpz_class value;
    Algorithm algorithm = Algorithm::multimodular;
    std::optional<mpz_class> divisor_d;
    int crt_primes_used = 0;
    std::optional<int> lifting_steps;
    int prime_retries = 0;
    bool fell_back = false;
    double wall_time = 0.0; // seconds
};

struct EnginePolicy {
    AlgorithmChoice algorithm_choice = AlgorithmChoice::automatic;
    std::uint64_t seed = 0;
    // auto rule: n < multimodular_threshold -> bareiss; otherwise padic when
    // max|entry| < small_entry_factor * n, multimodular when not.
    int multimodular_threshold = 24;
    std::uint64_t small_entry_factor = 1;
};

// p-adic determinant. Singular-mod-p primes are retried up to
// kSingularPrimeRetries times, after which the run falls back to the
// multimodular algorithm on the same seeded stream (correct both for
// det = 0 and for unlucky primes); the report then has fell_back set and
// records multimodular as the algorithm that produced the value.
DetReport det_padic(const IntegerMatrix& a, std::uint64_t seed);

// Multimodular determinant. Primes are drawn as
// random_prime(kCrtPrimeBits, Rng(seed)), repeats skipped, until their
// product exceeds 2 * hadamard_bound(a); a zero Hadamard bound short-cuts
// to 0 without touching any prime.
DetReport det_multimodular(const IntegerMatrix& a, std::uint64_t seed);

// Policy dispatch; the chosen algorithm is recorded in the report.
DetReport det(const IntegerMatrix& a, const EnginePolicy& policy = {});

} // namespace zdet
