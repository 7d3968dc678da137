#include "zdet/engine.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <vector>

#include "zdet/dixon.hpp"
#include "zdet/modular.hpp"
#include "zdet/oracles.hpp"
#include "zdet/rational.hpp"

namespace zdet {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void sort_by_modulus(std::vector<ResiduePair>& pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const ResiduePair& a, const ResiduePair& b) {
                  return a.modulus.value < b.modulus.value;
              });
}

// Multimodular core on an already-running stream, so the padic fallback
// stays a function of the original seed.
DetReport multimodular_core(const IntegerMatrix& a, Rng& rng) {
    DetReport rep;
    rep.algorithm = Algorithm::multimodular;

    const mpz_class h = hadamard_bound(a);
    if (h == 0) {
        rep.value = 0;
        return rep;
    }

    const mpz_class target = 2 * h;
    std::set<std::uint64_t> used;
    std::vector<ResiduePair> pairs;
    mpz_class product = 1;
    while (product <= target) {
        const WordPrime q = random_prime(kCrtPrimeBits, rng);
        if (!used.insert(q.value).second) continue;
        pairs.push_back({det_mod_p(reduce_matrix(a, q)), q});
        product *= q.value;
    }
    sort_by_modulus(pairs);
    rep.value = crt_combine(pairs);
    rep.crt_primes_used = static_cast<int>(pairs.size());
    return rep;
}

} // namespace

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::padic: return "padic";
        case Algorithm::multimodular: return "multimodular";
        case Algorithm::bareiss: return "bareiss";
        case Algorithm::cofactor: return "cofactor";
    }
    return "unknown";
}

std::string to_string(AlgorithmChoice c) {
    switch (c) {
        case AlgorithmChoice::automatic: return "auto";
        case AlgorithmChoice::padic: return "padic";
        case AlgorithmChoice::multimodular: return "multimodular";
        case AlgorithmChoice::bareiss: return "bareiss";
        case AlgorithmChoice::cofactor: return "cofactor";
    }
    return "unknown";
}

std::optional<AlgorithmChoice> parse_algorithm_choice(const std::string& name) {
    if (name == "auto") return AlgorithmChoice::automatic;
    if (name == "padic") return AlgorithmChoice::padic;
    if (name == "multimodular") return AlgorithmChoice::multimodular;
    if (name == "bareiss") return AlgorithmChoice::bareiss;
    if (name == "cofactor") return AlgorithmChoice::cofactor;
    return std::nullopt;
}

DetReport det_multimodular(const IntegerMatrix& a, std::uint64_t seed) {
    const auto start = Clock::now();
    Rng rng(seed);
    DetReport rep = multimodular_core(a, rng);
    rep.wall_time = seconds_since(start);
    return rep;
}

DetReport det_padic(const IntegerMatrix& a, std::uint64_t seed) {
    const auto start = Clock::now();
    Rng rng(seed);

    // Stage 1: a prime where A is invertible. A matrix singular mod
    // kSingularPrimeRetries random 59-bit primes is almost surely singular
    // over Q; multimodular settles both cases.
    std::optional<WordPrime> p;
    std::optional<ResidueMatrix> inv;
    int retries = 0;
    for (int attempt = 0; attempt < kSingularPrimeRetries; ++attempt) {
        const WordPrime cand = random_prime(kDixonPrimeBits, rng);
        inv = invert_mod_p(reduce_matrix(a, cand));
        if (inv) {
            p = cand;
            break;
        }
        ++retries;
    }
    if (!p) {
        DetReport rep = multimodular_core(a, rng);
        rep.fell_back = true;
        rep.prime_retries = retries;
        rep.wall_time = seconds_since(start);
        return rep;
    }

    // Stage 2: Dixon solve; d = lcm of the solution denominators divides
    // det(A) by Cramer's rule.
    IntegerVector v = random_vector(a.n(), kDixonVectorBound, rng);
    const RationalVector x = dixon_solve_with_inverse(a, v, *p, *inv);
    const mpz_class d = denominator_lcm(x);

    DetReport rep;
    rep.algorithm = Algorithm::padic;
    rep.divisor_d = d;
    rep.lifting_steps = lifting_precision(a, v, *p);
    rep.prime_retries = retries;

    // Stage 3: finish s = det/d by CRT. |s| <= H/d, so a prime product Q
    // with Q*d > 2H makes the symmetric representative exact. The lifting
    // prime is reused first; p cannot divide d (d | det and A is invertible
    // mod p), the check simply mirrors the stated rule.
    const mpz_class h = hadamard_bound(a);
    std::set<std::uint64_t> used;
    std::vector<ResiduePair> pairs;
    mpz_class product = 1;

    auto add_prime = [&](WordPrime q) {
        const std::uint64_t d_mod_q = mpz_fdiv_ui(d.get_mpz_t(), q.value);
        if (d_mod_q == 0) return false;
        if (!used.insert(q.value).second) return false;
        const std::uint64_t det_q = det_mod_p(reduce_matrix(a, q));
        pairs.push_back({mulmod(det_q, *invmod(d_mod_q, q.value), q.value), q});
        product *= q.value;
        return true;
    };

    add_prime(*p);
    while (product * d <= 2 * h)
        add_prime(random_prime(kCrtPrimeBits, rng));

    sort_by_modulus(pairs);
    rep.value = d * crt_combine(pairs);
    rep.crt_primes_used = static_cast<int>(pairs.size());
    rep.wall_time = seconds_since(start);
    return rep;
}

namespace {

DetReport det_exact_oracle(const IntegerMatrix& a, Algorithm which) {
    const auto start = Clock::now();
    DetReport rep;
    rep.algorithm = which;
    rep.value = which == Algorithm::bareiss ? det_bareiss(a) : det_cofactor(a);
    rep.wall_time = seconds_since(start);
    return rep;
}

} // namespace

DetReport det(const IntegerMatrix& a, const EnginePolicy& policy) {
    switch (policy.algorithm_choice) {
        case AlgorithmChoice::padic:
            return det_padic(a, policy.seed);
        case AlgorithmChoice::multimodular:
            return det_multimodular(a, policy.seed);
        case AlgorithmChoice::bareiss:
            return det_exact_oracle(a, Algorithm::bareiss);
        case AlgorithmChoice::cofactor:
            return det_exact_oracle(a, Algorithm::cofactor);
        case AlgorithmChoice::automatic:
            break;
    }
    if (a.n() < policy.multimodular_threshold)
        return det_exact_oracle(a, Algorithm::bareiss);
    if (max_abs_entry(a) < policy.small_entry_factor * mpz_class(a.n()))
        return det_padic(a, policy.seed);
    return det_multimodular(a, policy.seed);
}

} // namespace zdet
