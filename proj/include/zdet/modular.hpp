#pragma once
// Word-sized prime fields: primality, prime generation, matrix reduction,
// echelon determinant, Gauss-Jordan inverse, and symmetric-range CRT.
//
// Hard constraint: this layer computes det(A) mod p entirely in word
// arithmetic and must never call an integer determinant routine, for any
// prime size. It therefore includes matrix.hpp (the type, no determinants)
// and nothing above it; the build graph enforces the same.

#include <cstdint>
#include <optional>
#include <vector>

#include "zdet/matrix.hpp"
#include "zdet/rng.hpp"

namespace zdet {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b; // p < 2^62, no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Inverse of a mod m via extended Euclid; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input (12 fixed bases).
bool is_prime_u64(std::uint64_t n);

// An odd prime in (2, 2^62); the range keeps every field product inside one
// 128-bit multiply.
struct WordPrime {
    explicit WordPrime(std::uint64_t v);
    std::uint64_t value;
};

// A prime with exactly bit_length bits (in [3, 62]), found by drawing odd
// candidates with the top bit set from rng. Advances rng.
WordPrime random_prime(int bit_length, Rng& rng);

class ResidueMatrix {
public:
    ResidueMatrix(int n, WordPrime p)
        : p_(p), n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    int n() const { return n_; }
    WordPrime prime() const { return p_; }

    std::uint64_t& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    std::uint64_t operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

private:
    WordPrime p_;
    int n_;
    std::vector<std::uint64_t> entries_;
};

struct ResiduePair {
    std::uint64_t residue;
    WordPrime modulus;
};

// Entry-wise canonical residues in [0, p); negative entries map to p - |e| mod p.
ResidueMatrix reduce_matrix(const IntegerMatrix& a, WordPrime p);
std::vector<std::uint64_t> reduce_vector(const IntegerVector& v, WordPrime p);

// Determinant over Z/p by Gaussian elimination on a working copy, row swaps
// tracked as a sign residue.
std::uint64_t det_mod_p(const ResidueMatrix& m);

// Gauss-Jordan inverse; nullopt signals rank deficiency (an expected
// outcome that drives prime retry, not an error).
std::optional<ResidueMatrix> invert_mod_p(const ResidueMatrix& m);

// M * v mod p.
std::vector<std::uint64_t> multiply(const ResidueMatrix& m,
                                    const std::vector<std::uint64_t>& v);

// The unique x with |x| <= (M-1)/2, M = product of the (pairwise distinct,
// odd) moduli, and x congruent to every residue. Order-independent.
mpz_class crt_combine(const std::vector<ResiduePair>& pairs);

} // namespace zdet
