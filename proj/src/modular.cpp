#include "zdet/modular.hpp"

#include <algorithm>

namespace zdet {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid on (m, a); Bezout coefficients stay below m < 2^62.
    std::int64_t t0 = 0, t1 = 1;
    std::uint64_t r0 = m, r1 = a % m;
    while (r1 != 0) {
        const std::uint64_t q = r0 / r1;
        const std::uint64_t r2 = r0 - q * r1;
        const std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) return std::nullopt;
    return t0 < 0 ? static_cast<std::uint64_t>(t0 + static_cast<std::int64_t>(m))
                  : static_cast<std::uint64_t>(t0);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is a witness set for every composite below 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

WordPrime::WordPrime(std::uint64_t v) : value(v) {
    if (v <= 2 || v >= (1ULL << 62))
        throw std::invalid_argument("prime must lie in (2, 2^62)");
    if (!is_prime_u64(v))
        throw std::invalid_argument("value is not prime");
}

WordPrime random_prime(int bit_length, Rng& rng) {
    if (bit_length < 3 || bit_length > 62)
        throw std::invalid_argument("prime bit length must be in [3, 62]");
    const std::uint64_t top = 1ULL << (bit_length - 1);
    const std::uint64_t middle_mask = (top >> 1) - 1; // bits between top and low
    for (;;) {
        const std::uint64_t cand = top | ((rng.next() & middle_mask) << 1) | 1ULL;
        if (is_prime_u64(cand)) return WordPrime(cand);
    }
}

ResidueMatrix reduce_matrix(const IntegerMatrix& a, WordPrime p) {
    ResidueMatrix m(a.n(), p);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            m(i, j) = mpz_fdiv_ui(a(i, j).get_mpz_t(), p.value);
    return m;
}

std::vector<std::uint64_t> reduce_vector(const IntegerVector& v, WordPrime p) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p.value);
    return out;
}

std::uint64_t det_mod_p(const ResidueMatrix& m) {
    const int n = m.n();
    const std::uint64_t p = m.prime().value;
    ResidueMatrix w = m;
    std::uint64_t det = 1 % p;

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < n; ++j)
                std::swap(w(k, j), w(pivot, j));
            det = det == 0 ? 0 : p - det; // sign flip as a residue
        }
        det = mulmod(det, w(k, k), p);
        const std::uint64_t inv = *invmod(w(k, k), p);
        for (int i = k + 1; i < n; ++i) {
            if (w(i, k) == 0) continue;
            const std::uint64_t f = mulmod(w(i, k), inv, p);
            for (int j = k; j < n; ++j)
                w(i, j) = submod(w(i, j), mulmod(f, w(k, j), p), p);
        }
    }
    return det;
}

std::optional<ResidueMatrix> invert_mod_p(const ResidueMatrix& m) {
    const int n = m.n();
    const std::uint64_t p = m.prime().value;
    ResidueMatrix w = m;
    ResidueMatrix inv(n, m.prime());
    for (int i = 0; i < n; ++i) inv(i, i) = 1 % p;

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(w(k, j), w(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const std::uint64_t s = *invmod(w(k, k), p);
        for (int j = 0; j < n; ++j) {
            w(k, j) = mulmod(w(k, j), s, p);
            inv(k, j) = mulmod(inv(k, j), s, p);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w(i, k) == 0) continue;
            const std::uint64_t f = w(i, k);
            for (int j = 0; j < n; ++j) {
                w(i, j) = submod(w(i, j), mulmod(f, w(k, j), p), p);
                inv(i, j) = submod(inv(i, j), mulmod(f, inv(k, j), p), p);
            }
        }
    }
    return inv;
}

std::vector<std::uint64_t> multiply(const ResidueMatrix& m,
                                    const std::vector<std::uint64_t>& v) {
    if (static_cast<int>(v.size()) != m.n())
        throw std::invalid_argument("vector dimension mismatch");
    const std::uint64_t p = m.prime().value;
    std::vector<std::uint64_t> out(v.size(), 0);
    for (int i = 0; i < m.n(); ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < m.n(); ++j)
            acc = addmod(acc, mulmod(m(i, j), v[j], p), p);
        out[i] = acc;
    }
    return out;
}

mpz_class crt_combine(const std::vector<ResiduePair>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("crt_combine needs at least one residue");
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].modulus.value == pairs[j].modulus.value)
                throw std::invalid_argument("duplicate CRT modulus");

    mpz_class x = pairs[0].residue;
    mpz_class m = pairs[0].modulus.value;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const std::uint64_t p = pairs[i].modulus.value;
        const std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
        const std::uint64_t mm = mpz_fdiv_ui(m.get_mpz_t(), p);
        const std::uint64_t delta = submod(pairs[i].residue, xm, p);
        const std::uint64_t step = mulmod(delta, *invmod(mm, p), p);
        x += m * mpz_class(step);
        m *= p;
    }
    // Symmetric representative; m is odd so (m-1)/2 splits the range evenly.
    if (2 * x > m - 1) x -= m;
    return x;
}

} // namespace zdet
