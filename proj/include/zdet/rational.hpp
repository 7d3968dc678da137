#pragma once
// Exact rationals, rational reconstruction from a single modular image, and
// the denominator-lcm extraction that turns a solved system into a divisor
// of the determinant.
//
// BigRational is GMP's canonical rational: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. Every mpq operation preserves that form.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace zdet {

using BigRational = mpq_class;

struct RationalVector {
    std::vector<BigRational> entries;

    int n() const { return static_cast<int>(entries.size()); }
    BigRational& operator[](int i) { return entries[i]; }
    const BigRational& operator[](int i) const { return entries[i]; }
};

BigRational make_rational(const mpz_class& num, const mpz_class& den);

// Recovers the unique p/q with |p| <= numerator_bound, 1 <= q <=
// denominator_bound, and p = q*r (mod modulus), by running extended Euclid
// on (modulus, r) and stopping at the first remainder <= numerator_bound.
// nullopt when the stopping row violates the bounds: no valid preimage.
// Requires 2 * numerator_bound * denominator_bound < modulus.
std::optional<BigRational> rational_reconstruct(const mpz_class& r,
                                                const mpz_class& modulus,
                                                const mpz_class& numerator_bound,
                                                const mpz_class& denominator_bound);

// lcm of all entry denominators; 1 for an all-integer vector.
mpz_class denominator_lcm(const RationalVector& x);

} // namespace zdet
