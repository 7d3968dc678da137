#include "zdet/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace zdet {

namespace {

#ifndef NDEBUG
bool is_canonical(const BigRational& q) {
    if (q.get_den() < 1) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}
#endif

} // namespace

BigRational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<BigRational> rational_reconstruct(const mpz_class& r,
                                                const mpz_class& modulus,
                                                const mpz_class& numerator_bound,
                                                const mpz_class& denominator_bound) {
    if (numerator_bound < 1 || denominator_bound < 1)
        throw std::invalid_argument("reconstruction bounds must be >= 1");
    if (2 * numerator_bound * denominator_bound >= modulus)
        throw std::invalid_argument("reconstruction bounds too large for modulus");
    if (r < 0 || r >= modulus)
        throw std::invalid_argument("residue out of range");

    // Half-extended Euclid on (modulus, r). Invariant: r_k = t_k * r (mod
    // modulus), so the first row with remainder <= numerator_bound is the
    // candidate numerator/denominator pair; with 2*N*D < modulus it is the
    // only one that can satisfy both bounds.
    mpz_class r0 = modulus, r1 = r;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > numerator_bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }

    mpz_class num = r1, den = t1;
    if (den < 0) { den = -den; num = -num; }
    if (den > denominator_bound) return std::nullopt;

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;

    BigRational out(num, den);
    out.canonicalize();
    assert(is_canonical(out));
    return out;
}

mpz_class denominator_lcm(const RationalVector& x) {
    mpz_class l = 1;
    for (const BigRational& e : x.entries) {
        assert(is_canonical(e));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    }
    return l;
}

} // namespace zdet
