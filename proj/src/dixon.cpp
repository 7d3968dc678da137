#include "zdet/dixon.hpp"

#include <stdexcept>

namespace zdet {

int lifting_precision(const IntegerMatrix& a, const IntegerVector& v, WordPrime p) {
    const BoundPair b = solution_bounds(a, v);
    const mpz_class target = 2 * b.numerator_bound * b.denominator_bound;
    mpz_class pk = 1;
    int m = 0;
    while (pk <= target) {
        pk *= p.value;
        ++m;
    }
    return m;
}

LiftingState::LiftingState(const IntegerMatrix& a, const IntegerVector& v,
                           WordPrime p, int precision,
                           const ResidueMatrix& inverse_mod_p)
    : a_(&a), inv_(&inverse_mod_p), p_(p), m_(precision),
      accumulated_(a.n(), 0), residual_(v) {
    if (static_cast<int>(v.size()) != a.n())
        throw std::invalid_argument("vector dimension mismatch");
    if (inverse_mod_p.n() != a.n() || inverse_mod_p.prime().value != p.value)
        throw std::invalid_argument("inverse does not match matrix and prime");
    if (precision < 1)
        throw std::invalid_argument("lifting precision must be >= 1");
}

void LiftingState::advance() {
    if (done()) throw std::logic_error("lifting already at full precision");
    const int n = a_->n();
    const std::uint64_t p = p_.value;

    // x_step = inv(A) * residual mod p
    const std::vector<std::uint64_t> x_step =
        multiply(*inv_, reduce_vector(residual_, p_));

    // residual <- (residual - A * x_step) / p, checking exactness; a nonzero
    // remainder cannot happen when x_step solves the system mod p.
    for (int i = 0; i < n; ++i) {
        mpz_class t = residual_[i];
        for (int j = 0; j < n; ++j)
            mpz_submul_ui(t.get_mpz_t(), (*a_)(i, j).get_mpz_t(), x_step[j]);
        const unsigned long rem =
            mpz_tdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        if (rem != 0)
            throw std::logic_error("lifting residual not divisible by p");
        residual_[i] = t;
    }

    for (int j = 0; j < n; ++j)
        accumulated_[j] += p_pow_ * mpz_class(x_step[j]);

    p_pow_ *= p;
    ++step_;
}

RationalVector dixon_solve_with_inverse(const IntegerMatrix& a,
                                        const IntegerVector& v, WordPrime p,
                                        const ResidueMatrix& inverse_mod_p) {
    const int m = lifting_precision(a, v, p);
    LiftingState state(a, v, p, m, inverse_mod_p);
    while (!state.done()) state.advance();

    const BoundPair bounds = solution_bounds(a, v);
    const mpz_class& modulus = state.modulus();

    RationalVector x;
    x.entries.reserve(a.n());
    for (int j = 0; j < a.n(); ++j) {
        auto r = rational_reconstruct(state.accumulated()[j], modulus,
                                      bounds.numerator_bound,
                                      bounds.denominator_bound);
        if (!r)
            throw std::logic_error(
                "rational reconstruction failed at full lifting precision");
        x.entries.push_back(*r);
    }

    // Exact verification: A * (d*x) = d*v over the integers, d = lcm of the
    // denominators. Kept in every build; any failure is a bug, not an input.
    const mpz_class d = denominator_lcm(x);
    IntegerVector scaled(a.n());
    for (int j = 0; j < a.n(); ++j)
        scaled[j] = x[j].get_num() * (d / x[j].get_den());
    const IntegerVector lhs = multiply(a, scaled);
    for (int i = 0; i < a.n(); ++i)
        if (lhs[i] != d * v[i])
            throw std::logic_error("lifted solution fails A*x = v");

    return x;
}

std::optional<RationalVector> dixon_solve(const IntegerMatrix& a,
                                          const IntegerVector& v, WordPrime p) {
    const auto inv = invert_mod_p(reduce_matrix(a, p));
    if (!inv) return std::nullopt;
    return dixon_solve_with_inverse(a, v, p, *inv);
}

} // namespace zdet
