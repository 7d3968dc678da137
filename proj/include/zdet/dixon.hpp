#pragma once
// Dixon p-adic lifting: solve A x = v exactly over the rationals using
// arithmetic mod p^m. One inverse of A mod p is computed up front and
// reused by every lifting step; rational reconstruction turns the p-adic
// image into exact fractions.

#include <optional>

#include "zdet/matrix.hpp"
#include "zdet/modular.hpp"
#include "zdet/rational.hpp"

namespace zdet {

// Least m with p^m > 2 * N * D, (N, D) = solution_bounds(a, v). Enough
// precision for rational_reconstruct to succeed on every coordinate.
int lifting_precision(const IntegerMatrix& a, const IntegerVector& v, WordPrime p);

// One solve in progress. After k steps:
//   accumulated = x_bar mod p^k   with  A * x_bar = v (mod p^k)
//   residual    = (v - A * x_bar) / p^k, exactly (the division is exact at
//                 every step; advance() checks it).
// The referenced matrix and inverse must outlive the state.
class LiftingState {
public:
    LiftingState(const IntegerMatrix& a, const IntegerVector& v, WordPrime p,
                 int precision, const ResidueMatrix& inverse_mod_p);

    int step() const { return step_; }
    int precision() const { return m_; }
    WordPrime prime() const { return p_; }
    bool done() const { return step_ == m_; }
    const IntegerVector& accumulated() const { return accumulated_; }
    const IntegerVector& residual() const { return residual_; }
    const mpz_class& modulus() const { return p_pow_; } // p^step

    void advance();

private:
    const IntegerMatrix* a_;
    const ResidueMatrix* inv_;
    WordPrime p_;
    int m_;
    int step_ = 0;
    IntegerVector accumulated_;
    IntegerVector residual_;
    mpz_class p_pow_ = 1;
};

// Exact rational solution of a x = v, or nullopt when a is singular mod p
// (retry with another prime). The returned x is verified against a by one
// exact multiplication in every build; failure there means a bug and throws.
std::optional<RationalVector> dixon_solve(const IntegerMatrix& a,
                                          const IntegerVector& v, WordPrime p);

// Same, with the caller-supplied inverse of a mod p (must match a and p).
RationalVector dixon_solve_with_inverse(const IntegerMatrix& a,
                                        const IntegerVector& v, WordPrime p,
                                        const ResidueMatrix& inverse_mod_p);

} // namespace zdet
