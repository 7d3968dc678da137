#pragma once
// Slow exact determinants used to cross-validate the fast paths.
// Kept out of matrix.hpp on purpose: the modular layer includes the matrix
// type but must never see an integer determinant.

#include "zdet/matrix.hpp"

namespace zdet {

// Cofactor expansion. Factorial cost; refuses n > 10.
mpz_class det_cofactor(const IntegerMatrix& a);

// Bareiss fraction-free elimination. Every division is exact; polynomial
// time, any dimension.
mpz_class det_bareiss(const IntegerMatrix& a);

} // namespace zdet
