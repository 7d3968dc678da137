#pragma once
// Square matrices of exact integers: storage, text/JSON I/O, seeded random
// generation, and the Hadamard-type bounds used to size modular computations.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdet/rng.hpp"

namespace zdet {

using IntegerVector = std::vector<mpz_class>;

class IntegerMatrix {
public:
    explicit IntegerMatrix(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
        entries_.resize(static_cast<std::size_t>(n) * n);
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix a(n);
        for (int i = 0; i < n; ++i) a(i, i) = 1;
        return a;
    }

    int n() const { return n_; }

    mpz_class& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    const mpz_class& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool operator==(const IntegerMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

private:
    int n_;
    std::vector<mpz_class> entries_;
};

// Thrown by the parsers. line is 1-based in the input text, 0 when the
// position cannot be attributed to a line (JSON parse failures).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format: first line is the dimension n, then n lines of n decimal
// integers separated by spaces or tabs. Trailing newline optional.
IntegerMatrix parse_matrix(std::istream& in);
IntegerMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const IntegerMatrix& a);

// JSON format: {"n": ..., "entries": [[...], ...]} where an entry is either
// a number or a decimal string (used past 2^53 where doubles lose exactness).
IntegerMatrix parse_matrix_json(const std::string& text);
std::string serialize_matrix_json(const IntegerMatrix& a);

// Entries uniform in [-entry_bound, entry_bound], drawn row-major from
// Rng(seed). entry_bound <= 2^62.
IntegerMatrix random_matrix(int n, std::uint64_t entry_bound, std::uint64_t seed);
IntegerVector random_vector(int n, std::uint64_t entry_bound, Rng& rng);

struct BoundPair {
    mpz_class numerator_bound;
    mpz_class denominator_bound;
};

// Smallest integer s with s*s >= x. Requires x >= 0.
mpz_class ceil_sqrt(const mpz_class& x);

// H with |det(A)| <= H: ceiling of the product of the Euclidean norms of
// the columns, computed exactly as ceil_sqrt of the product of squared
// column norms. A zero column gives H = 0.
mpz_class hadamard_bound(const IntegerMatrix& a);

// Cramer bounds for the solution of A x = v: every coordinate of x is a
// ratio of two determinants, so numerators are bounded by the Hadamard
// bound of A with one column replaced by v (the minimal-norm column is
// replaced, maximizing the remaining product) and denominators by the
// Hadamard bound of A itself. Both are clamped to >= 1.
BoundPair solution_bounds(const IntegerMatrix& a, const IntegerVector& v);

IntegerMatrix transpose(const IntegerMatrix& a);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector multiply(const IntegerMatrix& a, const IntegerVector& v);
mpz_class max_abs_entry(const IntegerMatrix& a);

} // namespace zdet
