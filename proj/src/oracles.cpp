#include "zdet/oracles.hpp"

#include <utility>
#include <vector>

namespace zdet {

namespace {

mpz_class det_cofactor_rec(const IntegerMatrix& a, std::vector<int>& cols, int row) {
    const int k = static_cast<int>(cols.size());
    if (k == 1) return a(row, cols[0]);
    mpz_class acc = 0;
    for (int idx = 0; idx < k; ++idx) {
        const int col = cols[idx];
        if (a(row, col) == 0) continue;
        cols.erase(cols.begin() + idx);
        mpz_class minor = det_cofactor_rec(a, cols, row + 1);
        cols.insert(cols.begin() + idx, col);
        if (idx % 2 == 0)
            acc += a(row, col) * minor;
        else
            acc -= a(row, col) * minor;
    }
    return acc;
}

} // namespace

mpz_class det_cofactor(const IntegerMatrix& a) {
    if (a.n() > 10)
        throw std::invalid_argument("cofactor determinant limited to n <= 10");
    std::vector<int> cols(a.n());
    for (int j = 0; j < a.n(); ++j) cols[j] = j;
    return det_cofactor_rec(a, cols, 0);
}

mpz_class det_bareiss(const IntegerMatrix& a) {
    const int n = a.n();
    IntegerMatrix m = a;
    mpz_class prev = 1; // pivot of the previous step; divisions by it are exact
    int sign = 1;

    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < n; ++j)
                std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace zdet
