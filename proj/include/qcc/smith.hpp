#ifndef QCC_SMITH_HPP
#define QCC_SMITH_HPP

#include <cstdlib>
#include <utility>
#include <vector>

#include "qcc/vec.hpp"

namespace qcc {

// Smith normal form over the integers by row/column reduction, pivoting
// on the entry of least absolute value.  Returns the nonzero elementary
// divisors d_1 | d_2 | ... (positive).  Entry growth is harmless at the
// matrix sizes this library meets.
inline std::vector<Int> smith_divisors(std::vector<Vec> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> divisors;
    size_t top = 0, left = 0;
    while (top < rows && left < cols) {
        // locate the smallest nonzero entry in the remaining block
        size_t pr = rows, pc = cols;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = left; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr == rows || std::abs(m[i][j]) < std::abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break; // block is zero
        std::swap(m[top], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][left], m[i][pc]);

        bool clean = true;
        for (size_t i = top + 1; i < rows; ++i)
            if (m[i][left] != 0) {
                Int f = m[i][left] / m[top][left];
                for (size_t j = left; j < cols; ++j) m[i][j] -= f * m[top][j];
                if (m[i][left] != 0) clean = false;
            }
        for (size_t j = left + 1; j < cols; ++j)
            if (m[top][j] != 0) {
                Int f = m[top][j] / m[top][left];
                for (size_t i = top; i < rows; ++i) m[i][j] -= f * m[i][left];
                if (m[top][j] != 0) clean = false;
            }
        if (!clean) continue; // smaller remainder appeared, re-pivot

        divisors.push_back(std::abs(m[top][left]));
        ++top;
        ++left;
    }
    // enforce the divisibility chain d_1 | d_2 | ...
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] != 0) {
                Int a = divisors[i], b = divisors[j];
                Int g = a, h = b;
                while (h) {
                    Int t = g % h;
                    g = h;
                    h = t;
                }
                divisors[i] = g;
                divisors[j] = a / g * b;
            }
    return divisors;
}

// (rank, pure): pure iff the span is a saturated sublattice of Z^n,
// i.e. every nonzero elementary divisor equals 1
inline std::pair<int, bool> lattice_rank_purity(const std::vector<Vec>& vectors) {
    auto div = smith_divisors(vectors);
    bool pure = true;
    for (Int d : div)
        if (d != 1) pure = false;
    return {static_cast<int>(div.size()), pure};
}

} // namespace qcc

#endif
