#ifndef QCC_FP_HPP
#define QCC_FP_HPP

#include <cstdint>
#include <vector>

#include "qcc/errors.hpp"

namespace qcc {

// Dense matrix over F_p with exact Gaussian elimination.  Entries are
// stored as canonical representatives in [0, p).
struct FpMat {
    int rows = 0;
    int cols = 0;
    long long p = 0;
    std::vector<long long> a; // row-major

    FpMat() = default;
    FpMat(int r, int c, long long prime)
        : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
};

inline long long fp_norm(long long x, long long p) {
    long long r = x % p;
    return r < 0 ? r + p : r;
}

inline long long fp_inv(long long x, long long p) {
    // extended Euclid
    long long a = fp_norm(x, p), b = p, u = 1, v = 0;
    while (b) {
        long long t = a / b;
        a -= t * b;
        std::swap(a, b);
        u -= t * v;
        std::swap(u, v);
    }
    require_internal(a == 1, "inverse of non-unit mod p");
    return fp_norm(u, p);
}

// in-place row reduction; returns the rank
inline int fp_rank(FpMat m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        long long inv = fp_inv(m.at(rank, col), m.p);
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = fp_norm(m.at(rank, c) * inv, m.p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            long long f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = fp_norm(m.at(r, c) - f * m.at(rank, c), m.p);
        }
        ++rank;
    }
    return rank;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace qcc

#endif
