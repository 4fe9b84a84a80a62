#ifndef QCC_FF_ORACLE_HPP
#define QCC_FF_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "qcc/fp.hpp"
#include "qcc/quiver.hpp"
#include "qcc/vec.hpp"

namespace qcc {

// A representation of a quiver over F_p: one d_{t(a)} x d_{s(a)} matrix
// per arrow.  Sampled representations record (seed, p) for exact
// reproducibility.
struct FpRep {
    const Quiver* quiver = nullptr;
    Vec dim;
    long long p = 0;
    uint64_t seed = 0;
    std::vector<FpMat> mats; // one per arrow, in quiver arrow order
};

// i.i.d. uniform entries from a SplitMix64 stream per (seed, arrow index)
FpRep sample_rep(const Quiver& q, const Vec& d, long long p, uint64_t seed);
FpRep sample_rep(Quiver&&, const Vec&, long long, uint64_t) = delete;

// dim of the intertwiner space { f : f_{t(a)} M_a = N_a f_{s(a)} for all a },
// by exact rank over F_p
long long hom_dim(const FpRep& m, const FpRep& n);
long long end_dim(const FpRep& m);

// Sampled proxies for the generic values: minimum over `trials`
// independent samples; exact with high probability for large p.
// ext is always derived from hom via hom - ext = <a,b>.
long long oracle_ext(const Quiver& q, const Vec& a, const Vec& b, long long p,
                     int trials, uint64_t seed = 0);
long long oracle_hom(const Quiver& q, const Vec& a, const Vec& b, long long p,
                     int trials, uint64_t seed = 0);
long long oracle_end(const Quiver& q, const Vec& d, long long p, int trials,
                     uint64_t seed = 0);
bool oracle_is_schur(const Quiver& q, const Vec& d, long long p, int trials,
                     uint64_t seed = 0);

// Exact number of subrepresentations of M with dimension vector e, by
// enumerating row-echelon representatives of the per-vertex subspaces
// and filtering arrow stability.  Guard: total dim of M <= 8.
// field_size, when nonzero, must equal M's prime (reserved knob).
long long grassmannian_count(const FpRep& m, const Vec& e, long long field_size = 0);

} // namespace qcc

#endif
