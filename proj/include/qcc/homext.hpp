#ifndef QCC_HOMEXT_HPP
#define QCC_HOMEXT_HPP

#include <map>
#include <utility>
#include <vector>

#include "qcc/quiver.hpp"
#include "qcc/vec.hpp"

namespace qcc {

// Generic homological invariants on dimension vectors.
//
// ext(a,b) is the minimal value of dim Ext^1(M,N) over an open dense set
// of pairs; it is computed exactly by Schofield's formula
//
//     ext(a,b) = max { -<a',b> : a' a generic subdimension vector of a }
//
// where a' is a generic subdimension vector of a iff ext(a', a-a') = 0.
// The mutual recursion terminates because the total dimension drops, and
// it revisits subvectors heavily, so everything is memoized per quiver.
// The session object owns the memo tables; clear_cache() empties them.
// Concurrent use from several threads needs external synchronization --
// a single-threaded session satisfies every contract in this library.
class HomExt {
public:
    explicit HomExt(const Quiver& q) : q_(&q) {}
    explicit HomExt(Quiver&&) = delete; // the session only borrows the quiver

    const Quiver& quiver() const { return *q_; }

    // ext(a,b), a,b >= 0
    Int ext(const Vec& a, const Vec& b);
    // hom(a,b) = <a,b> + ext(a,b) >= 0
    Int hom(const Vec& a, const Vec& b);
    // generic subdimension vector test, 0 <= sub <= a
    bool generic_sub(const Vec& sub, const Vec& a);

    // d is a Schur root iff the generic representation has endomorphism
    // ring k; tested by generic theta-stability: every proper nonzero
    // generic subdimension vector b of d satisfies <d,b> < <b,d>
    bool is_schur_root(const Vec& d);

    // ext-orthogonality of generalized Schur roots: positive/positive
    // means ext vanishes both ways; -e_i is orthogonal to a positive d
    // iff d_i = 0; negative simples are pairwise orthogonal
    bool ext_orthogonal(const Vec& a, const Vec& b);

    // Generic decomposition of an arbitrary integer vector:
    // negative coordinates contribute |v_i| copies of -e_i, the
    // nonnegative part is split into positive Schur roots with pairwise
    // vanishing ext.  The certificate (sum, pairwise orthogonality,
    // Schur-ness) is re-verified before returning; uniqueness of the
    // generic decomposition makes any certified answer the right one.
    // Parts are sorted in root order.  norm_guard caps ||v||_1.
    std::vector<Vec> generic_decomposition(const Vec& v, Int norm_guard = 64);

    void clear_cache();

private:
    const Quiver* q_;
    std::map<std::pair<Vec, Vec>, Int> ext_memo_;
    std::map<std::pair<Vec, Vec>, bool> sub_memo_;
    std::map<Vec, bool> schur_memo_;

    bool decompose_dfs(const Vec& remaining, const std::vector<Vec>& candidates,
                       size_t start, std::vector<Vec>& parts);
};

// all vectors v with 0 <= v <= cap, in lexicographic order
std::vector<Vec> vectors_below(const Vec& cap, bool skip_zero = true);

} // namespace qcc

#endif
