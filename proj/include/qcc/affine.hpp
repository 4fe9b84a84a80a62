#ifndef QCC_AFFINE_HPP
#define QCC_AFFINE_HPP

#include <string>
#include <vector>

#include "qcc/homext.hpp"
#include "qcc/quiver.hpp"
#include "qcc/vec.hpp"

namespace qcc {

// delta: the primitive positive generator of the radical of the
// symmetrized Euler form of a connected affine quiver.  Throws
// domain_error when the quiver is not connected affine.
Vec affine_delta(const Quiver& q);

enum class RegularClass { Preprojective, Regular, Preinjective };
const char* to_string(RegularClass c);

// defect <delta, d>; negative for preprojectives, positive for
// preinjectives, zero exactly on the regular roots
Int defect(const Quiver& q, const Vec& delta, const Vec& d);

// trichotomy of a positive root of an affine quiver
RegularClass regular_class(const Quiver& q, const Vec& delta, const Vec& d);

// vertices e with delta_e = 1
std::vector<int> extending_vertices(const Vec& delta);

// An exceptional tube: the cyclically ordered dimension vectors of its
// regular simples, s_{k+1} = Phi s_k, starting from the lexicographically
// smallest one.  rank = number of simples >= 2; the simples sum to delta.
struct Tube {
    std::vector<Vec> simples;
    int rank() const { return static_cast<int>(simples.size()); }
};

// All exceptional tubes, discovered as Phi-orbits of real regular Schur
// roots <= delta whose orbit sums to delta.  Tubes are sorted by their
// first simple; the ranks satisfy sum (rank - 1) = n - 2.
std::vector<Tube> tubes(const Quiver& q, const Vec& delta, HomExt& h);

// Cyclic interval on the p+1 points {0..p} for a rank-p tube.  Canonical
// encoding: start i in {0..p-1} and length 1 <= L <= p-1 with j = (i+L)
// mod (p+1), plus [0,p] for delta.  The interval [i,j] carries the root
// with regular composition series s_i, s_{i+1}, ..., s_{i+L-1} (simple
// indices mod p).
struct Interval {
    int i = 0;
    int j = 0;
    std::string str() const { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
    bool operator==(const Interval&) const = default;
};

int interval_length(int rank, Interval iv); // number of simples in the series
Vec root_of_interval(const Tube& t, Interval iv);
Interval interval_of_root(const Tube& t, const Vec& d); // domain_error if absent

// literal set predicate on the point sets {i,...,j} mod rank+1:
// compatible iff disjoint or nested
bool compatible(int rank, Interval a, Interval b);

// Maximal sets of pairwise ext-orthogonal real Schur roots inside one
// tube; each has exactly rank-1 elements and every element has at most
// rank-1 simples in its series.  Deterministic lexicographic order.
std::vector<std::vector<Vec>> maximal_rigid_sets(const Tube& t, HomExt& h);

// All component clusters containing delta: {delta} plus one maximal
// rigid set per tube; every cluster has size n-1 and is certified
// pairwise ext-orthogonal.  Exhaustive.
std::vector<std::vector<Vec>> delta_clusters(const Quiver& q, const Vec& delta, HomExt& h);

} // namespace qcc

#endif
