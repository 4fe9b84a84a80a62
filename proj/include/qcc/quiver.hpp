#ifndef QCC_QUIVER_HPP
#define QCC_QUIVER_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcc/vec.hpp"

namespace qcc {

using Mat = std::vector<Vec>; // row-major integer matrix

// Finite acyclic quiver with totally ordered vertices 0..n-1 (1-based in
// all user-facing I/O).  Multiple arrows are allowed, loops and oriented
// cycles are rejected at construction.  Immutable after construction;
// all derived matrices are precomputed, so every operation on it is a
// pure function and thread-safe.
class Quiver {
public:
    static Quiver from_arrows(int n, std::vector<std::pair<int, int>> arrows);

    // Text format:
    //   vertices N
    //   arrow S T        (1-based; repeated lines = multiple arrows)
    // '#' starts a comment, blank lines are ignored.
    static Quiver parse(std::istream& in);
    static Quiver parse_string(const std::string& text);
    static Quiver load(const std::string& path);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    // number of arrows i -> j
    Int arrow_count(int i, int j) const { return adj_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    bool edge(int i, int j) const { return arrow_count(i, j) + arrow_count(j, i) != 0; }

    const Mat& euler_matrix() const { return euler_; }      // E, <a,b> = a^T E b
    const Mat& euler_inverse() const { return euler_inv_; } // E^{-1} (paths matrix)
    const Mat& coxeter_matrix() const { return cox_; }      // -E^{-T} E
    const Mat& coxeter_inverse() const { return cox_inv_; } // -E^{-1} E^T
    const std::vector<int>& topological_order() const { return topo_; }

    std::string to_text() const;

private:
    Quiver() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> arrows_;
    Mat adj_;       // adj_[i][j] = #arrows i->j
    Mat euler_, euler_inv_, cox_, cox_inv_;
    std::vector<int> topo_;
};

// ---- forms -----------------------------------------------------------

Int euler_form(const Quiver& q, const Vec& a, const Vec& b);
Int sym_form(const Quiver& q, const Vec& a, const Vec& b); // <a,b> + <b,a>
Int tits_form(const Quiver& q, const Vec& a);              // <a,a>

// ---- reflections and the Coxeter transformation ----------------------

// simple reflection s_i(a) = a - (a, e_i) e_i
Vec reflect(const Quiver& q, const Vec& a, int i);

// Phi^k a where Phi = -E^{-T} E.  Phi fixes the Tits form and, on
// dimension vectors of non-injective indecomposables, acts as the
// inverse Auslander-Reiten translate (Phi dim M = dim tau^{-1} M);
// negative k gives the tau direction.
Vec coxeter_apply(const Quiver& q, const Vec& a, Int k);

// ---- supports, fundamental domain, null cone --------------------------

std::vector<int> support(const Vec& a);
bool support_connected(const Quiver& q, const Vec& a); // false for a = 0
bool is_sincere(const Vec& a);

// a >= 0, (a, e_i) <= 0 for all i, connected support
bool is_fundamental(const Quiver& q, const Vec& a);

// { i : (e_i, a) = 0 }
std::vector<int> null_cone(const Quiver& q, const Vec& a);

// reflection word moving a positive imaginary root into the fundamental
// domain; word lists vertices in application order (first applied first)
struct FundamentalDescent {
    std::vector<int> word;
    Vec vector;
};
FundamentalDescent to_fundamental(const Quiver& q, const Vec& a);

// ---- classification ----------------------------------------------------

enum class QuiverClass { Dynkin, Affine, Wild };
const char* to_string(QuiverClass c);

// connected components (undirected), each sorted, ordered by least vertex
std::vector<std::vector<int>> components(const Quiver& q);

// class of each connected component, via exact rational LDL^T of the
// symmetrized Gram matrix
std::vector<std::pair<std::vector<int>, QuiverClass>> classify(const Quiver& q);

// convenience for connected quivers
QuiverClass classify_connected(const Quiver& q);

enum class RootType { Real, Isotropic, ImaginaryNonIsotropic, NotARoot, NegativeSimple };
const char* to_string(RootType t);

// Weyl-orbit root test: reflection descent to a simple root for real
// candidates, transport into the fundamental domain for imaginary ones.
RootType is_root(const Quiver& q, const Vec& d);

// ---- subquivers --------------------------------------------------------

// full subquiver on the (0-based) vertex set S; vertices are re-indexed
// in increasing order of their original index
Quiver subquiver(const Quiver& q, const std::vector<int>& s);

// S and T disjoint and no arrow joins them (either direction)
bool totally_disconnected(const Quiver& q, const std::vector<int>& s,
                          const std::vector<int>& t);

} // namespace qcc

#endif
