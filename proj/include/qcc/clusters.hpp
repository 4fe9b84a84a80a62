#ifndef QCC_CLUSTERS_HPP
#define QCC_CLUSTERS_HPP

#include <string>
#include <vector>

#include "qcc/affine.hpp"
#include "qcc/homext.hpp"
#include "qcc/quiver.hpp"
#include "qcc/vec.hpp"

namespace qcc {

// Every enumeration of Schur roots is relative to a componentwise cap on
// the positive roots searched; the n negative simples are always included.
struct SearchBound {
    Vec cap;
};

// A set of pairwise ext-orthogonal distinct generalized Schur roots that
// no root within `cap` extends.  `global_max` marks clusters whose
// maximality holds absolutely, not just within the bound (certified for
// affine clusters containing delta when cap >= delta).
struct ComponentCluster {
    std::vector<Vec> roots; // sorted in root order
    Vec cap;
    bool global_max = false;

    bool operator==(const ComponentCluster& o) const { return roots == o.roots; }
};

std::string format_cluster(const ComponentCluster& c);

// all positive Schur roots <= cap plus the n negative simples, sorted
std::vector<Vec> schur_roots_up_to(HomExt& h, const SearchBound& bound);

// ext-orthogonality graph on a set of generalized Schur roots
struct ComponentGraph {
    std::vector<Vec> roots;
    std::vector<std::vector<char>> adj;
};
ComponentGraph component_graph(HomExt& h, const std::vector<Vec>& roots);

// maximal cliques of the component graph within the bound, sorted;
// guard caps the number of cliques
std::vector<ComponentCluster> enumerate_clusters(HomExt& h, const SearchBound& bound,
                                                 size_t guard = 1000000);

// |C1 n C2| = min(|C1|,|C2|) - 1
bool is_mutation(const ComponentCluster& c1, const ComponentCluster& c2);

// all bound-maximal clusters containing C - {alpha} and avoiding alpha;
// empty result means "none within bound"
std::vector<ComponentCluster> mutate(HomExt& h, const ComponentCluster& c, const Vec& alpha,
                                     const SearchBound& bound);

// Exchange relation data for a mutation pair (C1, C2) and a chosen pair
// alpha in C1 - C2, alpha' in C2 - C1 with ext nonvanishing in at least
// one direction: the generic decomposition of alpha + alpha', certified
// different from both and ext-orthogonal to C1 n C2, plus a hosting
// bound-maximal cluster C3 containing C1 n C2 and the parts.
struct ExchangeRelation {
    Vec removed; // alpha
    Vec added;   // alpha'
    std::vector<Vec> parts;
    ComponentCluster c3;
};
ExchangeRelation exchange(HomExt& h, const ComponentCluster& c1, const ComponentCluster& c2,
                          const Vec& alpha, const Vec& alpha_prime, const SearchBound& bound);

// Affine exchange data for a delta cluster and a preprojective real Schur
// root beta that is ext-orthogonal to deltaCluster - {delta}: beta must
// lie in the Phi-orbit of a projective at an extending vertex.  Returns
// (beta1, beta1') with beta1 = delta + beta; beta1' is beta - delta when
// that is a positive root and otherwise the unique other completion
// (possibly a negative simple) found by exhaustive search.
struct AffineExchange {
    Vec beta1;
    Vec beta1_prime;
};
AffineExchange affine_exchange(HomExt& h, const std::vector<Vec>& delta_cluster,
                               const Vec& beta);

// Maximal number of pairwise totally disconnected vertex subsets that
// each induce a connected non-Dynkin subquiver.  Exhaustive; n <= 12.
int wild_imaginary_bound(const Quiver& q);

// The fixed 5-vertex example quiver in two orientations, with the
// certified component cluster containing its sincere fundamental root.
// Vertex order: (top, b1, b2, b3, b4).
struct PaperExample {
    Quiver quiver;
    ComponentCluster cluster;
};
PaperExample paper_example(char orientation); // 'A' or 'B'

// DOT rendering of the bounded mutation graph: one node per cluster
// labeled by its sorted root list, one undirected edge per mutation pair
std::string mutation_graph_dot(const std::vector<ComponentCluster>& clusters);

} // namespace qcc

#endif
