#ifndef QCC_CLIQUES_HPP
#define QCC_CLIQUES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "qcc/errors.hpp"

namespace qcc {

// Bron-Kerbosch maximal clique enumeration with pivoting.  Vertices are
// 0..n-1; the adjacency matrix must be symmetric with a false diagonal.
// Deterministic: candidate sets are kept sorted and the pivot is the
// smallest-index vertex of maximal degree within P union X.
inline void max_cliques(const std::vector<std::vector<char>>& adj, size_t guard,
                        const std::function<void(const std::vector<int>&)>& emit) {
    int n = static_cast<int>(adj.size());
    size_t emitted = 0;

    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> go =
        [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                if (++emitted > guard) throw size_error("maximal clique guard exceeded");
                emit(r);
                return;
            }
            int pivot = -1;
            size_t best = 0;
            for (const auto& set : {p, x})
                for (int u : set) {
                    size_t deg = 0;
                    for (int v : p)
                        if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) ++deg;
                    if (pivot < 0 || deg > best) {
                        pivot = u;
                        best = deg;
                    }
                }
            std::vector<int> ext;
            for (int v : p)
                if (!adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) ext.push_back(v);
            for (int v : ext) {
                std::vector<int> np, nx;
                for (int w : p)
                    if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) np.push_back(w);
                for (int w : x)
                    if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) nx.push_back(w);
                r.push_back(v);
                go(r, std::move(np), std::move(nx));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.insert(std::lower_bound(x.begin(), x.end(), v), v);
            }
        };

    std::vector<int> r, p(static_cast<size_t>(n)), x;
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    go(r, std::move(p), std::move(x));
}

} // namespace qcc

#endif
