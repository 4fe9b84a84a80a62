#include "qcc/ff_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "qcc/errors.hpp"
#include "qcc/rng.hpp"

namespace qcc {

FpRep sample_rep(const Quiver& q, const Vec& d, long long p, uint64_t seed) {
    check(static_cast<int>(d.size()) == q.n(), "vector length mismatch");
    check(is_nonneg(d), "sample_rep expects a nonnegative dimension vector");
    check(p >= 101 && is_prime(p), "sample_rep needs a prime p >= 101");
    FpRep rep;
    rep.quiver = &q;
    rep.dim = d;
    rep.p = p;
    rep.seed = seed;
    for (size_t a = 0; a < q.arrows().size(); ++a) {
        auto [s, t] = q.arrows()[a];
        FpMat m(static_cast<int>(d[static_cast<size_t>(t)]), static_cast<int>(d[static_cast<size_t>(s)]), p);
        SplitMix64 g(mix_seed(seed, a));
        for (auto& x : m.a) x = static_cast<long long>(g.next_below(static_cast<uint64_t>(p)));
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

long long hom_dim(const FpRep& m, const FpRep& n) {
    check(m.quiver == n.quiver || (m.quiver && n.quiver && m.quiver->arrows() == n.quiver->arrows() &&
                                   m.quiver->n() == n.quiver->n()),
          "hom_dim needs representations of the same quiver");
    check(m.p == n.p, "hom_dim needs matching primes");
    const Quiver& q = *m.quiver;
    int nv = q.n();

    // unknowns: f_i in Hom(k^{dm_i}, k^{dn_i}), entries flattened per vertex
    std::vector<long long> offset(static_cast<size_t>(nv) + 1, 0);
    for (int i = 0; i < nv; ++i)
        offset[static_cast<size_t>(i) + 1] =
            offset[static_cast<size_t>(i)] + m.dim[static_cast<size_t>(i)] * n.dim[static_cast<size_t>(i)];
    long long vars = offset[static_cast<size_t>(nv)];
    if (vars == 0) return 0;

    long long eqs = 0;
    for (size_t a = 0; a < q.arrows().size(); ++a) {
        auto [s, t] = q.arrows()[a];
        eqs += n.dim[static_cast<size_t>(t)] * m.dim[static_cast<size_t>(s)];
    }

    FpMat sys(static_cast<int>(eqs), static_cast<int>(vars), m.p);
    // f_v(r,c) sits at offset[v] + r*dm_v + c, where f_v is dn_v x dm_v
    auto var_index = [&](int vtx, int r, int c) {
        return offset[static_cast<size_t>(vtx)] + static_cast<long long>(r) * m.dim[static_cast<size_t>(vtx)] + c;
    };
    long long row = 0;
    for (size_t a = 0; a < q.arrows().size(); ++a) {
        auto [s, t] = q.arrows()[a];
        int dms = static_cast<int>(m.dim[static_cast<size_t>(s)]);
        int dmt = static_cast<int>(m.dim[static_cast<size_t>(t)]);
        int dns = static_cast<int>(n.dim[static_cast<size_t>(s)]);
        int dnt = static_cast<int>(n.dim[static_cast<size_t>(t)]);
        const FpMat& ma = m.mats[a];
        const FpMat& na = n.mats[a];
        // (f_t M_a - N_a f_s)(r, c) = 0  for r < dn_t, c < dm_s
        for (int r = 0; r < dnt; ++r)
            for (int c = 0; c < dms; ++c) {
                int ri = static_cast<int>(row);
                for (int k = 0; k < dmt; ++k) {
                    int vi = static_cast<int>(var_index(t, r, k));
                    sys.at(ri, vi) = fp_norm(sys.at(ri, vi) + ma.at(k, c), m.p);
                }
                for (int k = 0; k < dns; ++k) {
                    int vi = static_cast<int>(var_index(s, k, c));
                    sys.at(ri, vi) = fp_norm(sys.at(ri, vi) - na.at(r, k), m.p);
                }
                ++row;
            }
    }
    return vars - fp_rank(std::move(sys));
}

long long end_dim(const FpRep& m) { return hom_dim(m, m); }

long long oracle_hom(const Quiver& q, const Vec& a, const Vec& b, long long p,
                     int trials, uint64_t seed) {
    check(trials >= 1, "oracle needs trials >= 1");
    long long best = -1;
    for (int t = 0; t < trials; ++t) {
        FpRep m = sample_rep(q, a, p, mix_seed(seed, 2 * static_cast<uint64_t>(t)));
        FpRep n = sample_rep(q, b, p, mix_seed(seed, 2 * static_cast<uint64_t>(t) + 1));
        long long h = hom_dim(m, n);
        if (best < 0 || h < best) best = h;
    }
    return best;
}

long long oracle_ext(const Quiver& q, const Vec& a, const Vec& b, long long p,
                     int trials, uint64_t seed) {
    // hom - ext = <a,b> holds for every pair of representations, so the
    // sampled minimum of hom gives the sampled minimum of ext
    long long e = oracle_hom(q, a, b, p, trials, seed) - euler_form(q, a, b);
    require_internal(e >= 0, "oracle ext came out negative");
    return e;
}

long long oracle_end(const Quiver& q, const Vec& d, long long p, int trials,
                     uint64_t seed) {
    check(trials >= 1, "oracle needs trials >= 1");
    check(!is_zero(d), "oracle_end expects a nonzero dimension vector");
    long long best = -1;
    for (int t = 0; t < trials; ++t) {
        FpRep m = sample_rep(q, d, p, mix_seed(seed, static_cast<uint64_t>(t)));
        long long e = end_dim(m);
        if (best < 0 || e < best) best = e;
    }
    return best;
}

bool oracle_is_schur(const Quiver& q, const Vec& d, long long p, int trials,
                     uint64_t seed) {
    return oracle_end(q, d, p, trials, seed) == 1;
}

namespace {

// number of e-dimensional subspaces of F_p^d (Gaussian binomial)
__int128 gaussian_binomial(int d, int e, long long p) {
    __int128 num = 1, den = 1;
    for (int i = 0; i < e; ++i) {
        __int128 pn = 1, pk = 1;
        for (int j = 0; j < d - i; ++j) pn *= p;
        for (int j = 0; j < e - i; ++j) pk *= p;
        num *= pn - 1;
        den *= pk - 1;
    }
    return num / den;
}

// All e-dimensional subspaces of F_p^d as reduced row-echelon bases.
std::vector<FpMat> subspaces(int d, int e, long long p) {
    std::vector<FpMat> out;
    if (e == 0) {
        out.emplace_back(0, d, p);
        return out;
    }
    std::vector<int> piv(static_cast<size_t>(e));
    std::iota(piv.begin(), piv.end(), 0);
    for (;;) {
        // free entries sit right of a row's pivot, in non-pivot columns
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < e; ++r)
            for (int c = piv[static_cast<size_t>(r)] + 1; c < d; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free_pos.emplace_back(r, c);
        std::vector<long long> vals(free_pos.size(), 0);
        for (;;) {
            FpMat m(e, d, p);
            for (int r = 0; r < e; ++r) m.at(r, piv[static_cast<size_t>(r)]) = 1;
            for (size_t i = 0; i < free_pos.size(); ++i)
                m.at(free_pos[i].first, free_pos[i].second) = vals[i];
            out.push_back(std::move(m));
            size_t i = 0;
            while (i < vals.size() && vals[i] == p - 1) vals[i++] = 0;
            if (i == vals.size()) break;
            ++vals[i];
        }
        int r = e - 1;
        while (r >= 0 && piv[static_cast<size_t>(r)] == d - e + r) --r;
        if (r < 0) break;
        ++piv[static_cast<size_t>(r)];
        for (int s = r + 1; s < e; ++s) piv[static_cast<size_t>(s)] = piv[static_cast<size_t>(s) - 1] + 1;
    }
    return out;
}

// is the row vector v in the row space of the RREF basis b?
bool in_rowspace(const FpMat& b, std::vector<long long> v) {
    long long p = b.p;
    for (int r = 0; r < b.rows; ++r) {
        int lead = -1;
        for (int c = 0; c < b.cols; ++c)
            if (b.at(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        long long f = fp_norm(v[static_cast<size_t>(lead)] * fp_inv(b.at(r, lead), p), p);
        if (f == 0) continue;
        for (int c = 0; c < b.cols; ++c)
            v[static_cast<size_t>(c)] = fp_norm(v[static_cast<size_t>(c)] - f * b.at(r, c), p);
    }
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

long long grassmannian_count(const FpRep& m, const Vec& e, long long field_size) {
    const Quiver& q = *m.quiver;
    check(static_cast<int>(e.size()) == q.n(), "vector length mismatch");
    check(is_nonneg(e) && leq(e, m.dim), "subdimension must satisfy 0 <= e <= dim M");
    if (field_size != 0)
        check(field_size == m.p, "field size override must match the representation's prime");
    Int total = 0;
    for (Int x : m.dim) total += x;
    if (total > 8) throw size_error("grassmannian_count guard: total dimension > 8");

    int nv = q.n();
    // the enumeration walks every tuple of per-vertex subspaces; keep the
    // walk within a fixed budget so a large prime cannot run away
    __int128 tuples = 1;
    for (int i = 0; i < nv; ++i)
        tuples *= gaussian_binomial(static_cast<int>(m.dim[static_cast<size_t>(i)]),
                                    static_cast<int>(e[static_cast<size_t>(i)]), m.p);
    if (tuples > 20000000)
        throw size_error("grassmannian_count guard: too many subspaces at p=" + std::to_string(m.p));
    std::vector<std::vector<FpMat>> per_vertex(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i)
        per_vertex[static_cast<size_t>(i)] = subspaces(static_cast<int>(m.dim[static_cast<size_t>(i)]),
                                                       static_cast<int>(e[static_cast<size_t>(i)]), m.p);

    std::vector<size_t> pick(static_cast<size_t>(nv), 0);
    long long count = 0;
    for (;;) {
        bool stable = true;
        for (size_t a = 0; a < q.arrows().size() && stable; ++a) {
            auto [s, t] = q.arrows()[a];
            const FpMat& vs = per_vertex[static_cast<size_t>(s)][pick[static_cast<size_t>(s)]];
            const FpMat& vt = per_vertex[static_cast<size_t>(t)][pick[static_cast<size_t>(t)]];
            const FpMat& ma = m.mats[a];
            for (int r = 0; r < vs.rows && stable; ++r) {
                std::vector<long long> img(static_cast<size_t>(ma.rows), 0);
                for (int i = 0; i < ma.rows; ++i) {
                    long long acc = 0;
                    for (int j = 0; j < ma.cols; ++j) acc += ma.at(i, j) * vs.at(r, j);
                    img[static_cast<size_t>(i)] = fp_norm(acc, m.p);
                }
                if (!in_rowspace(vt, std::move(img))) stable = false;
            }
        }
        if (stable) ++count;
        size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == per_vertex[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    return count;
}

} // namespace qcc
