#include "qcc/affine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qcc/errors.hpp"
#include "qcc/rational.hpp"

namespace qcc {

Vec affine_delta(const Quiver& q) {
    check(classify_connected(q) == QuiverClass::Affine,
          "delta is defined for connected affine quivers only");
    int n = q.n();
    // one-dimensional rational nullspace of the symmetrized Gram matrix
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rat(sym_form(q, unit_vec(n, i), unit_vec(n, j)));

    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(piv)]);
        Rat lead = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int c = 0; c < n; ++c)
            m[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(c)] / lead;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    require_internal(rank == n - 1, "affine Gram matrix must have a 1-dimensional radical");

    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_piv[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_piv[static_cast<size_t>(c)]) free_col = c;
    std::vector<Rat> x(static_cast<size_t>(n));
    x[static_cast<size_t>(free_col)] = Rat(1);
    for (int r = 0; r < rank; ++r)
        x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
            -m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];

    // scale to the primitive integer vector
    __int128 l = 1;
    for (auto& v : x) l = l / Rat::gcd128(l, v.den) * v.den;
    Vec d(static_cast<size_t>(n));
    __int128 g = 0;
    for (int i = 0; i < n; ++i) {
        __int128 vi = x[static_cast<size_t>(i)].num * (l / x[static_cast<size_t>(i)].den);
        d[static_cast<size_t>(i)] = static_cast<Int>(vi);
        g = Rat::gcd128(g, vi);
    }
    require_internal(g > 0, "radical generator is zero");
    for (auto& v : d) v /= static_cast<Int>(g);
    bool has_neg = false;
    for (Int v : d) has_neg = has_neg || v < 0;
    if (has_neg)
        for (auto& v : d) v = -v;
    require_internal(is_nonneg(d) && !is_zero(d), "radical generator is not positive");
    require_internal(tits_form(q, d) == 0, "delta must be isotropic");
    for (int i = 0; i < n; ++i)
        require_internal(sym_form(q, d, unit_vec(n, i)) == 0, "delta must span the radical");
    return d;
}

const char* to_string(RegularClass c) {
    switch (c) {
        case RegularClass::Preprojective: return "Preprojective";
        case RegularClass::Regular: return "Regular";
        default: return "Preinjective";
    }
}

Int defect(const Quiver& q, const Vec& delta, const Vec& d) {
    return euler_form(q, delta, d);
}

RegularClass regular_class(const Quiver& q, const Vec& delta, const Vec& d) {
    RootType t = is_root(q, d);
    check(t == RootType::Real || t == RootType::Isotropic,
          "regular_class expects a positive root, got " + format_vec(d) + " (" +
              std::string(to_string(t)) + ")");
    Int def = defect(q, delta, d);
    if (def < 0) return RegularClass::Preprojective;
    if (def > 0) return RegularClass::Preinjective;
    return RegularClass::Regular;
}

std::vector<int> extending_vertices(const Vec& delta) {
    std::vector<int> out;
    for (size_t i = 0; i < delta.size(); ++i)
        if (delta[i] == 1) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<Tube> tubes(const Quiver& q, const Vec& delta, HomExt& h) {
    // Regular Schurian roots are exactly the regular roots <= delta; the
    // real ones fill the first rank-1 rows of each exceptional tube, and a
    // Phi-orbit of row-l roots sums to l*delta, so the regular simples are
    // the orbits summing to delta itself.
    std::set<Vec> pool;
    for (const Vec& d : vectors_below(delta)) {
        if (tits_form(q, d) != 1) continue;
        if (defect(q, delta, d) != 0) continue;
        if (!h.is_schur_root(d)) continue;
        pool.insert(d);
    }
    std::vector<Tube> out;
    std::set<Vec> used;
    for (const Vec& start : pool) {
        if (used.count(start)) continue;
        std::vector<Vec> orbit{start};
        Vec cur = coxeter_apply(q, start, 1);
        while (cur != start) {
            require_internal(pool.count(cur) > 0, "Phi-orbit left the regular Schur pool");
            require_internal(orbit.size() <= pool.size(), "Phi-orbit failed to close");
            orbit.push_back(cur);
            cur = coxeter_apply(q, cur, 1);
        }
        Vec sum = zero_vec(q.n());
        for (const Vec& v : orbit) {
            sum = add(sum, v);
            used.insert(v);
        }
        if (sum != delta) continue; // longer rows, not simples
        size_t best = 0;
        for (size_t i = 1; i < orbit.size(); ++i)
            if (orbit[i] < orbit[best]) best = i;
        std::rotate(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(best), orbit.end());
        require_internal(orbit.size() >= 2, "exceptional tube must have rank >= 2");
        out.push_back(Tube{std::move(orbit)});
    }
    std::sort(out.begin(), out.end(),
              [](const Tube& a, const Tube& b) { return a.simples[0] < b.simples[0]; });
    Int ranksum = 0;
    for (const Tube& t : out) ranksum += t.rank() - 1;
    require_internal(ranksum == q.n() - 2,
                     "tube ranks must satisfy sum(rank - 1) = n - 2");
    return out;
}

int interval_length(int rank, Interval iv) {
    int m = rank + 1;
    check(iv.i >= 0 && iv.i <= rank && iv.j >= 0 && iv.j <= rank && iv.i != iv.j,
          "interval endpoints must be distinct points of {0..rank}");
    int len = ((iv.j - iv.i) % m + m) % m;
    // canonical encoding: start < rank, and only [0,rank] has length rank
    check(len == rank ? (iv.i == 0) : (iv.i < rank),
          "non-canonical interval " + iv.str() + " for rank " + std::to_string(rank));
    return len;
}

Vec root_of_interval(const Tube& t, Interval iv) {
    int p = t.rank();
    int len = interval_length(p, iv);
    Vec r = zero_vec(static_cast<int>(t.simples[0].size()));
    for (int k = 0; k < len; ++k) r = add(r, t.simples[static_cast<size_t>((iv.i + k) % p)]);
    return r;
}

Interval interval_of_root(const Tube& t, const Vec& d) {
    int p = t.rank();
    for (int i = 0; i < p; ++i)
        for (int len = 1; len <= p - 1; ++len) {
            Interval iv{i, (i + len) % (p + 1)};
            if (root_of_interval(t, iv) == d) return iv;
        }
    Interval full{0, p};
    if (root_of_interval(t, full) == d) return full;
    throw domain_error("root " + format_vec(d) + " does not belong to this tube");
}

bool compatible(int rank, Interval a, Interval b) {
    int m = rank + 1;
    auto points = [&](Interval iv) {
        std::set<int> s;
        int len = ((iv.j - iv.i) % m + m) % m;
        for (int k = 0; k <= len; ++k) s.insert((iv.i + k) % m);
        return s;
    };
    auto pa = points(a), pb = points(b);
    bool disjoint = true;
    for (int x : pa)
        if (pb.count(x)) disjoint = false;
    if (disjoint) return true;
    bool a_in_b = std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
    bool b_in_a = std::includes(pa.begin(), pa.end(), pb.begin(), pb.end());
    return a_in_b || b_in_a;
}

std::vector<std::vector<Vec>> maximal_rigid_sets(const Tube& t, HomExt& h) {
    int p = t.rank();
    // real roots of the tube in (length, start) order; ext-orthogonality
    // is the clique relation (the set predicate on intervals is only
    // faithful to it for rank <= 2)
    std::vector<std::pair<Interval, Vec>> roots;
    for (int len = 1; len <= p - 1; ++len)
        for (int i = 0; i < p; ++i) {
            Interval iv{i, (i + len) % (p + 1)};
            roots.emplace_back(iv, root_of_interval(t, iv));
        }

    std::vector<std::vector<Vec>> out;
    std::vector<size_t> chosen;
    std::function<void(size_t)> go = [&](size_t start) {
        bool extended = false;
        for (size_t i = start; i < roots.size(); ++i) {
            bool ok = true;
            for (size_t c : chosen)
                if (!h.ext_orthogonal(roots[c].second, roots[i].second)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            extended = true;
            chosen.push_back(i);
            go(i + 1);
            chosen.pop_back();
        }
        if (!extended) {
            // maximal only if no earlier root extends the set either
            for (size_t i = 0; i < start; ++i) {
                if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
                bool ok = true;
                for (size_t c : chosen)
                    if (!h.ext_orthogonal(roots[c].second, roots[i].second)) {
                        ok = false;
                        break;
                    }
                if (ok) return;
            }
            std::vector<Vec> set;
            for (size_t c : chosen) set.push_back(roots[c].second);
            std::sort(set.begin(), set.end(), root_less);
            out.push_back(std::move(set));
        }
    };
    go(0);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& s : out) {
        require_internal(static_cast<int>(s.size()) == p - 1,
                         "maximal rigid set in a rank-" + std::to_string(p) +
                             " tube must have " + std::to_string(p - 1) + " elements");
        for (const Vec& r : s) {
            Interval iv = interval_of_root(t, r);
            require_internal(interval_length(p, iv) <= p - 1,
                             "rigid tube root exceeds rank-1 simples");
        }
    }
    return out;
}

std::vector<std::vector<Vec>> delta_clusters(const Quiver& q, const Vec& delta, HomExt& h) {
    auto ts = tubes(q, delta, h);
    std::vector<std::vector<std::vector<Vec>>> per_tube;
    for (const Tube& t : ts) per_tube.push_back(maximal_rigid_sets(t, h));

    std::vector<std::vector<Vec>> out;
    std::vector<size_t> pick(per_tube.size(), 0);
    for (;;) {
        std::vector<Vec> cluster{delta};
        for (size_t i = 0; i < per_tube.size(); ++i)
            for (const Vec& r : per_tube[i][pick[i]]) cluster.push_back(r);
        std::sort(cluster.begin(), cluster.end(), root_less);
        require_internal(static_cast<int>(cluster.size()) == q.n() - 1,
                         "delta cluster must have n-1 roots");
        for (size_t i = 0; i < cluster.size(); ++i)
            for (size_t j = i + 1; j < cluster.size(); ++j)
                require_internal(h.ext_orthogonal(cluster[i], cluster[j]),
                                 "delta cluster fails ext-orthogonality");
        out.push_back(std::move(cluster));
        size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == per_tube[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qcc
