#include "qcc/homext.hpp"

#include <algorithm>

#include "qcc/errors.hpp"

namespace qcc {

std::vector<Vec> vectors_below(const Vec& cap, bool skip_zero) {
    check(is_nonneg(cap), "cap must be nonnegative");
    __int128 count = 1;
    for (Int c : cap) count *= (c + 1);
    if (count > 2000000) throw size_error("vectors_below guard: cap grid too large");
    std::vector<Vec> out;
    Vec v = zero_vec(static_cast<int>(cap.size()));
    for (;;) {
        if (!skip_zero || !is_zero(v)) out.push_back(v);
        int i = static_cast<int>(v.size()) - 1;
        while (i >= 0 && v[static_cast<size_t>(i)] == cap[static_cast<size_t>(i)]) {
            v[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int HomExt::ext(const Vec& a, const Vec& b) {
    check(static_cast<int>(a.size()) == q_->n() && static_cast<int>(b.size()) == q_->n(),
          "vector length mismatch");
    check(is_nonneg(a) && is_nonneg(b), "ext expects nonnegative vectors");
    if (is_zero(a) || is_zero(b)) return 0;
    auto key = std::make_pair(a, b);
    auto it = ext_memo_.find(key);
    if (it != ext_memo_.end()) return it->second;

    Int best = 0; // a' = 0 always embeds
    for (const Vec& sub : vectors_below(a)) {
        if (!generic_sub(sub, a)) continue;
        Int val = -euler_form(*q_, sub, b);
        if (val > best) best = val;
    }
    ext_memo_.emplace(std::move(key), best);
    return best;
}

Int HomExt::hom(const Vec& a, const Vec& b) {
    Int h = euler_form(*q_, a, b) + ext(a, b);
    require_internal(h >= 0, "generic hom came out negative");
    return h;
}

bool HomExt::generic_sub(const Vec& sub, const Vec& a) {
    check(is_nonneg(sub) && leq(sub, a), "generic_sub expects 0 <= sub <= a");
    if (is_zero(sub) || sub == a) return true;
    auto key = std::make_pair(sub, a);
    auto it = sub_memo_.find(key);
    if (it != sub_memo_.end()) return it->second;
    bool ok = ext(sub, qcc::sub(a, sub)) == 0;
    sub_memo_.emplace(std::move(key), ok);
    return ok;
}

bool HomExt::is_schur_root(const Vec& d) {
    check(static_cast<int>(d.size()) == q_->n(), "vector length mismatch");
    check(is_nonneg(d) && !is_zero(d), "is_schur_root expects a positive nonzero vector");
    auto it = schur_memo_.find(d);
    if (it != schur_memo_.end()) return it->second;
    bool ok = true;
    for (const Vec& b : vectors_below(d)) {
        if (b == d) continue;
        if (!generic_sub(b, d)) continue;
        if (euler_form(*q_, d, b) - euler_form(*q_, b, d) >= 0) {
            ok = false;
            break;
        }
    }
    schur_memo_.emplace(d, ok);
    return ok;
}

bool HomExt::ext_orthogonal(const Vec& a, const Vec& b) {
    int ia = -1, ib = -1;
    bool na = is_neg_simple(a, &ia), nb = is_neg_simple(b, &ib);
    if (na && nb) return true;
    if (na) {
        check(is_nonneg(b), "generalized vector must be positive or a negative simple");
        return b[static_cast<size_t>(ia)] == 0;
    }
    if (nb) {
        check(is_nonneg(a), "generalized vector must be positive or a negative simple");
        return a[static_cast<size_t>(ib)] == 0;
    }
    return ext(a, b) == 0 && ext(b, a) == 0;
}

bool HomExt::decompose_dfs(const Vec& remaining, const std::vector<Vec>& candidates,
                           size_t start, std::vector<Vec>& parts) {
    if (is_zero(remaining)) return true;
    for (size_t i = start; i < candidates.size(); ++i) {
        const Vec& s = candidates[i];
        if (!leq(s, remaining)) continue;
        bool ok = true;
        for (const Vec& p : parts)
            if (!ext_orthogonal(p, s)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        parts.push_back(s);
        // passing i (not i+1) keeps the multiset non-increasing and lets a
        // part repeat; the pairwise check above rejects repeats with
        // ext(s,s) != 0
        if (decompose_dfs(sub(remaining, s), candidates, i, parts)) return true;
        parts.pop_back();
    }
    return false;
}

std::vector<Vec> HomExt::generic_decomposition(const Vec& v, Int norm_guard) {
    check(static_cast<int>(v.size()) == q_->n(), "vector length mismatch");
    if (norm1(v) > norm_guard)
        throw size_error("generic_decomposition guard: ||v||_1 > " + std::to_string(norm_guard));

    std::vector<Vec> parts;
    Vec pos = v;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= 0) continue;
        pos[i] = 0;
        Vec neg = zero_vec(q_->n());
        neg[i] = -1;
        for (Int c = 0; c < -v[i]; ++c) parts.push_back(neg);
    }

    if (!is_zero(pos)) {
        // candidate Schur summands in decreasing lexicographic order; the
        // DFS picks a non-increasing sequence so each multiset shows up once
        std::vector<Vec> candidates;
        for (const Vec& s : vectors_below(pos))
            if (is_schur_root(s)) candidates.push_back(s);
        std::sort(candidates.rbegin(), candidates.rend());
        std::vector<Vec> chosen;
        bool found = decompose_dfs(pos, candidates, 0, chosen);
        require_internal(found, "no certified generic decomposition found for " + format_vec(v));
        parts.insert(parts.end(), chosen.begin(), chosen.end());
    }

    // certificate: parts sum to v, pairwise ext-orthogonal, positive parts
    // Schur; uniqueness then forces this to be the generic decomposition
    Vec sum = zero_vec(q_->n());
    for (const Vec& p : parts) sum = add(sum, p);
    require_internal(sum == v, "decomposition parts do not sum to the input");
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            require_internal(ext_orthogonal(parts[i], parts[j]),
                             "decomposition parts are not ext-orthogonal");
    for (const Vec& p : parts)
        if (!is_neg_simple(p))
            require_internal(is_schur_root(p), "decomposition part is not a Schur root");

    std::sort(parts.begin(), parts.end(), root_less);
    return parts;
}

void HomExt::clear_cache() {
    ext_memo_.clear();
    sub_memo_.clear();
    schur_memo_.clear();
}

} // namespace qcc
