#include "qcc/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "qcc/errors.hpp"
#include "qcc/rational.hpp"

namespace qcc {

namespace {

Mat zero_mat(int n) { return Mat(static_cast<size_t>(n), zero_vec(n)); }

Mat transpose(const Mat& m) {
    int n = static_cast<int>(m.size());
    Mat t = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(j)][static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat c = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int aik = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (!aik) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] += aik * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    return c;
}

Mat mat_neg(Mat m) {
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return m;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    size_t n = m.size();
    check(v.size() == n, "vector length mismatch");
    Vec r = zero_vec(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

} // namespace

Quiver Quiver::from_arrows(int n, std::vector<std::pair<int, int>> arrows) {
    check(n > 0, "quiver needs at least one vertex");
    Quiver q;
    q.n_ = n;
    q.adj_ = zero_mat(n);
    for (auto [s, t] : arrows) {
        check(s >= 0 && s < n && t >= 0 && t < n, "arrow endpoint out of range");
        check(s != t, "loops are not allowed");
        q.adj_[static_cast<size_t>(s)][static_cast<size_t>(t)] += 1;
    }
    q.arrows_ = std::move(arrows);

    // Kahn topological sort; failure means an oriented cycle.
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (auto [s, t] : q.arrows_) {
        (void)s;
        indeg[static_cast<size_t>(t)]++;
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < n; ++i)
        if (!indeg[static_cast<size_t>(i)]) ready.push(i);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        q.topo_.push_back(v);
        for (int w = 0; w < n; ++w)
            if (q.adj_[static_cast<size_t>(v)][static_cast<size_t>(w)]) {
                indeg[static_cast<size_t>(w)] -= static_cast<int>(q.adj_[static_cast<size_t>(v)][static_cast<size_t>(w)]);
                if (!indeg[static_cast<size_t>(w)]) ready.push(w);
            }
    }
    check(static_cast<int>(q.topo_.size()) == n, "quiver has an oriented cycle");

    // E[i][j] = delta_ij - #arrows(i->j); unitriangular in topological order
    q.euler_ = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.euler_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (i == j ? 1 : 0) - q.adj_[static_cast<size_t>(i)][static_cast<size_t>(j)];

    // invert E column by column, sweeping vertices in reverse topological
    // order (row i of E couples x_i only to topologically later vertices)
    q.euler_inv_ = zero_mat(n);
    for (int c = 0; c < n; ++c) {
        Vec x = zero_vec(n);
        for (auto it = q.topo_.rbegin(); it != q.topo_.rend(); ++it) {
            int i = *it;
            Int rhs = (i == c) ? 1 : 0;
            for (int j = 0; j < n; ++j)
                if (j != i) rhs -= q.euler_[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            x[static_cast<size_t>(i)] = rhs;
        }
        for (int i = 0; i < n; ++i) q.euler_inv_[static_cast<size_t>(i)][static_cast<size_t>(c)] = x[static_cast<size_t>(i)];
    }

    q.cox_ = mat_neg(mat_mul(transpose(q.euler_inv_), q.euler_));
    q.cox_inv_ = mat_neg(mat_mul(q.euler_inv_, transpose(q.euler_)));
    return q;
}

Quiver Quiver::parse(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> arrows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw == "vertices") {
            check(n < 0, "duplicate 'vertices' line");
            check(static_cast<bool>(ss >> n) && n > 0, "invalid vertex count (line " + std::to_string(lineno) + ")");
        } else if (kw == "arrow") {
            check(n > 0, "'arrow' before 'vertices'");
            int s = 0, t = 0;
            check(static_cast<bool>(ss >> s >> t), "invalid arrow line (line " + std::to_string(lineno) + ")");
            check(s >= 1 && s <= n && t >= 1 && t <= n,
                  "arrow endpoint out of range (line " + std::to_string(lineno) + ")");
            check(s != t, "loop rejected (line " + std::to_string(lineno) + ")");
            arrows.emplace_back(s - 1, t - 1);
        } else {
            throw domain_error("unknown keyword '" + kw + "' (line " + std::to_string(lineno) + ")");
        }
        std::string rest;
        if (ss >> rest) throw domain_error("trailing junk on line " + std::to_string(lineno));
    }
    check(n > 0, "missing 'vertices' line");
    return from_arrows(n, std::move(arrows));
}

Quiver Quiver::parse_string(const std::string& text) {
    std::stringstream ss(text);
    return parse(ss);
}

Quiver Quiver::load(const std::string& path) {
    std::ifstream in(path);
    check(static_cast<bool>(in), "cannot open quiver file '" + path + "'");
    return parse(in);
}

std::string Quiver::to_text() const {
    std::string s = "vertices " + std::to_string(n_) + "\n";
    for (auto [a, b] : arrows_)
        s += "arrow " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return s;
}

Int euler_form(const Quiver& q, const Vec& a, const Vec& b) {
    check(static_cast<int>(a.size()) == q.n() && static_cast<int>(b.size()) == q.n(),
          "vector length mismatch");
    Int s = 0;
    for (int i = 0; i < q.n(); ++i) s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    for (auto [u, v] : q.arrows()) s -= a[static_cast<size_t>(u)] * b[static_cast<size_t>(v)];
    return s;
}

Int sym_form(const Quiver& q, const Vec& a, const Vec& b) {
    return euler_form(q, a, b) + euler_form(q, b, a);
}

Int tits_form(const Quiver& q, const Vec& a) { return euler_form(q, a, a); }

Vec reflect(const Quiver& q, const Vec& a, int i) {
    check(i >= 0 && i < q.n(), "vertex index out of range");
    check(static_cast<int>(a.size()) == q.n(), "vector length mismatch");
    Int c = sym_form(q, a, unit_vec(q.n(), i));
    Vec r(a);
    r[static_cast<size_t>(i)] -= c;
    return r;
}

Vec coxeter_apply(const Quiver& q, const Vec& a, Int k) {
    check(static_cast<int>(a.size()) == q.n(), "vector length mismatch");
    const Mat& m = k >= 0 ? q.coxeter_matrix() : q.coxeter_inverse();
    Vec r(a);
    for (Int s = 0; s < (k >= 0 ? k : -k); ++s) r = mat_apply(m, r);
    return r;
}

std::vector<int> support(const Vec& a) {
    std::vector<int> s;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

bool support_connected(const Quiver& q, const Vec& a) {
    auto s = support(a);
    if (s.empty()) return false;
    std::set<int> in(s.begin(), s.end());
    std::vector<int> stack{s[0]};
    std::set<int> seen{s[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : s)
            if (!seen.count(w) && q.edge(v, w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == in.size();
}

bool is_sincere(const Vec& a) {
    for (Int x : a)
        if (x <= 0) return false;
    return true;
}

bool is_fundamental(const Quiver& q, const Vec& a) {
    check(static_cast<int>(a.size()) == q.n(), "vector length mismatch");
    check(is_nonneg(a), "is_fundamental expects a nonnegative vector");
    for (int i = 0; i < q.n(); ++i)
        if (sym_form(q, a, unit_vec(q.n(), i)) > 0) return false;
    return support_connected(q, a);
}

std::vector<int> null_cone(const Quiver& q, const Vec& a) {
    check(static_cast<int>(a.size()) == q.n(), "vector length mismatch");
    std::vector<int> s;
    for (int i = 0; i < q.n(); ++i)
        if (sym_form(q, unit_vec(q.n(), i), a) == 0) s.push_back(i);
    return s;
}

FundamentalDescent to_fundamental(const Quiver& q, const Vec& a) {
    RootType t = is_root(q, a);
    check(t == RootType::Isotropic || t == RootType::ImaginaryNonIsotropic,
          "to_fundamental expects a positive imaginary root, got " + format_vec(a));
    FundamentalDescent d;
    d.vector = a;
    Int cap = 10 * q.n() * norm1(a) + 10;
    for (Int step = 0;; ++step) {
        require_internal(step <= cap, "to_fundamental descent exceeded iteration cap");
        int pick = -1;
        for (int i = 0; i < q.n(); ++i)
            if (sym_form(q, d.vector, unit_vec(q.n(), i)) > 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        d.vector = reflect(q, d.vector, pick);
        d.word.push_back(pick);
    }
    require_internal(is_fundamental(q, d.vector), "descent ended outside the fundamental domain");
    return d;
}

const char* to_string(QuiverClass c) {
    switch (c) {
        case QuiverClass::Dynkin: return "Dynkin";
        case QuiverClass::Affine: return "Affine";
        default: return "Wild";
    }
}

std::vector<std::vector<int>> components(const Quiver& q) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<size_t>(q.n()), false);
    for (int v = 0; v < q.n(); ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        std::vector<int> comp, stack{v};
        seen[static_cast<size_t>(v)] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int w = 0; w < q.n(); ++w)
                if (!seen[static_cast<size_t>(w)] && q.edge(x, w)) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Exact semidefiniteness of a symmetric rational matrix by symmetric
// Gaussian elimination: pivot on positive diagonal entries; a negative
// diagonal means indefinite; once no nonzero diagonal remains, any
// surviving off-diagonal entry also means indefinite, otherwise the
// remaining size is the radical dimension.
struct GramAnalysis {
    bool semidefinite;
    int radical_dim;
};

GramAnalysis analyze_gram(std::vector<std::vector<Rat>> m) {
    size_t k = m.size();
    std::vector<bool> done(k, false);
    size_t eliminated = 0;
    for (;;) {
        size_t piv = k;
        for (size_t i = 0; i < k; ++i)
            if (!done[i] && m[i][i].sign() > 0) {
                piv = i;
                break;
            }
        for (size_t i = 0; i < k; ++i)
            if (!done[i] && m[i][i].sign() < 0) return {false, 0};
        if (piv == k) break;
        for (size_t i = 0; i < k; ++i) {
            if (done[i] || i == piv) continue;
            Rat f = m[i][piv] / m[piv][piv];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < k; ++j) {
                if (done[j] || j == piv) continue;
                m[i][j] = m[i][j] - f * m[piv][j];
            }
        }
        done[piv] = true;
        ++eliminated;
    }
    for (size_t i = 0; i < k; ++i) {
        if (done[i]) continue;
        for (size_t j = 0; j < k; ++j)
            if (!done[j] && !m[i][j].is_zero()) return {false, 0};
    }
    return {true, static_cast<int>(k - eliminated)};
}

} // namespace

std::vector<std::pair<std::vector<int>, QuiverClass>> classify(const Quiver& q) {
    std::vector<std::pair<std::vector<int>, QuiverClass>> out;
    for (const auto& comp : components(q)) {
        size_t k = comp.size();
        std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b)
                g[a][b] = Rat(sym_form(q, unit_vec(q.n(), comp[a]), unit_vec(q.n(), comp[b])));
        auto res = analyze_gram(std::move(g));
        QuiverClass c = QuiverClass::Wild;
        if (res.semidefinite && res.radical_dim == 0) c = QuiverClass::Dynkin;
        else if (res.semidefinite && res.radical_dim == 1) c = QuiverClass::Affine;
        out.emplace_back(comp, c);
    }
    return out;
}

QuiverClass classify_connected(const Quiver& q) {
    auto cs = classify(q);
    check(cs.size() == 1, "quiver is not connected");
    return cs[0].second;
}

const char* to_string(RootType t) {
    switch (t) {
        case RootType::Real: return "Real";
        case RootType::Isotropic: return "Isotropic";
        case RootType::ImaginaryNonIsotropic: return "ImaginaryNonIsotropic";
        case RootType::NegativeSimple: return "NegativeSimple";
        default: return "NotARoot";
    }
}

RootType is_root(const Quiver& q, const Vec& d) {
    check(static_cast<int>(d.size()) == q.n(), "vector length mismatch");
    check(!is_zero(d), "root test expects a nonzero vector");
    if (is_neg_simple(d)) return RootType::NegativeSimple;
    if (!is_nonneg(d)) return RootType::NotARoot;

    Int quad = tits_form(q, d);
    if (quad > 1) return RootType::NotARoot;

    if (quad == 1) {
        // real candidates: descend by the smallest-index reflection that
        // strictly shrinks the 1-norm; positive real roots always admit one
        Vec a = d;
        for (;;) {
            bool simple = false;
            for (int i = 0; i < q.n(); ++i)
                if (a == unit_vec(q.n(), i) || a == scale(-1, unit_vec(q.n(), i))) simple = true;
            if (simple) return RootType::Real;
            int pick = -1;
            Int best = norm1(a);
            for (int i = 0; i < q.n(); ++i) {
                Vec r = reflect(q, a, i);
                if (norm1(r) < best) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) return RootType::NotARoot;
            a = reflect(q, a, pick);
        }
    }

    // imaginary candidates: transport toward the fundamental domain.
    // Positive imaginary roots stay positive under the Weyl group, so a
    // negative entry or a disconnected final support rules the vector out.
    Vec a = d;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < q.n(); ++i)
            if (sym_form(q, a, unit_vec(q.n(), i)) > 0) {
                pick = i;
                break;
            }
        if (pick < 0) {
            if (!support_connected(q, a)) return RootType::NotARoot;
            return quad == 0 ? RootType::Isotropic : RootType::ImaginaryNonIsotropic;
        }
        a = reflect(q, a, pick);
        if (!is_nonneg(a)) return RootType::NotARoot;
    }
}

Quiver subquiver(const Quiver& q, const std::vector<int>& s) {
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    check(!verts.empty(), "subquiver needs a nonempty vertex set");
    std::vector<int> idx(static_cast<size_t>(q.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        check(verts[i] >= 0 && verts[i] < q.n(), "subquiver vertex out of range");
        idx[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : q.arrows())
        if (idx[static_cast<size_t>(a)] >= 0 && idx[static_cast<size_t>(b)] >= 0)
            arrows.emplace_back(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
    return Quiver::from_arrows(static_cast<int>(verts.size()), std::move(arrows));
}

bool totally_disconnected(const Quiver& q, const std::vector<int>& s,
                          const std::vector<int>& t) {
    std::set<int> ss(s.begin(), s.end()), tt(t.begin(), t.end());
    for (int v : ss)
        if (tt.count(v)) return false;
    for (int v : ss)
        for (int w : tt)
            if (q.edge(v, w)) return false;
    return true;
}

} // namespace qcc
