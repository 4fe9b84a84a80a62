#include "qcc/vec.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "qcc/errors.hpp"

namespace qcc {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), 0); }

Vec unit_vec(int n, int i) {
    Vec v = zero_vec(n);
    v.at(static_cast<size_t>(i)) = 1;
    return v;
}

bool is_nonneg(const Vec& v) {
    for (Int x : v)
        if (x < 0) return false;
    return true;
}

bool is_zero(const Vec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

Int norm1(const Vec& v) {
    Int s = 0;
    for (Int x : v) s += x < 0 ? -x : x;
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vector length mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vector length mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(Int c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool leq(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vector length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_neg_simple(const Vec& v, int* index) {
    int found = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != -1 || found >= 0) return false;
        found = static_cast<int>(i);
    }
    if (found < 0) return false;
    if (index) *index = found;
    return true;
}

bool root_less(const Vec& a, const Vec& b) {
    int ia = -1, ib = -1;
    bool na = is_neg_simple(a, &ia), nb = is_neg_simple(b, &ib);
    if (na != nb) return nb; // positives before negative simples
    if (na && nb) return ia < ib;
    return a < b;
}

std::string format_root(const Vec& v) {
    int i = -1;
    if (is_neg_simple(v, &i)) return "-e" + std::to_string(i + 1);
    return format_vec(v);
}

std::string format_vec(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += ")";
    return s;
}

Vec parse_vec(const std::string& s) {
    Vec v;
    std::string t = s;
    if (!t.empty() && t.front() == '(' && t.back() == ')')
        t = t.substr(1, t.size() - 2);
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long val = 0;
        try {
            val = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw domain_error("cannot parse integer '" + item + "' in vector '" + s + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        check(pos == item.size(), "trailing junk in vector component '" + item + "'");
        v.push_back(val);
    }
    check(!v.empty(), "empty vector '" + s + "'");
    return v;
}

Vec parse_root(const std::string& s, int n) {
    if (s.size() >= 3 && s[0] == '-' && s[1] == 'e') {
        std::string idx = s.substr(2);
        if (!idx.empty() && idx[0] == '_') idx = idx.substr(1);
        int i = 0;
        try {
            i = std::stoi(idx);
        } catch (const std::exception&) {
            throw domain_error("cannot parse negative simple root '" + s + "'");
        }
        check(i >= 1 && i <= n, "vertex index out of range in '" + s + "'");
        Vec v = zero_vec(n);
        v[static_cast<size_t>(i - 1)] = -1;
        return v;
    }
    Vec v = parse_vec(s);
    check(static_cast<int>(v.size()) == n,
          "root '" + s + "' has length " + std::to_string(v.size()) +
              ", expected " + std::to_string(n));
    return v;
}

} // namespace qcc
