#ifndef QCC_VEC_HPP
#define QCC_VEC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qcc {

using Int = long long;
using Vec = std::vector<Int>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);

bool is_nonneg(const Vec& v);
bool is_zero(const Vec& v);
Int norm1(const Vec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(Int c, const Vec& a);

// componentwise a <= b
bool leq(const Vec& a, const Vec& b);

// -e_i test; returns true and sets index (0-based) when v == -e_i
bool is_neg_simple(const Vec& v, int* index = nullptr);

// Ordering used everywhere a deterministic root order is needed:
// positive vectors first (lexicographic), negative simples after
// (by vertex index).
bool root_less(const Vec& a, const Vec& b);

// "(d1,d2,...)" or "-ei" for negative simples (1-based vertex)
std::string format_root(const Vec& v);
std::string format_vec(const Vec& v);

// parse "1,0,-2" into a vector; throws domain_error on junk
Vec parse_vec(const std::string& s);

// parse a root token: either "d1,d2,..."/"(d1,...)" or "-ei"
Vec parse_root(const std::string& s, int n);

} // namespace qcc

#endif
