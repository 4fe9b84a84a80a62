#ifndef QCC_RATIONAL_HPP
#define QCC_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "qcc/errors.hpp"

namespace qcc {

// Exact rational on __int128.  Wide enough for every computation in
// this project (Gram matrices, Lagrange interpolation at desk scale);
// overflow aborts loudly instead of wrapping.
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        require_internal(den != 0, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const {
        check(o.num != 0, "division by zero rational");
        return Rat(num * o.den, den * o.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    bool is_integer() const { return den == 1; }
    long long as_int() const {
        require_internal(den == 1, "rational is not an integer");
        long long v = static_cast<long long>(num);
        require_internal(static_cast<__int128>(v) == num, "rational overflows long long");
        return v;
    }

    std::string str() const {
        auto i128_str = [](__int128 x) {
            if (x == 0) return std::string("0");
            bool neg = x < 0;
            if (neg) x = -x;
            std::string s;
            while (x) {
                s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
                x /= 10;
            }
            return neg ? "-" + s : s;
        };
        if (den == 1) return i128_str(num);
        return i128_str(num) + "/" + i128_str(den);
    }
};

} // namespace qcc

#endif
