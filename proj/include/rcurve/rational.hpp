#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcurve/errors.hpp"

namespace rcurve {

using Integer = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Integer(num), Integer(den)); }

/// Parses "p", "-p" or "p/q" with decimal integers.
inline Rat parse_rat(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("malformed rational: '" + s + "'");
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat result = 1;
    Rat b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        b *= b;
        exp >>= 1U;
    }
    return result;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Writes |n| = s^2 * core with core square-free; returns the signed core.
/// Trial division only: intended for desk-sized discriminants.
inline Integer squarefree_core(const Integer& n, Integer* square_root_part = nullptr) {
    if (n == 0) throw InvalidInput("squarefree_core of zero");
    Integer rest = abs(n);
    Integer core = 1;
    Integer root = 1;
    for (Integer p = 2; p * p <= rest; ++p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) root *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rest;
    if (square_root_part != nullptr) *square_root_part = root;
    return sgn(n) < 0 ? Integer(-core) : core;
}

inline double to_double(const Rat& r) {
    // get_d truncates; a quotient of two exact doubles rounds to nearest
    if (mpz_sizeinbase(r.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(r.get_den_mpz_t(), 2) <= 53)
        return r.get_num().get_d() / r.get_den().get_d();
    return r.get_d();
}

inline Rat from_double_exact(double value) {
    Rat r(value);
    r.canonicalize();
    return r;
}

}  // namespace rcurve
