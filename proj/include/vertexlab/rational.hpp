#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vxl {

// Exact arithmetic everywhere: arbitrary-precision rationals over GMP,
// always canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Generalized binomial coefficient: n may be any integer (or mpz), k >= 0.
// gbinom(n,k) = n(n-1)...(n-k+1) / k!, always an integer.
inline Int gbinom(const Int& n, long k) {
    if (k < 0) throw std::invalid_argument("gbinom: negative lower index");
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= n - i;
    return num / factorial(k);
}

inline Int gbinom(long n, long k) { return gbinom(Int(n), k); }

// Ordinary binomial with the usual zero conventions for out-of-range
// arguments (0 <= n < k gives 0, negative k gives 0). Top index must be
// nonnegative; use gbinom directly when the top may be negative.
inline Int binom_nn(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return gbinom(Int(n), k);
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace vxl
