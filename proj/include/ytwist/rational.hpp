#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace ytwist {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat& q) { return q == 1; }

// Deterministic 64-bit hash (stable across runs; used for content addressing).
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t hash_mpz(const mpz_class& z) {
    std::uint64_t h = mpz_fdiv_ui(z.get_mpz_t(), 0x1fffffffffffffffULL);
    h = hash_combine(h, mpz_fdiv_ui(z.get_mpz_t(), 4294967291ULL));
    if (sgn(z) < 0) h = hash_combine(h, 0xdeadULL);
    return h;
}

inline std::uint64_t hash_rat(const Rat& q) {
    return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

inline Rat rat_gcd(const Rat& a, const Rat& b) {
    // gcd of rationals: gcd(num)/lcm(den); positive.
    mpz_class gn, gd, l;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(gd.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat r(gn, gd);
    r.canonicalize();
    return abs(r);
}

inline Int binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int double_factorial(long n) {
    // (2n-1)!! style inputs; (-1)!! = 1 by convention.
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace ytwist
