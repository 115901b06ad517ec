#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace decat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n >= 0 ? n : 0), static_cast<unsigned long>(k));
    if (n >= 0) return r;
    // (n choose k) = (-1)^k (k-n-1 choose k) for n < 0
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : -r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Exact division; throws if the quotient is not integral.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("div_exact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::runtime_error("div_exact: " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

}  // namespace decat
