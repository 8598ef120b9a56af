#ifndef CYLSCHUR_BIGINT_HPP
#define CYLSCHUR_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cylschur {

// Exact arithmetic everywhere: no floating point in this library.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// 1/m! as an exact rational, zero for negative m.
inline Rat inv_factorial(long m) {
    if (m < 0) return Rat(0);
    return Rat(1) / Rat(factorial(m));
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace cylschur

#endif
