#pragma once

// Exact integer and rational arithmetic used throughout: every count that
// feeds an assertion is a BigInt, every probability or density a Rat.

#include <gmpxx.h>

#include <string>

namespace indcover {

using BigInt = mpz_class;
using Rat = mpq_class;  // always canonical: reduced, positive denominator

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q" with the denominator always present, e.g. "0/1", "4/9".
inline std::string fraction_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Natural log of a positive integer without overflowing a double.
double log_of(const BigInt& x);

}  // namespace indcover
