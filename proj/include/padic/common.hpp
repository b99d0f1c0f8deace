#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padic {

// Thrown when an input is outside the mathematical domain of an operation
// (division by exact zero, p = 2 where the Eisenstein extension is undefined,
// supersingular modulus passed to the unit-root evaluator, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when the requested result cannot be certified at the requested
// precision (too few Dwork coefficients, a quotient that lost all digits,
// non-stabilizing limits).  Callers may retry with more precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// v_p(n) for n != 0.
long mpz_val(const mpz_class& n, long p);

// p^e as mpz, e >= 0.
mpz_class mpz_pow(long p, long e);

// Inverse of u modulo m; throws domain_error when gcd(u, m) != 1.
mpz_class mpz_inv_mod(const mpz_class& u, const mpz_class& m);

// Canonical representative in [0, m).
mpz_class mpz_mod(const mpz_class& a, const mpz_class& m);

inline bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace padic
