#pragma once

#include <padic/ffield.hpp>
#include <padic/series.hpp>
#include <padic/unram.hpp>

#include <vector>

namespace padic {

// (-1)^((p-1)/2) F(1/2,1/2,1;z) truncated at order (p-1)/2, reduced mod p:
// vanishes exactly at the supersingular Legendre moduli.
struct HassePoly {
    long p = 0;
    std::vector<long> c;  // degree (p-1)/2, coefficients in [0, p)

    long degree() const { return static_cast<long>(c.size()) - 1; }
};

HassePoly hasse_poly(long p);

// evaluation in any extension F_{p^f}
FFCtx::Elem hasse_eval(const HassePoly& h, const FFCtx& F, const FFCtx::Elem& x);

// h(z) = (-1)^((p-1)/2) h(1-z) = z^((p-1)/2) h(1/z) as polynomial identities mod p
bool hasse_functional_equations(long p);

// all roots of h_p in F_{p^2} by exhaustive evaluation
std::vector<FFCtx::Elem> supersingular_roots(long p, const FFCtx& F2);

// Dwork's unit-root function f_p(z) = lim (-1)^((p-1)/2) g_{n+1}(z)/g_n(z^p),
// g_n the truncation of F(1/2,1/2,1) at order p^n - 1.  Policy: raise the level
// until consecutive quotients agree mod p^N (with an independent cross-check
// two levels up); when the next level exceeds the term budget, verify the
// one-digit-per-level congruence rate on the computed levels and evaluate the
// single quotient at level N-1 directly (Z_p arguments only).
struct FpEvalOptions {
    long m_max = 24;
    long budget_terms = 1000000;
    long threads = 0;  // 0: hardware concurrency
};

struct FpEvalResult {
    UnramCtx::Elem value;     // the unit f_p(z) mod p^N
    long level = 0;           // quotient level the value was read from
    bool stabilized = false;  // consecutive-agreement path
    bool rate_verified = false;
    bool jumped = false;      // single-quotient fast path taken
};

FpEvalResult fp_eval(const UnramCtx& R, const UnramCtx::Elem& z, long N, FpEvalOptions opt = {});

// #X_{s0}(F_{p^n}) for y^2 = x(x-1)(x-s0) including infinity, by
// quadratic-character enumeration.  Requires s0(1-s0) != 0.
long count_points_bruteforce(const FFCtx& F, const FFCtx::Elem& s0);

// the same count through the unit root: a = prod_{k<n} f_p(omega^{p^k}) with
// omega the Teichmueller lift of s0, trace t = a + p^n/a rounded to the unique
// integer in the Hasse interval, count = p^n + 1 - t.
struct CountReport {
    long p = 0, n = 0;
    long count = 0;
    PadicScalar unit_root;  // a, a p-adic unit
    long prec = 0;          // p-precision used for the rounding
};

CountReport count_points_dwork(long p, long n, const FFCtx& F, const FFCtx::Elem& s0,
                               FpEvalOptions opt = {});

// formal identities of the Gauss-Manin matrix at z = 1/2 in w = 1-2z:
// y11 = F(1/4,1/4,1/2;w^2) + (w/2) F(3/4,3/4,3/2;w^2), y12 = w F(3/4,3/4,3/2;w^2),
// y2i = (1-w^2) y1i' - ((3+2w)/6) y1i; the hypergeometric operator kills y1i,
// det Y = 1, and (1-w^2)(y12' y11 - y11' y12) = 1.
struct GmReport {
    bool ode_ok = false;
    bool det_ok = false;
    bool wronskian_ok = false;
    SeriesQ y11, y12, y21, y22;
};

GmReport legendre_gm_check(long N);

}  // namespace padic
