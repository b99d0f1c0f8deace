#pragma once

#include <padic/eisenstein.hpp>
#include <padic/scalar.hpp>

#include <vector>

namespace padic {

// Coefficients e_n of Dwork's splitting function E_pi(z) = exp(pi(z - z^p)),
// elements of Z_p[pi].  e_0 = 1, e_n = pi^n/n! below the twist (n < p), and
// n e_n = pi (e_{n-1} - p e_{n-p}) thereafter.  v_p(e_n) >= n(p-1)/p^2.
struct DworkCoeffs {
    long p = 0;
    EisCtx ctx;
    std::vector<EisCtx::Elem> e;  // e_0 .. e_M

    long count() const { return static_cast<long>(e.size()); }
};

// e_0..e_M at coordinate precision p^K (K chosen by the caller for the
// downstream pi-precision; divisions by n in the recursion consume v_p(n!)
// coordinate digits along the way).
DworkCoeffs dwork_coeffs(long p, long M, long K);

// pi-precision lower bound (p-1)^2 m / p^2 rounded up, from the
// overconvergence radius of E_pi.
long dwork_valuation_bound(long p, long m);

// sum e_n z^n over the available coefficients; z integral.
EisCtx::Elem dwork_exp_eval(const EisCtx::Elem& z, const DworkCoeffs& coeffs);

// Morita's Gamma function on Z_p (p odd), values correct modulo p^N.
// Evaluation uses the analytic expansion on each residue disk x = -k (mod p):
//   Gamma_p(x) = sum_n c_{n,k} ((x+k)/p)_n,   c_{n,k} = (-1)^n e_{pn+k} pi^{-n-k},
// whose coefficients c_{n,k} are p-adic integers precomputed per disk.
class GammaCtx {
  public:
    GammaCtx(long p, long N);

    long p() const { return p_; }
    long prec() const { return N_; }

    PadicScalar eval(const PadicScalar& x) const;

  private:
    long p_, N_;
    std::vector<std::vector<PadicScalar>> c_;  // c_[k][n]
};

// cached per (p, N); x integral.
PadicScalar gamma_p(long p, const PadicScalar& x, long N);

// defining product (-1)^m prod_{0<j<m, p∤j} j: the independent oracle,
// feasible only for small representatives m >= 0.
PadicScalar gamma_p_product(long p, const mpz_class& m, long N);

// one term of the disk expansion machinery exposed directly: the truncated
// analytic value on disk k as an element of Z_p[pi]; x = -k (mod p).
EisCtx::Elem gamma_p_analytic(const PadicScalar& x, long k, const DworkCoeffs& coeffs);

// Gamma_p(k/(p-1)) three ways: Morita product/disk value, the twisted sum
// -pi^{-k} sum_zeta zeta^{-k} E_pi(zeta) over (p-1)th roots of unity, and the
// telescoped series (1-p) pi^{-k} sum_m e_{(p-1)m+k}.
struct GrossKoblitzReport {
    long p = 0, k = 0, piprec = 0;
    EisCtx ctx;
    EisCtx::Elem lhs, rhs_gauss_sum, rhs_robert;
    bool equal = false;
};
GrossKoblitzReport gross_koblitz_check(long p, long k, long piprec);

// G_k - G_{p-1+k} = (1-p) e_k with G_j = sum_n e_{pn+j} (-pi)^{-n} (j/(p-1))_n,
// compared modulo pi^piprec; term count derived from the valuation bound.
bool robert_identity_check(long p, long k, long piprec);

// level-m partial sum of Diamond's LogGamma
//   G_p(x) = lim_m p^{-m} sum_{n<p^m} [(x+n) log_p(x+n) - (x+n)],
// with exact-zero terms skipped.  N is the working precision.
PadicScalar diamond_Gp(long p, const mpq_class& x, long m, long N);

}  // namespace padic
