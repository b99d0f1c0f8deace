#include <padic/gamma_dwork.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace padic {

namespace {

// v_p(M!) by Legendre's formula
long factorial_val(long p, long M) {
    long v = 0;
    for (long q = p; q <= M; q *= p) {
        v += M / q;
        if (q > M / p) break;
    }
    return v;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace

long dwork_valuation_bound(long p, long m) {
    // v_pi(e_m) >= m (p-1)^2 / p^2
    return ceil_div(m * (p - 1) * (p - 1), p * p);
}

DworkCoeffs dwork_coeffs(long p, long M, long K) {
    if (p < 3) throw domain_error("Dwork coefficients need p odd");
    if (M < 1) throw domain_error("need at least e_0, e_1");
    DworkCoeffs d{p, EisCtx(p, K), {}};
    const EisCtx& E = d.ctx;
    d.e.reserve(M + 1);
    d.e.push_back(E.one());
    for (long n = 1; n <= M; ++n) {
        EisCtx::Elem t;
        if (n < p)
            t = d.e[n - 1];  // e_n = pi e_{n-1} / n, n a unit
        else
            t = E.sub(d.e[n - 1], E.mul_scalar(d.e[n - p], p));
        d.e.push_back(E.div_by_mpz(E.mul_pi_pow(t, 1), n));
    }
    return d;
}

EisCtx::Elem dwork_exp_eval(const EisCtx::Elem& z, const DworkCoeffs& coeffs) {
    const EisCtx& E = coeffs.ctx;
    EisCtx::Elem acc = E.zero();
    EisCtx::Elem zp = E.one();
    for (long n = 0; n < coeffs.count(); ++n) {
        acc = E.add(acc, E.mul(coeffs.e[n], zp));
        if (n + 1 < coeffs.count()) zp = E.mul(zp, z);
    }
    return acc;
}

EisCtx::Elem gamma_p_analytic(const PadicScalar& x, long k, const DworkCoeffs& coeffs) {
    long p = coeffs.p;
    const EisCtx& E = coeffs.ctx;
    if (x.prime() != p) throw domain_error("mixed primes");
    if (!x.is_exact_zero() && x.val() < 0) throw domain_error("Gamma_p needs an integral argument");
    if (k < 0 || k >= p) throw domain_error("disk index out of range");
    // membership in the disk: x = -k (mod p)
    PadicScalar xk = x + PadicScalar::from_mpz(p, k, x.is_exact_zero() ? 2 : x.rel_prec() + 1);
    if (!xk.is_zeroish() && xk.val() < 1) throw domain_error("argument not in residue disk -k");
    PadicScalar t = xk.is_exact_zero() ? xk : xk.shift(-1);  // (x+k)/p
    EisCtx::Elem acc = E.zero();
    PadicScalar poch = PadicScalar::one(p, x.is_exact_zero() ? E.K() : x.rel_prec());
    for (long n = 0; p * n + k < coeffs.count(); ++n) {
        if (n > 0) {
            PadicScalar f = t + PadicScalar::from_mpz(p, n - 1, poch.is_zeroish() ? 2 : poch.rel_prec());
            poch = poch * f;
        }
        EisCtx::Elem c = E.mul_pi_pow(coeffs.e[p * n + k], -(n + k));
        if (n % 2) c = E.neg(c);  // (-1)^n pi^{-n-k}
        acc = E.add(acc, E.mul(c, E.from_padic(poch)));
        if (poch.is_exact_zero()) break;  // integer t: Pochhammer terminates
    }
    return acc;
}

GammaCtx::GammaCtx(long p, long N) : p_(p), N_(N) {
    if (p < 3 || !is_prime_small(p)) throw domain_error("Gamma_p requires p an odd prime");
    if (N < 1) throw domain_error("precision must be >= 1");
    // term n of disk k has v_p >= [(pn+k)(p-1)^2/p^2 - (n+k)] / (p-1);
    // solve >= N for the cutoff (denominator p(p^2-3p+1) > 0 for p >= 3)
    long den = p * (p * p - 3 * p + 1);
    long nmax = 0;
    for (long k = 0; k < p; ++k) {
        long num = N * (p - 1) * p * p + k * (p * p - (p - 1) * (p - 1));
        nmax = std::max(nmax, ceil_div(num, den) + 1);
    }
    long M = p * nmax + p - 1;
    long piprec_e = (p - 1) * N + nmax + p;  // pays for the pi^{-(n+k)} shift
    long K = ceil_div(piprec_e, p - 1) + factorial_val(p, M) + 4;
    DworkCoeffs d = dwork_coeffs(p, M, K);
    const EisCtx& E = d.ctx;
    c_.assign(p, {});
    for (long k = 0; k < p; ++k) {
        c_[k].reserve(nmax + 1);
        for (long n = 0; n <= nmax; ++n) {
            EisCtx::Elem c = E.mul_pi_pow(d.e[p * n + k], -(n + k));
            if (n % 2) c = E.neg(c);
            c_[k].push_back(E.to_padic(c).with_prec(N));
        }
    }
}

PadicScalar GammaCtx::eval(const PadicScalar& x) const {
    long p = p_;
    if (x.prime() != p) throw domain_error("mixed primes");
    bool zero = x.is_exact_zero();
    if (!zero && x.is_approx_zero() && x.abs_prec() < 1)
        throw precision_error("argument known to no precision");
    if (!zero && !x.is_approx_zero() && x.val() < 0)
        throw domain_error("Gamma_p needs an integral argument");
    long k = 0;
    if (!zero && !x.is_approx_zero() && x.val() == 0)
        k = (p - mpz_class(mpz_mod(x.unit(), mpz_class(p))).get_si()) % p;
    PadicScalar xk = x + PadicScalar::from_mpz(p, k, N_ + 1);
    PadicScalar t = xk.is_exact_zero() ? xk : xk.shift(-1);
    PadicScalar acc = PadicScalar::zero(p);
    PadicScalar poch = PadicScalar::one(p, N_);
    for (size_t n = 0; n < c_[k].size(); ++n) {
        if (n > 0) {
            if (poch.is_exact_zero()) break;
            poch = poch * (t + PadicScalar::from_mpz(p, (long)n - 1, N_));
        }
        acc = acc + c_[k][n] * poch;
    }
    return acc.with_prec(N_);
}

PadicScalar gamma_p(long p, const PadicScalar& x, long N) {
    static std::map<std::pair<long, long>, GammaCtx> cache;
    static std::mutex mu;
    const GammaCtx* ctx;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, N});
        if (it == cache.end()) it = cache.emplace(std::make_pair(p, N), GammaCtx(p, N)).first;
        ctx = &it->second;
    }
    return ctx->eval(x);
}

PadicScalar gamma_p_product(long p, const mpz_class& m, long N) {
    if (p < 3 || !is_prime_small(p)) throw domain_error("Gamma_p requires p an odd prime");
    if (m < 0) throw domain_error("product form needs a nonnegative representative");
    mpz_class mod = mpz_pow(p, N);
    mpz_class acc = mpz_odd_p(m.get_mpz_t()) ? mpz_class(mod - 1) : mpz_class(1);  // (-1)^m
    for (mpz_class j = 1; j < m; ++j)
        if (j % p != 0) acc = mpz_mod(acc * j, mod);
    if (acc == 0) throw domain_error("unreachable: Gamma_p is a unit");
    return PadicScalar::from_mpz(p, acc, N);
}

GrossKoblitzReport gross_koblitz_check(long p, long k, long piprec) {
    if (k < 0 || k > p - 2) throw domain_error("twist index must satisfy 0 <= k <= p-2");
    long P = piprec;
    // e_m contributes beyond pi^(P+k) once the valuation bound clears it
    long M = ceil_div((P + k) * p * p, (p - 1) * (p - 1)) + p;
    long piprec_e = P + k + p;
    long K = ceil_div(piprec_e, p - 1) + factorial_val(p, M) + 4;
    DworkCoeffs d = dwork_coeffs(p, M, K);
    GrossKoblitzReport rep{p, k, P, d.ctx, {}, {}, {}, false};
    const EisCtx& E = rep.ctx;

    long N = ceil_div(P, p - 1) + 2;
    rep.lhs = E.from_padic(gamma_p(p, PadicScalar::from_mpq(p, mpq_class(k, p - 1), N), N));

    // -pi^{-k} sum over (p-1)th roots of unity of zeta^{-k} E_pi(zeta)
    EisCtx::Elem gsum = E.zero();
    for (long a = 1; a < p; ++a) {
        PadicScalar zeta = teichmueller(p, a, N);
        EisCtx::Elem term = E.mul(E.from_padic(zeta.pow(-k)), dwork_exp_eval(E.from_padic(zeta), d));
        gsum = E.add(gsum, term);
    }
    rep.rhs_gauss_sum = E.neg(E.mul_pi_pow(gsum, -k));

    // (1-p) pi^{-k} sum_m e_{(p-1)m+k}
    EisCtx::Elem rsum = E.zero();
    for (long m = 0; (p - 1) * m + k <= M; ++m) rsum = E.add(rsum, d.e[(p - 1) * m + k]);
    rep.rhs_robert = E.mul_scalar(E.mul_pi_pow(rsum, -k), 1 - p);

    rep.equal = E.equal_mod_pi(rep.lhs, rep.rhs_gauss_sum, P) &&
                E.equal_mod_pi(rep.lhs, rep.rhs_robert, P) &&
                E.equal_mod_pi(rep.rhs_gauss_sum, rep.rhs_robert, P);
    return rep;
}

bool robert_identity_check(long p, long k, long piprec) {
    if (k < 0 || k > p - 2) throw domain_error("index must satisfy 0 <= k <= p-2");
    long P = piprec;
    // term n of G_j: v_pi >= (pn+j)(p-1)^2/p^2 - n, increasing at rate (p^2-3p+1)/p
    long nterms = ceil_div(P * p, p * p - 3 * p + 1) + 2;
    long M = p * nterms + 2 * p;
    long K = ceil_div(P + nterms + p, p - 1) + factorial_val(p, M) + 4;
    DworkCoeffs d = dwork_coeffs(p, M, K);
    const EisCtx& E = d.ctx;
    long N = ceil_div(P, p - 1) + 2;

    auto G = [&](long j) {
        PadicScalar t = PadicScalar::from_mpq(p, mpq_class(j, p - 1), N);
        PadicScalar poch = PadicScalar::one(p, N);
        EisCtx::Elem acc = E.zero();
        for (long n = 0; n <= nterms && p * n + j <= M; ++n) {
            if (n > 0) poch = poch * (t + PadicScalar::from_mpz(p, n - 1, N));
            EisCtx::Elem c = E.mul_pi_pow(d.e[p * n + j], -n);
            if (n % 2) c = E.neg(c);
            acc = E.add(acc, E.mul(c, E.from_padic(poch)));
        }
        return acc;
    };

    EisCtx::Elem diff = E.sub(G(k), G(p - 1 + k));
    EisCtx::Elem rhs = E.mul_scalar(d.e[k], 1 - p);
    return E.equal_mod_pi(diff, rhs, P);
}

PadicScalar diamond_Gp(long p, const mpq_class& x, long m, long N) {
    if (m < 0) throw domain_error("level must be >= 0");
    mpz_class terms = mpz_pow(p, m);
    PadicScalar acc = PadicScalar::zero(p);
    for (mpz_class n = 0; n < terms; ++n) {
        mpq_class q = x + mpq_class(n);
        if (q == 0) continue;  // exact-zero term skipped
        // terms with |x+n| < 1 are excluded: on Z_p the unrestricted sum has a
        // non-vanishing divergent part, while for |x| > 1 no term is excluded
        // and the classical limit is recovered
        if (mpz_divisible_ui_p(q.get_num().get_mpz_t(), p)) continue;
        PadicScalar s = PadicScalar::from_mpq(p, q, N + m);
        acc = acc + s * padic_log(s) - s;
    }
    return acc.shift(-m);
}

}  // namespace padic
