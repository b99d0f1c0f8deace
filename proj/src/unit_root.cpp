#include <padic/unit_root.hpp>

#include <algorithm>
#include <cstdint>
#include <thread>

namespace padic {

namespace {

long legendre_sign(long p) { return ((p - 1) / 2) % 2 ? -1 : 1; }

}  // namespace

HassePoly hasse_poly(long p) {
    if (p < 3 || !is_prime_small(p)) throw domain_error("Hasse polynomial requires p an odd prime");
    long d = (p - 1) / 2;
    auto F = hypergeometric_series(mpq_class(1, 2), mpq_class(1, 2), 1, d + 1);
    HassePoly h;
    h.p = p;
    h.c.resize(d + 1);
    long sign = legendre_sign(p);
    for (long k = 0; k <= d; ++k) {
        mpz_class num = mpz_mod(F.a[k].get_num() * sign, mpz_class(p));
        mpz_class den = mpz_inv_mod(mpz_mod(F.a[k].get_den(), mpz_class(p)), mpz_class(p));
        h.c[k] = mpz_class(mpz_mod(num * den, mpz_class(p))).get_si();
    }
    return h;
}

FFCtx::Elem hasse_eval(const HassePoly& h, const FFCtx& F, const FFCtx::Elem& x) {
    if (F.p() != h.p) throw domain_error("mixed characteristics");
    FFCtx::Elem acc = F.zero();
    for (long k = h.degree(); k >= 0; --k) acc = F.add(F.mul(acc, x), F.from_int(h.c[k]));
    return acc;
}

bool hasse_functional_equations(long p) {
    HassePoly h = hasse_poly(p);
    long d = h.degree();
    long sign = legendre_sign(p);
    // sign * h(1-z) coefficientwise
    std::vector<long> g(d + 1, 0);
    for (long k = 0; k <= d; ++k) {
        // c_k (1-z)^k
        mpz_class binom = 1;
        for (long j = 0; j <= k; ++j) {
            long term = mpz_class(mpz_mod(mpz_class(h.c[k]) * binom * sign * (j % 2 ? -1 : 1),
                                          mpz_class(p)))
                            .get_si();
            g[j] = (g[j] + term) % p;
            binom = binom * (k - j) / (j + 1);
        }
    }
    for (long k = 0; k <= d; ++k)
        if (g[k] != h.c[k]) return false;
    // z^d h(1/z): coefficient reversal
    for (long k = 0; k <= d; ++k)
        if (h.c[k] != h.c[d - k]) return false;
    return true;
}

std::vector<FFCtx::Elem> supersingular_roots(long p, const FFCtx& F2) {
    if (F2.p() != p || F2.f() != 2) throw domain_error("roots are sought in F_{p^2}");
    HassePoly h = hasse_poly(p);
    std::vector<FFCtx::Elem> roots;
    for (long i = 0; i < F2.q(); ++i) {
        auto x = F2.from_index(i);
        if (F2.is_zero(hasse_eval(h, F2, x))) roots.push_back(x);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// series machinery for the quotient levels

namespace {

// a_k = binom(2k,k)^2 / 16^k mod p^N for k < K, with a single modular
// inversion: forward prefix products of the p-stripped factors, backward
// sweep distributing the inverse of the full denominator product.
std::vector<mpz_class> unit_coeff_table(long p, long N, long K) {
    mpz_class mod = mpz_pow(p, N);
    std::vector<mpz_class> out((size_t)K);
    std::vector<long> s((size_t)K, 1);
    out[0] = 1;
    mpz_class P = 1, Q = 1;
    long v = 0;
    for (long k = 1; k < K; ++k) {
        long m1 = 2 * k - 1, m2 = k;
        while (m1 % p == 0) {
            m1 /= p;
            ++v;
        }
        while (m2 % p == 0) {
            m2 /= p;
            --v;
        }
        P = P * m1 % mod;
        s[k] = m2;
        Q = Q * m2 % mod;
        if (2 * v < N) out[k] = P * P % mod * mpz_pow(p, 2 * v) % mod;
    }
    mpz_class I = mpz_inv_mod(Q, mod);
    mpz_class inv4 = mpz_inv_mod(mpz_class(4), mod);
    mpz_class g;
    mpz_powm_ui(g.get_mpz_t(), inv4.get_mpz_t(), (unsigned long)(K - 1), mod.get_mpz_t());
    for (long k = K - 1; k >= 1; --k) {
        if (out[k] != 0) out[k] = out[k] * I % mod * I % mod * g % mod;
        I = I * s[k] % mod;
        g = g * 4 % mod;
    }
    return out;
}

// g_n(z) = sum_{k < p^n} a_k z^k evaluated in R at precision N
UnramCtx::Elem eval_g(const UnramCtx& R, const UnramCtx::Elem& z, long n, long N) {
    long p = R.p();
    mpz_class terms = mpz_pow(p, n);
    if (!terms.fits_slong_p() || terms.get_si() > (1L << 26)) throw precision_error("level out of range");
    long K = terms.get_si();
    auto a = unit_coeff_table(p, N, K);
    mpz_class mod = mpz_pow(p, N);
    UnramCtx::Elem acc = R.one();
    acc.aprec = std::min(acc.aprec, std::min(z.aprec, N));
    UnramCtx::Elem zpow = z;
    for (long k = 1; k < K; ++k) {
        if (k > 1) zpow = R.mul(zpow, z);
        if (a[k] != 0) {
            UnramCtx::Elem t = zpow;
            for (auto& c : t.c) c = mpz_mod(c * a[k], mod);
            acc = R.add(acc, t);
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// fast single-quotient path over Z_p: Montgomery arithmetic mod p^N < 2^62

struct Mont {
    uint64_t M, Minv, R2, one;

    explicit Mont(uint64_t M_) : M(M_) {
        uint64_t x = M;  // Newton inverse of M mod 2^64
        for (int i = 0; i < 6; ++i) x *= 2 - M * x;
        Minv = -x;
        __uint128_t r = (__uint128_t(1) << 64) % M;
        R2 = (__uint128_t)r * r % M;
        one = to(1);
    }
    uint64_t redc(__uint128_t T) const {
        uint64_t m = (uint64_t)T * Minv;
        uint64_t t = (uint64_t)((T + (__uint128_t)m * M) >> 64);
        return t >= M ? t - M : t;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return redc((__uint128_t)a * b); }
    uint64_t to(uint64_t x) const { return mul(x % M, R2); }
    uint64_t from(uint64_t x) const { return redc(x); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= M ? s - M : s;
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = one;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

uint64_t egcd_inv(uint64_t a, uint64_t m) {
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw domain_error("element not invertible");
    if (t < 0) t += m;
    return (uint64_t)t;
}

// S1 = sum_{k<K1} a_k z1^k, S2 = sum_{k<K2} a_k z2^k mod M = p^N (K2 <= K1)
void fast_g_pair(long p, long N, uint64_t z1, uint64_t z2, long K1, long K2, long threads,
                 uint64_t& S1_out, uint64_t& S2_out) {
    Mont mg((uint64_t)mpz_pow(p, N).get_ui());
    std::vector<uint64_t> ppow(2 * N + 1, 1);  // p^j in Montgomery form
    for (long j = 0; j <= 2 * N; ++j) ppow[j] = mg.to(mpz_class(mpz_pow(p, std::min(j, N))).get_ui() % mg.M);
    uint64_t inv4 = mg.to(egcd_inv(4 % mg.M, mg.M));
    uint64_t zz1 = mg.mul(mg.to(z1), inv4), zz2 = mg.mul(mg.to(z2), inv4);

    long T = threads > 0 ? threads : (long)std::thread::hardware_concurrency();
    T = std::max<long>(1, std::min<long>(T, 32));
    if (K1 < 100000) T = 1;
    std::vector<long> lo(T + 1);
    for (long t = 0; t <= T; ++t) lo[t] = 1 + (K1 - 1) * t / T;

    // pass 1: per-range products of stripped odd/plain factors and valuation drift
    std::vector<uint64_t> rp(T), rq(T);
    std::vector<long> rv(T);
    auto pass1 = [&](long t) {
        uint64_t P = mg.one, Q = mg.one;
        long v = 0;
        for (long k = lo[t]; k < lo[t + 1]; ++k) {
            long m1 = 2 * k - 1, m2 = k;
            while (m1 % p == 0) {
                m1 /= p;
                ++v;
            }
            while (m2 % p == 0) {
                m2 /= p;
                --v;
            }
            P = mg.mul(P, mg.to((uint64_t)m1));
            Q = mg.mul(Q, mg.to((uint64_t)m2));
        }
        rp[t] = P;
        rq[t] = Q;
        rv[t] = v;
    };
    {
        std::vector<std::thread> th;
        for (long t = 0; t < T; ++t) th.emplace_back(pass1, t);
        for (auto& x : th) x.join();
    }
    std::vector<uint64_t> preP(T), preQ(T);
    std::vector<long> preV(T);
    uint64_t accP = mg.one, accQ = mg.one;
    long accV = 0;
    for (long t = 0; t < T; ++t) {
        preP[t] = accP;
        preQ[t] = accQ;
        preV[t] = accV;
        accP = mg.mul(accP, rp[t]);
        accQ = mg.mul(accQ, rq[t]);
        accV += rv[t];
    }

    // pass 2: terms with block-batched denominator inversion
    std::vector<uint64_t> s1(T, 0), s2(T, 0);
    auto pass2 = [&](long t) {
        constexpr long B = 512;
        uint64_t P = preP[t], Q = preQ[t];
        long v = preV[t];
        uint64_t zp1 = mg.pow(zz1, (uint64_t)lo[t]);
        uint64_t zp2 = (lo[t] < K2) ? mg.pow(zz2, (uint64_t)lo[t]) : 0;
        uint64_t sum1 = 0, sum2 = 0;
        std::vector<uint64_t> sbuf(B), n1(B), n2(B);
        long k = lo[t];
        while (k < lo[t + 1]) {
            long blk = std::min(B, lo[t + 1] - k);
            for (long i = 0; i < blk; ++i, ++k) {
                long m1 = 2 * k - 1, m2 = k;
                while (m1 % p == 0) {
                    m1 /= p;
                    ++v;
                }
                while (m2 % p == 0) {
                    m2 /= p;
                    --v;
                }
                P = mg.mul(P, mg.to((uint64_t)m1));
                uint64_t s = mg.to((uint64_t)m2);
                sbuf[i] = s;
                Q = mg.mul(Q, s);
                if (2 * v < N) {
                    uint64_t base = mg.mul(mg.mul(P, P), ppow[2 * v]);
                    n1[i] = mg.mul(base, zp1);
                    n2[i] = (k < K2) ? mg.mul(base, zp2) : 0;
                } else {
                    n1[i] = 0;
                    n2[i] = 0;
                }
                zp1 = mg.mul(zp1, zz1);
                if (k + 1 <= K2) zp2 = mg.mul(zp2, zz2);
            }
            uint64_t I = mg.to(egcd_inv(mg.from(Q), mg.M));
            for (long i = blk - 1; i >= 0; --i) {
                uint64_t I2 = mg.mul(I, I);
                if (n1[i]) sum1 = mg.add(sum1, mg.mul(n1[i], I2));
                if (n2[i]) sum2 = mg.add(sum2, mg.mul(n2[i], I2));
                I = mg.mul(I, sbuf[i]);
            }
        }
        s1[t] = sum1;
        s2[t] = sum2;
    };
    {
        std::vector<std::thread> th;
        for (long t = 0; t < T; ++t) th.emplace_back(pass2, t);
        for (auto& x : th) x.join();
    }
    uint64_t S1 = mg.one, S2 = mg.one;  // k = 0 terms
    for (long t = 0; t < T; ++t) {
        S1 = mg.add(S1, s1[t]);
        S2 = mg.add(S2, s2[t]);
    }
    S1_out = mg.from(S1);
    S2_out = mg.from(S2);
}

long elem_val_or_large(const UnramCtx& R, const UnramCtx::Elem& d) {
    return R.is_zero_at_prec(d) ? d.aprec : R.val(d);
}

}  // namespace

FpEvalResult fp_eval(const UnramCtx& R, const UnramCtx::Elem& z, long N, FpEvalOptions opt) {
    long p = R.p();
    if (N < 1 || N > R.K()) throw domain_error("precision out of range for the ring");
    HassePoly h = hasse_poly(p);
    auto zbar = R.reduce_mod_p(z);
    const FFCtx& F = R.residue_field();
    if (F.is_zero(hasse_eval(h, F, zbar)))
        throw domain_error("supersingular reduction: no bounded unit-root solution");
    long sign = legendre_sign(p);
    UnramCtx::Elem zp = R.pow(z, p);

    auto quotient = [&](long m) {
        // (-1)^((p-1)/2) g_{m+1}(z) / g_m(z^p)
        auto num = eval_g(R, z, m + 1, N);
        auto den = eval_g(R, zp, m, N);
        auto q = R.div(num, den);
        if (sign < 0) q = R.neg(q);
        return q;
    };

    FpEvalResult out;
    auto level_terms = [&](long m) {
        mpz_class t = mpz_pow(p, m + 2);
        return t.fits_slong_p() ? t.get_si() : opt.budget_terms + 1;
    };

    long m = 1;
    UnramCtx::Elem prev = quotient(1);
    long rate_ok_steps = 0;
    while (true) {
        if (level_terms(m) > opt.budget_terms) break;
        UnramCtx::Elem cur = quotient(m + 1);
        if (R.equal_mod(prev, cur, N)) {
            // independent cross-check two levels up when affordable
            if (level_terms(m + 2) <= opt.budget_terms && !R.equal_mod(cur, quotient(m + 3), N))
                throw precision_error("quotient stabilization failed the cross-check");
            out.value = cur;
            out.level = m + 1;
            out.stabilized = true;
            out.rate_verified = rate_ok_steps >= 2;
            return out;
        }
        long v = elem_val_or_large(R, R.sub(cur, prev));
        if (v >= m + 1) ++rate_ok_steps;
        prev = cur;
        ++m;
        if (m > opt.m_max) throw precision_error("quotient did not stabilize within m_max levels");
    }

    // budget exceeded before stabilization: single-quotient jump to level N-1
    if (rate_ok_steps < 2)
        throw precision_error("convergence rate not verified before the level jump");
    if (R.f() != 1) throw precision_error("level jump implemented over Z_p only");
    mpz_class mod = mpz_pow(p, N);
    if (mpz_sizeinbase(mod.get_mpz_t(), 2) > 62) throw precision_error("modulus too large for the fast path");
    if (z.aprec < N || zp.aprec < N) throw precision_error("argument precision below target");
    uint64_t z1 = mpz_class(mpz_mod(z.c[0], mod)).get_ui();
    uint64_t z2 = mpz_class(mpz_mod(zp.c[0], mod)).get_ui();
    long K1, K2;
    {
        mpz_class t1 = mpz_pow(p, N);  // g_N has p^N terms
        if (!t1.fits_slong_p()) throw precision_error("level size out of range");
        K1 = t1.get_si();
        K2 = mpz_class(mpz_pow(p, N - 1)).get_si();
    }
    uint64_t S1, S2;
    fast_g_pair(p, N, z1, z2, K1, K2, opt.threads, S1, S2);
    mpz_class q = mpz_mod(mpz_class(S1) * mpz_inv_mod(mpz_class(S2), mod) * sign, mod);
    UnramCtx::Elem val = R.from_scalar(q);
    val.aprec = N;
    out.value = val;
    out.level = N - 1;
    out.rate_verified = true;
    out.jumped = true;
    return out;
}

long count_points_bruteforce(const FFCtx& F, const FFCtx::Elem& s0) {
    if (F.is_zero(s0) || F.is_zero(F.sub(s0, F.one())))
        throw domain_error("degenerate Legendre modulus");
    long q = F.q();
    long count = 1;  // infinity
    auto one = F.one();
    for (long i = 0; i < q; ++i) {
        auto x = F.from_index(i);
        auto r = F.mul(F.mul(x, F.sub(x, one)), F.sub(x, s0));
        if (F.is_zero(r)) {
            count += 1;
            continue;
        }
        auto chi = F.pow(r, (q - 1) / 2);
        if (chi == one) count += 2;
    }
    return count;
}

CountReport count_points_dwork(long p, long n, const FFCtx& F, const FFCtx::Elem& s0,
                               FpEvalOptions opt) {
    if (F.p() != p || F.f() != n) throw domain_error("field does not match (p, n)");
    if (F.is_zero(s0) || F.is_zero(F.sub(s0, F.one())))
        throw domain_error("degenerate Legendre modulus");
    mpz_class q = mpz_pow(p, n);
    // unique integer in the Hasse interval [-2 sqrt(q), 2 sqrt(q)] mod p^N
    mpz_class s = sqrt(4 * q);
    long N = 1;
    while (mpz_pow(p, N) < 2 * s + 1) ++N;

    UnramCtx R(p, n, N + 2);
    auto omega = R.teichmueller(s0);
    UnramCtx::Elem a = R.one();
    UnramCtx::Elem w = omega;
    for (long k = 0; k < n; ++k) {
        a = R.mul(a, fp_eval(R, w, N, opt).value);
        w = R.frobenius(w);
    }
    PadicScalar au = R.to_padic(a);  // the unit root lies in Z_p
    PadicScalar trace = au + PadicScalar::from_mpz(p, q, N + 2) / au;
    mpz_class pn = mpz_pow(p, N);
    // integer residue of the trace mod p^N; ordinary traces are units (val 0)
    mpz_class t = mpz_mod(trace.lift() * mpz_pow(p, trace.val()), pn);
    if (t > s) t -= pn;  // p^N >= 2s+1: at most one representative in [-s, s]
    if (t < -s || t > s) throw precision_error("no trace candidate in the Hasse interval");

    CountReport rep;
    rep.p = p;
    rep.n = n;
    rep.count = mpz_class(q + 1 - t).get_si();
    rep.unit_root = au;
    rep.prec = N;
    return rep;
}

GmReport legendre_gm_check(long N) {
    if (N < 4) throw domain_error("series order too small");
    long half = N / 2 + 2;
    auto Feven = hypergeometric_series(mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 2), half);
    auto Fodd = hypergeometric_series(mpq_class(3, 4), mpq_class(3, 4), mpq_class(3, 2), half);
    SeriesQ w2 = series_zero(N, "w");
    if (N > 2) w2.a[2] = 1;
    auto Fe = series_compose(Feven, w2);
    auto Fo = series_compose(Fodd, w2);
    SeriesQ w = series_x(N, "w");
    GmReport rep;
    rep.y12 = series_mul(w, Fo);
    rep.y11 = series_add(Fe, series_scale(mpq_class(1, 2), rep.y12));

    auto second_row = [&](const SeriesQ& y) {
        // (1-w^2) y' - ((3+2w)/6) y
        SeriesQ one_m_w2 = series_sub(series_const(1, N), series_mul(w, w));
        SeriesQ fac = series_add(series_const(mpq_class(-1, 2), N),
                                 series_scale(mpq_class(-1, 3), w));
        return series_add(series_mul(one_m_w2, series_derive(y)), series_mul(fac, y));
    };
    rep.y21 = second_row(rep.y11);
    rep.y22 = second_row(rep.y12);

    // hypergeometric operator in w: (1-w^2) y'' - 2w y' - y/4
    DiffOperator L;
    L.alpha = {{mpq_class(-1, 4)}, {0, -2}, {1, 0, -1}};
    rep.ode_ok = series_is_zero(operator_apply(L, rep.y11)) &&
                 series_is_zero(operator_apply(L, rep.y12));

    auto det = series_sub(series_mul(rep.y11, rep.y22), series_mul(rep.y12, rep.y21));
    rep.det_ok = series_is_zero(series_sub(det, series_const(1, N)));

    SeriesQ one_m_w2 = series_sub(series_const(1, N), series_mul(w, w));
    auto wronsk = series_mul(one_m_w2, series_sub(series_mul(series_derive(rep.y12), rep.y11),
                                                  series_mul(series_derive(rep.y11), rep.y12)));
    rep.wronskian_ok = series_is_zero(series_sub(wronsk, series_const(1, N - 1)));
    return rep;
}

}  // namespace padic
