#include <padic/eisenstein.hpp>

#include <algorithm>
#include <sstream>

namespace padic {

EisCtx::EisCtx(long p, long K) : p_(p), K_(K) {
    if (!is_prime_small(p)) throw domain_error("p must be prime");
    if (p == 2) throw domain_error("Eisenstein ring requires p odd");
    if (K < 1) throw domain_error("working precision must be >= 1");
    pk_ = mpz_pow(p, K);
}

void EisCtx::renorm(Elem& a) const {
    mpz_class m = mpz_pow(p_, std::min(a.kprec, K_));
    for (auto& c : a.c) c = mpz_mod(c, m);
}

EisCtx::Elem EisCtx::zero() const {
    Elem a;
    a.c.assign(p_ - 1, 0);
    a.piprec = K_ * (p_ - 1);
    a.kprec = K_;
    return a;
}

EisCtx::Elem EisCtx::one() const {
    Elem a = zero();
    a.c[0] = 1;
    return a;
}

EisCtx::Elem EisCtx::pi() const {
    Elem a = zero();
    a.c[1] = 1;
    return a;
}

EisCtx::Elem EisCtx::from_scalar(const mpz_class& n) const {
    Elem a = zero();
    a.c[0] = mpz_mod(n, pk_);
    return a;
}

EisCtx::Elem EisCtx::from_padic(const PadicScalar& x) const {
    if (x.prime() != p_) throw domain_error("mixed primes");
    if (x.is_exact_zero()) return zero();
    Elem a = zero();
    if (x.is_approx_zero()) {
        a.piprec = std::min(a.piprec, x.val() * (p_ - 1));
        return a;
    }
    if (x.val() < 0) throw domain_error("embedding a non-integral scalar");
    a.kprec = std::min(K_, x.abs_prec());
    a.piprec = std::min(a.piprec, x.abs_prec() * (p_ - 1));
    a.c[0] = mpz_mod(x.unit() * mpz_pow(p_, x.val()), mpz_pow(p_, a.kprec));
    return a;
}

bool EisCtx::is_zero_at_prec(const Elem& a) const {
    long P = a.eff_prec(p_ - 1);
    for (long i = 0; i < p_ - 1; ++i) {
        long need = (P - i + (p_ - 2)) / (p_ - 1);  // ceil((P-i)/(p-1))
        if (need <= 0) continue;
        need = std::min(need, a.kprec);
        if (mpz_mod(a.c[i], mpz_pow(p_, need)) != 0) return false;
    }
    return true;
}

long EisCtx::pival(const Elem& a) const {
    if (is_zero_at_prec(a)) throw domain_error("pi-valuation of (approximate) zero");
    long best = a.eff_prec(p_ - 1);
    for (long i = 0; i < p_ - 1; ++i) {
        mpz_class cm = mpz_mod(a.c[i], mpz_pow(p_, a.kprec));
        if (cm == 0) continue;
        long v = mpz_val(cm, p_);
        best = std::min(best, v * (p_ - 1) + i);
    }
    return best;
}

EisCtx::Elem EisCtx::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.c.resize(p_ - 1);
    r.kprec = std::min(a.kprec, b.kprec);
    r.piprec = std::min(a.piprec, b.piprec);
    mpz_class m = mpz_pow(p_, r.kprec);
    for (long i = 0; i < p_ - 1; ++i) r.c[i] = mpz_mod(a.c[i] + b.c[i], m);
    return r;
}

EisCtx::Elem EisCtx::neg(const Elem& a) const {
    Elem r = a;
    mpz_class m = mpz_pow(p_, a.kprec);
    for (auto& c : r.c) c = mpz_mod(-c, m);
    return r;
}

EisCtx::Elem EisCtx::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

EisCtx::Elem EisCtx::mul(const Elem& a, const Elem& b) const {
    long n = p_ - 1;
    std::vector<mpz_class> full(2 * n - 1, 0);
    for (long i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < n; ++j) full[i + j] += a.c[i] * b.c[j];
    }
    Elem r;
    r.c.assign(n, 0);
    r.kprec = std::min(a.kprec, b.kprec);
    // pi^(n + i) = -p * pi^i
    for (long k = 2 * n - 2; k >= n; --k) full[k - n] -= p_ * full[k];
    mpz_class m = mpz_pow(p_, r.kprec);
    for (long i = 0; i < n; ++i) r.c[i] = mpz_mod(full[i], m);
    // ultrametric precision: known mod pi^min(Pa + vb, Pb + va)
    long va, vb;
    bool za = is_zero_at_prec(a), zb = is_zero_at_prec(b);
    va = za ? a.eff_prec(n) : pival(a);
    vb = zb ? b.eff_prec(n) : pival(b);
    r.piprec = std::min(a.piprec + vb, b.piprec + va);
    r.piprec = std::min(r.piprec, r.kprec * n);
    return r;
}

EisCtx::Elem EisCtx::mul_scalar(const Elem& a, const mpz_class& s) const {
    Elem r = a;
    if (s == 0) {
        for (auto& c : r.c) c = 0;
        return r;
    }
    mpz_class m = mpz_pow(p_, r.kprec);
    for (auto& c : r.c) c = mpz_mod(c * s, m);
    long vs = mpz_val(s, p_);
    r.piprec = std::min(r.piprec + vs * (p_ - 1), r.kprec * (p_ - 1));
    return r;
}

EisCtx::Elem EisCtx::pow(const Elem& a, long e) const {
    if (e < 0) {
        Elem r = inv(a);
        return pow(r, -e);
    }
    Elem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

EisCtx::Elem EisCtx::mul_pi_pow(const Elem& a, long m) const {
    long n = p_ - 1;
    if (m == 0) return a;
    if (m > 0) {
        long s = m / n, rem = m % n;
        Elem r = a;
        // multiply by (-p)^s
        mpz_class fac = 1;
        for (long i = 0; i < s; ++i) fac *= -p_;
        r = mul_scalar(r, fac);
        // shift by pi^rem
        if (rem > 0) {
            std::vector<mpz_class> full(n + rem, 0);
            for (long i = 0; i < n; ++i) full[i + rem] = r.c[i];
            for (long k = n + rem - 1; k >= n; --k) full[k - n] -= p_ * full[k];
            mpz_class mod = mpz_pow(p_, r.kprec);
            for (long i = 0; i < n; ++i) r.c[i] = mpz_mod(full[i], mod);
        }
        r.piprec = std::min(r.piprec + m, r.kprec * n);
        return r;
    }
    // negative power: pi^-m = pi^(n*s - m') ... use pi^-1 = pi^(n-1)/(-p)
    long k = -m;
    long s = (k + n - 1) / n;  // number of divisions by (-p)
    Elem r = mul_pi_pow(a, s * n - k);
    mpz_class den = 1;
    for (long i = 0; i < s; ++i) den *= -p_;
    return div_by_mpz(r, den);
}

EisCtx::Elem EisCtx::div_by_mpz(const Elem& a, const mpz_class& n_in) const {
    if (n_in == 0) throw domain_error("division by zero");
    mpz_class n = n_in;
    bool negate = false;
    if (n < 0) {
        n = -n;
        negate = true;
    }
    long vn = (n == 1) ? 0 : mpz_val(n, p_);
    mpz_class u = n / mpz_pow(p_, vn);
    Elem r = a;
    if (vn > 0) {
        if (vn >= a.kprec) throw precision_error("all precision lost dividing by p-power");
        mpz_class pv = mpz_pow(p_, vn);
        mpz_class m = mpz_pow(p_, a.kprec);
        for (auto& c : r.c) {
            mpz_class cm = mpz_mod(c, m);
            if (cm % pv != 0) throw precision_error("inexact division by p-power");
            c = cm / pv;
        }
        r.kprec = a.kprec - vn;
        r.piprec = a.piprec - vn * (p_ - 1);
        if (r.piprec < 1) throw precision_error("all pi-precision lost in division");
    }
    mpz_class m = mpz_pow(p_, r.kprec);
    mpz_class ui = mpz_inv_mod(u, m);
    for (auto& c : r.c) c = mpz_mod(c * ui, m);
    if (negate)
        for (auto& c : r.c) c = mpz_mod(-c, m);
    return r;
}

EisCtx::Elem EisCtx::inv(const Elem& a) const {
    if (is_zero_at_prec(a)) throw precision_error("inverse of (approximate) zero");
    if (pival(a) != 0) throw domain_error("inverse requires a pi-unit");
    // Newton iteration x -> x(2 - ax) starting from the inverse of the
    // constant coordinate mod p
    Elem x = from_scalar(mpz_inv_mod(mpz_mod(a.c[0], mpz_class(p_)), mpz_class(p_)));
    long n = p_ - 1;
    long goal = std::min(a.piprec, a.kprec * n);
    for (long it = 0; it < 64; ++it) {
        Elem ax = mul(a, x);
        Elem err = sub(one(), ax);
        if (is_zero_at_prec(err)) break;
        Elem corr = mul(x, err);
        x = add(x, corr);
    }
    Elem check = mul(a, x);
    Elem err = sub(one(), check);
    if (!is_zero_at_prec(err)) throw precision_error("Newton inversion did not converge");
    x.piprec = goal;
    return x;
}

bool EisCtx::equal_mod_pi(const Elem& a, const Elem& b, long P) const {
    if (a.eff_prec(p_ - 1) < P || b.eff_prec(p_ - 1) < P)
        throw precision_error("comparison beyond known pi-precision");
    Elem d = sub(a, b);
    long saveP = d.piprec;
    d.piprec = P;
    bool z = is_zero_at_prec(d);
    d.piprec = saveP;
    return z;
}

PadicScalar EisCtx::to_padic(const Elem& a) const {
    long P = a.eff_prec(p_ - 1);
    for (long i = 1; i < p_ - 1; ++i) {
        long need = (P - i + (p_ - 2)) / (p_ - 1);
        need = std::min(need, a.kprec);
        if (need > 0 && mpz_mod(a.c[i], mpz_pow(p_, need)) != 0)
            throw domain_error("element does not lie in Z_p");
    }
    long nprec = std::min(P / (p_ - 1), a.kprec);
    if (nprec < 1) throw precision_error("no usable p-precision");
    mpz_class c0 = mpz_mod(a.c[0], mpz_pow(p_, nprec));
    if (c0 == 0) return PadicScalar::approx_zero(p_, nprec);
    long v = mpz_val(c0, p_);
    if (v >= nprec) return PadicScalar::approx_zero(p_, nprec);
    return PadicScalar::from_mpz(p_, c0, nprec - v);
}

std::string EisCtx::str(const Elem& a) const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < p_ - 1; ++i) {
        if (i) os << ", ";
        os << mpz_class(mpz_mod(a.c[i], mpz_pow(p_, a.kprec))).get_str();
    }
    os << "] + O(pi^" << a.eff_prec(p_ - 1) << ")";
    return os.str();
}

}  // namespace padic
