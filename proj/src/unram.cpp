#include <padic/unram.hpp>

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

using Poly = std::vector<mpz_class>;

Poly poly_mod(Poly a, const Poly& m, const mpz_class& pk) {
    long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) > dm) {
        mpz_class lead = mpz_mod(a.back(), pk);
        long da = static_cast<long>(a.size()) - 1;
        if (lead != 0)
            for (long i = 0; i <= dm; ++i) a[da - dm + i] = mpz_mod(a[da - dm + i] - lead * m[i], pk);
        a.pop_back();
    }
    for (auto& c : a) c = mpz_mod(c, pk);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const mpz_class& pk) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = mpz_mod(c, pk);
    return r;
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& m, const mpz_class& pk) {
    Poly r{1};
    base = poly_mod(std::move(base), m, pk);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(poly_mul(r, base, pk), m, pk);
        e >>= 1;
        if (e > 0) base = poly_mod(poly_mul(base, base, pk), m, pk);
    }
    r.resize(m.size() - 1, 0);
    return r;
}

}  // namespace

UnramCtx::UnramCtx(long p, long f, long K) : p_(p), f_(f), K_(K), ff_(p, f) {
    if (K < 1) throw domain_error("working precision must be >= 1");
    pk_ = mpz_pow(p, K);
    // naive lift of the residue modulus
    Poly m0(f + 1);
    for (long i = 0; i <= f; ++i) m0[i] = ff_.modulus()[i];
    if (f == 1) {
        modulus_ = m0;  // x itself; elements are plain scalars
        theta_p_pows_ = {{mpz_class(1)}};
        return;
    }
    // Teichmueller generator inside Z[X]/(m0, p^K)
    mpz_class pf;
    mpz_ui_pow_ui(pf.get_mpz_t(), p, f);
    Poly t{0, 1};
    for (long it = 0; it < K + 3; ++it) {
        Poly next = poly_powmod(t, pf, m0, pk_);
        if (next == t) break;
        t = std::move(next);
    }
    {
        Poly fix = poly_powmod(t, pf, m0, pk_);
        if (fix != t) throw precision_error("Teichmueller generator iteration did not stabilize");
    }
    // minimal polynomial prod_i (Y - t^(p^i)); coefficients are Frobenius
    // symmetric, hence rational integers mod p^K
    std::vector<Poly> conj(f);
    conj[0] = t;
    for (long i = 1; i < f; ++i) conj[i] = poly_powmod(conj[i - 1], p, m0, pk_);
    // multiply out in (Z[X]/(m0,p^K))[Y]
    std::vector<Poly> mpoly{Poly{1}};  // coefficients of Y^j, each a Poly in X
    for (long i = 0; i < f; ++i) {
        std::vector<Poly> next(mpoly.size() + 1, Poly{0});
        for (size_t j = 0; j < mpoly.size(); ++j) {
            // Y * mpoly_j
            if (next[j + 1].size() < mpoly[j].size()) next[j + 1].resize(mpoly[j].size(), 0);
            for (size_t k = 0; k < mpoly[j].size(); ++k) next[j + 1][k] = mpz_mod(next[j + 1][k] + mpoly[j][k], pk_);
            // -t^(p^i) * mpoly_j
            Poly prod = poly_mod(poly_mul(mpoly[j], conj[i], pk_), m0, pk_);
            if (next[j].size() < prod.size()) next[j].resize(prod.size(), 0);
            for (size_t k = 0; k < prod.size(); ++k) next[j][k] = mpz_mod(next[j][k] - prod[k], pk_);
        }
        mpoly = std::move(next);
    }
    modulus_.assign(f + 1, 0);
    for (long j = 0; j <= f; ++j) {
        Poly cj = mpoly[j];
        cj.resize(f, 0);
        for (long k = 1; k < f; ++k)
            if (cj[k] != 0) throw precision_error("Teichmueller modulus coefficient not rational");
        modulus_[j] = cj.empty() ? 0 : cj[0];
    }
    if (modulus_[f] != 1) throw precision_error("Teichmueller modulus not monic");
    // powers of theta^p for the Frobenius lift
    Poly thp = poly_powmod(Poly{0, 1}, p, modulus_, pk_);
    theta_p_pows_.assign(f, Poly{});
    Poly acc{1};
    for (long i = 0; i < f; ++i) {
        Poly a = acc;
        a.resize(f, 0);
        theta_p_pows_[i] = a;
        if (i + 1 < f) acc = poly_mod(poly_mul(acc, thp, pk_), modulus_, pk_);
    }
}

std::vector<mpz_class> UnramCtx::reduce(std::vector<mpz_class> poly) const {
    poly = poly_mod(std::move(poly), modulus_, pk_);
    poly.resize(f_, 0);
    return poly;
}

UnramCtx::Elem UnramCtx::zero() const { return Elem{Poly(f_, 0), K_}; }

UnramCtx::Elem UnramCtx::one() const {
    Elem e = zero();
    e.c[0] = 1;
    return e;
}

UnramCtx::Elem UnramCtx::theta() const {
    Elem e = zero();
    if (f_ < 2) throw domain_error("theta undefined for degree 1");
    e.c[1] = 1;
    return e;
}

UnramCtx::Elem UnramCtx::from_scalar(const mpz_class& n) const {
    Elem e = zero();
    e.c[0] = mpz_mod(n, pk_);
    return e;
}

UnramCtx::Elem UnramCtx::from_padic(const PadicScalar& x) const {
    if (x.is_exact_zero()) return zero();
    if (x.prime() != p_) throw domain_error("mixed primes");
    if (x.is_approx_zero()) {
        Elem e = zero();
        e.aprec = std::min(K_, x.val());
        return e;
    }
    if (x.val() < 0) throw domain_error("embedding a non-integral scalar");
    Elem e = zero();
    e.aprec = std::min(K_, x.abs_prec());
    e.c[0] = mpz_mod(x.unit() * mpz_pow(p_, x.val()), mpz_pow(p_, e.aprec));
    return e;
}

bool UnramCtx::is_zero_at_prec(const Elem& a) const {
    mpz_class m = mpz_pow(p_, a.aprec);
    for (const auto& c : a.c)
        if (mpz_mod(c, m) != 0) return false;
    return true;
}

long UnramCtx::val(const Elem& a) const {
    if (is_zero_at_prec(a)) throw domain_error("valuation of (approximate) zero");
    long v = a.aprec;
    for (const auto& c : a.c) {
        mpz_class cm = mpz_mod(c, mpz_pow(p_, a.aprec));
        if (cm != 0) v = std::min(v, mpz_val(cm, p_));
    }
    return v;
}

UnramCtx::Elem UnramCtx::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.aprec = std::min(a.aprec, b.aprec);
    mpz_class m = mpz_pow(p_, r.aprec);
    r.c.resize(f_);
    for (long i = 0; i < f_; ++i) r.c[i] = mpz_mod(a.c[i] + b.c[i], m);
    return r;
}

UnramCtx::Elem UnramCtx::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

UnramCtx::Elem UnramCtx::neg(const Elem& a) const {
    Elem r = a;
    mpz_class m = mpz_pow(p_, a.aprec);
    for (auto& c : r.c) c = mpz_mod(-c, m);
    return r;
}

UnramCtx::Elem UnramCtx::mul_raw(const Elem& a, const Elem& b) const {
    Elem r;
    r.c = reduce(poly_mul(a.c, b.c, pk_));
    r.aprec = std::min(a.aprec, b.aprec);
    return r;
}

UnramCtx::Elem UnramCtx::mul(const Elem& a, const Elem& b) const {
    Elem r = mul_raw(a, b);
    // ultrametric precision gain from valuations
    long va = is_zero_at_prec(a) ? a.aprec : val(a);
    long vb = is_zero_at_prec(b) ? b.aprec : val(b);
    r.aprec = std::min({a.aprec + vb, b.aprec + va, K_});
    mpz_class m = mpz_pow(p_, r.aprec);
    for (auto& c : r.c) c = mpz_mod(c, m);
    return r;
}

UnramCtx::Elem UnramCtx::pow(const Elem& a, const mpz_class& e_in) const {
    mpz_class e = e_in;
    if (e < 0) return pow(inv(a), -e);
    Elem r = one(), base = a;
    r.aprec = a.aprec;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

UnramCtx::Elem UnramCtx::inv(const Elem& a) const {
    if (is_zero_at_prec(a)) throw precision_error("inverse of (approximate) zero");
    if (val(a) != 0) throw domain_error("inverse requires a unit");
    long A = a.aprec;
    mpz_class m = mpz_pow(p_, A);
    // solve (mul-by-a) x = e0 by Gaussian elimination mod p^A
    std::vector<std::vector<mpz_class>> M(f_, std::vector<mpz_class>(f_ + 1, 0));
    for (long j = 0; j < f_; ++j) {
        Elem ej = zero();
        ej.c[j] = 1;
        Elem col = mul_raw(a, ej);
        for (long i = 0; i < f_; ++i) M[i][j] = mpz_mod(col.c[i], m);
    }
    M[0][f_] = 1;
    for (long col = 0; col < f_; ++col) {
        long piv = -1;
        for (long r = col; r < f_; ++r)
            if (mpz_mod(M[r][col], mpz_class(p_)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw domain_error("singular system inverting unit (unexpected)");
        std::swap(M[col], M[piv]);
        mpz_class inv_piv = mpz_inv_mod(M[col][col], m);
        for (long j = col; j <= f_; ++j) M[col][j] = mpz_mod(M[col][j] * inv_piv, m);
        for (long r = 0; r < f_; ++r) {
            if (r == col || M[r][col] == 0) continue;
            mpz_class fac = M[r][col];
            for (long j = col; j <= f_; ++j) M[r][j] = mpz_mod(M[r][j] - fac * M[col][j], m);
        }
    }
    Elem x;
    x.aprec = A;
    x.c.resize(f_);
    for (long i = 0; i < f_; ++i) x.c[i] = M[i][f_];
    return x;
}

UnramCtx::Elem UnramCtx::div_by_mpz(const Elem& a, const mpz_class& n) const {
    if (n == 0) throw domain_error("division by zero");
    long vn = mpz_val(n, p_);
    mpz_class u = n / mpz_pow(p_, vn);
    Elem r = a;
    if (vn > 0) {
        if (vn >= a.aprec) throw precision_error("all precision lost dividing by p-power");
        mpz_class pv = mpz_pow(p_, vn);
        mpz_class m = mpz_pow(p_, a.aprec);
        for (auto& c : r.c) {
            mpz_class cm = mpz_mod(c, m);
            if (cm % pv != 0) throw domain_error("inexact division by p-power");
            c = cm / pv;
        }
        r.aprec = a.aprec - vn;
    }
    mpz_class m = mpz_pow(p_, r.aprec);
    mpz_class ui = mpz_inv_mod(u, m);
    for (auto& c : r.c) c = mpz_mod(c * ui, m);
    return r;
}

UnramCtx::Elem UnramCtx::frobenius(const Elem& a) const {
    Elem r = zero();
    r.aprec = a.aprec;
    mpz_class m = mpz_pow(p_, a.aprec);
    for (long i = 0; i < f_; ++i) {
        if (a.c[i] == 0) continue;
        for (long k = 0; k < f_; ++k) r.c[k] = mpz_mod(r.c[k] + a.c[i] * theta_p_pows_[i][k], m);
    }
    return r;
}

FFCtx::Elem UnramCtx::reduce_mod_p(const Elem& a) const {
    FFCtx::Elem e(f_);
    for (long i = 0; i < f_; ++i) e[i] = mpz_class(mpz_mod(a.c[i], mpz_class(p_))).get_si();
    return e;
}

UnramCtx::Elem UnramCtx::teichmueller(const FFCtx::Elem& a) const {
    if (ff_.is_zero(a)) throw domain_error("Teichmueller lift of zero");
    Elem x = zero();
    for (long i = 0; i < f_; ++i) x.c[i] = a[i];
    mpz_class pf;
    mpz_ui_pow_ui(pf.get_mpz_t(), p_, f_);
    for (long it = 0; it < K_ + 3; ++it) {
        Elem nx = pow(x, pf);
        nx.aprec = K_;
        if (nx.c == x.c) return nx;
        x = std::move(nx);
    }
    throw precision_error("Teichmueller iteration did not stabilize");
}

UnramCtx::Elem UnramCtx::log(const Elem& a) const {
    if (is_zero_at_prec(a)) throw domain_error("log of zero");
    if (val(a) != 0) {
        // strip integral powers of p (log p = 0); non-integral values do not arise here
        Elem u = a;
        long v = val(a);
        mpz_class pv = mpz_pow(p_, v);
        for (auto& c : u.c) c /= pv;
        u.aprec = a.aprec - v;
        return log(u);
    }
    Elem zeta = teichmueller(reduce_mod_p(a));
    Elem u = mul(a, inv(zeta));
    Elem t = sub(u, one());
    if (is_zero_at_prec(t)) return zero();
    long target = t.aprec;
    Elem acc = zero();
    Elem pw = one();
    pw.aprec = K_;
    long nmax = target + 8;
    for (long n = 1; n <= nmax; ++n) {
        pw = mul(pw, t);
        Elem term = div_by_mpz(pw, n);
        acc = (n % 2 == 1) ? add(acc, term) : sub(acc, term);
    }
    acc.aprec = std::min(acc.aprec, target);
    mpz_class m = mpz_pow(p_, acc.aprec);
    for (auto& c : acc.c) c = mpz_mod(c, m);
    return acc;
}

bool UnramCtx::equal_mod(const Elem& a, const Elem& b, long k) const {
    if (a.aprec < k || b.aprec < k) throw precision_error("comparison beyond known precision");
    mpz_class m = mpz_pow(p_, k);
    for (long i = 0; i < f_; ++i)
        if (mpz_mod(a.c[i] - b.c[i], m) != 0) return false;
    return true;
}

PadicScalar UnramCtx::to_padic(const Elem& a) const {
    mpz_class m = mpz_pow(p_, a.aprec);
    for (long i = 1; i < f_; ++i)
        if (mpz_mod(a.c[i], m) != 0) throw domain_error("element does not lie in Z_p");
    mpz_class c0 = mpz_mod(a.c[0], m);
    if (c0 == 0) return PadicScalar::approx_zero(p_, a.aprec);
    long v = mpz_val(c0, p_);
    return PadicScalar::from_mpz(p_, c0, a.aprec - v);
}

std::string UnramCtx::str(const Elem& a) const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < f_; ++i) {
        if (i) os << ", ";
        os << mpz_class(mpz_mod(a.c[i], mpz_pow(p_, a.aprec))).get_str();
    }
    os << "] + O(" << p_ << "^" << a.aprec << ")";
    return os.str();
}

}  // namespace padic
