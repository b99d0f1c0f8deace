#include <padic/scalar.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace padic {

long mpz_val(const mpz_class& n, long p) {
    if (n == 0) throw domain_error("valuation of zero");
    mpz_class q, pp(p);
    return (long)mpz_remove(q.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
}

mpz_class mpz_pow(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

mpz_class mpz_inv_mod(const mpz_class& u, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("not invertible modulo " + m.get_str());
    return r;
}

mpz_class mpz_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

PadicScalar PadicScalar::from_mpz(long p, const mpz_class& value, long prec, long shift) {
    if (prec < 1) throw domain_error("relative precision must be >= 1");
    PadicScalar x;
    x.p_ = p;
    if (value == 0) return zero(p);
    x.exact_zero_ = false;
    long v = mpz_val(value, p);
    x.val_ = v + shift;
    x.prec_ = prec;
    x.u_ = mpz_mod(value / mpz_pow(p, v), mpz_pow(p, prec));
    return x;
}

PadicScalar PadicScalar::from_mpq(long p, const mpq_class& value, long prec) {
    if (value == 0) return zero(p);
    mpz_class num = value.get_num(), den = value.get_den();
    long vd = mpz_val(den, p);
    PadicScalar n = from_mpz(p, num, prec);
    mpz_class du = den / mpz_pow(p, vd);
    PadicScalar d = from_mpz(p, du, prec, vd);
    return n / d;
}

PadicScalar PadicScalar::zero(long p) {
    PadicScalar x;
    x.p_ = p;
    x.exact_zero_ = true;
    return x;
}

PadicScalar PadicScalar::one(long p, long prec) { return from_mpz(p, 1, prec); }

PadicScalar PadicScalar::approx_zero(long p, long abs_prec) {
    PadicScalar x;
    x.p_ = p;
    x.exact_zero_ = false;
    x.u_ = 0;
    x.val_ = abs_prec;
    x.prec_ = 0;
    return x;
}

long PadicScalar::val() const {
    if (exact_zero_) throw domain_error("valuation of exact zero");
    return val_;
}

long PadicScalar::abs_prec() const {
    if (exact_zero_) throw domain_error("absolute precision of exact zero");
    return val_ + prec_;
}

void PadicScalar::normalize() {
    if (exact_zero_ || prec_ == 0) return;
    mpz_class m = mpz_pow(p_, prec_);
    u_ = mpz_mod(u_, m);
    if (u_ == 0) {
        // all known digits vanished
        val_ += prec_;
        prec_ = 0;
        return;
    }
    long v = mpz_val(u_, p_);
    if (v > 0) {
        if (v >= prec_) {
            val_ += prec_;
            prec_ = 0;
            u_ = 0;
            return;
        }
        u_ /= mpz_pow(p_, v);
        val_ += v;
        prec_ -= v;
    }
}

PadicScalar PadicScalar::operator-() const {
    if (exact_zero_ || prec_ == 0) return *this;
    PadicScalar r = *this;
    r.u_ = mpz_mod(-u_, mpz_pow(p_, prec_));
    return r;
}

static void check_same_prime(const PadicScalar& a, const PadicScalar& b) {
    if (a.prime() != b.prime()) throw domain_error("mixed primes");
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    long A = std::min(a.abs_prec(), b.abs_prec());
    long vmin = std::min(a.val_, b.val_);
    if (A <= vmin) return PadicScalar::approx_zero(a.p_, A);
    mpz_class m = mpz_pow(a.p_, A - vmin);
    mpz_class w = 0;
    if (!a.is_approx_zero()) w += a.u_ * mpz_pow(a.p_, a.val_ - vmin);
    if (!b.is_approx_zero()) w += b.u_ * mpz_pow(b.p_, b.val_ - vmin);
    w = mpz_mod(w, m);
    if (w == 0) return PadicScalar::approx_zero(a.p_, A);
    long v = mpz_val(w, a.p_);
    PadicScalar r;
    r.p_ = a.p_;
    r.exact_zero_ = false;
    r.val_ = vmin + v;
    r.prec_ = A - r.val_;
    r.u_ = mpz_mod(w / mpz_pow(a.p_, v), mpz_pow(a.p_, r.prec_));
    return r;
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicScalar::zero(a.prime());
    if (a.is_approx_zero() || b.is_approx_zero()) {
        // |xy| <= p^-(v_known(a) + v_known(b))
        long va = a.is_approx_zero() ? a.val_ : a.val_;
        long vb = b.is_approx_zero() ? b.val_ : b.val_;
        return PadicScalar::approx_zero(a.p_, va + vb);
    }
    PadicScalar r;
    r.p_ = a.p_;
    r.exact_zero_ = false;
    r.val_ = a.val_ + b.val_;
    r.prec_ = std::min(a.prec_, b.prec_);
    r.u_ = mpz_mod(a.u_ * b.u_, mpz_pow(a.p_, r.prec_));
    r.normalize();
    return r;
}

PadicScalar PadicScalar::inv() const {
    if (exact_zero_) throw domain_error("division by exact zero");
    if (prec_ == 0) throw precision_error("division by a value indistinguishable from zero");
    PadicScalar r;
    r.p_ = p_;
    r.exact_zero_ = false;
    r.val_ = -val_;
    r.prec_ = prec_;
    r.u_ = mpz_inv_mod(u_, mpz_pow(p_, prec_));
    return r;
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) { return a * b.inv(); }

PadicScalar PadicScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    PadicScalar r = PadicScalar::one(p_, prec_ > 0 ? prec_ : 1);
    if (e == 0) return r;
    if (exact_zero_) return *this;
    PadicScalar acc = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) r = r * acc;
        k >>= 1;
        if (k > 0) acc = acc * acc;
    }
    return r;
}

PadicScalar PadicScalar::shift(long k) const {
    if (exact_zero_) return *this;
    PadicScalar r = *this;
    r.val_ += k;
    return r;
}

PadicScalar PadicScalar::with_prec(long n) const {
    if (exact_zero_ || prec_ <= n) return *this;
    PadicScalar r = *this;
    r.prec_ = n;
    r.normalize();
    return r;
}

bool same_mod_known(const PadicScalar& a, const PadicScalar& b) {
    check_same_prime(a, b);
    if (a.is_exact_zero() && b.is_exact_zero()) return true;
    PadicScalar d = a - b;
    return d.is_exact_zero() || d.is_approx_zero();
}

bool PadicScalar::congruent_to(const mpz_class& m, long k) const {
    if (exact_zero_) return mpz_mod(m, mpz_pow(p_, k)) == 0;
    if (abs_prec() < k) throw precision_error("insufficient precision for congruence test");
    mpz_class mod = mpz_pow(p_, k);
    mpz_class val = 0;
    if (!is_approx_zero() && val_ < k) {
        if (val_ < 0) throw domain_error("congruence test on non-integral value");
        val = mpz_mod(u_ * mpz_pow(p_, val_), mod);
    }
    return val == mpz_mod(m, mod);
}

std::string PadicScalar::str() const {
    if (exact_zero_) return "0 (exact)";
    std::ostringstream os;
    if (is_approx_zero()) {
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    os << u_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_prec() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.str(); }

PadicScalar teichmueller(long p, const mpz_class& x, long N) {
    mpz_class m = mpz_pow(p, N);
    mpz_class t = mpz_mod(x, m);
    if (t % p == 0) throw domain_error("Teichmueller lift of a non-unit");
    mpz_class prev;
    // x -> x^p contracts toward the fixed point, one digit per step
    for (long i = 0; i <= N + 1; ++i) {
        prev = t;
        mpz_powm_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (t == prev) break;
    }
    if (t != prev) throw precision_error("Teichmueller iteration did not stabilize");
    return PadicScalar::from_mpz(p, t, N);
}

PadicScalar padic_log(const PadicScalar& x) {
    if (x.is_exact_zero()) throw domain_error("log of zero");
    if (x.is_approx_zero()) throw precision_error("log of a value indistinguishable from zero");
    long p = x.prime();
    long N = x.rel_prec();
    // strip p^val (log p = 0) and the Teichmueller part (log of root of unity = 0)
    mpz_class u = x.unit();
    PadicScalar zeta = teichmueller(p, u, N);
    PadicScalar one_unit = PadicScalar::from_mpz(p, u, N) / zeta;
    // one_unit = 1 + t, val(t) >= 1; log(1+t) = sum (-1)^(n+1) t^n / n
    PadicScalar t = one_unit - PadicScalar::one(p, N);
    if (t.is_exact_zero() || t.is_approx_zero()) return PadicScalar::zero(p);
    // working precision slack for the divisions by n
    long target = N;  // absolute target precision (val(t) >= 1 so log has val >= 1)
    long slack = 2;
    {
        long q = 1;
        while (q < target + 8) { q *= p; ++slack; }
    }
    long W = target + slack;
    PadicScalar tw = t;
    PadicScalar acc = PadicScalar::zero(p);
    PadicScalar pw = PadicScalar::one(p, W);
    // v_p(t^n/n) >= n - log_p(n); n beyond target+8 cannot touch digits below target
    long nmax = target + 8;
    for (long n = 1; n <= nmax; ++n) {
        pw = pw * tw;
        PadicScalar term = pw / PadicScalar::from_mpz(p, n, W);
        if (n % 2 == 0) term = -term;
        acc = acc + term;
    }
    if (acc.is_approx_zero() || acc.is_exact_zero()) return acc;
    long cap = target - acc.val();
    if (cap < 1) return PadicScalar::approx_zero(p, target);
    return acc.with_prec(cap);
}

PadicScalar padic_exp(const PadicScalar& x) {
    if (x.is_exact_zero()) return PadicScalar::one(x.prime(), 1);
    long p = x.prime();
    if (x.is_approx_zero()) {
        long need = (p == 2) ? 2 : 1;
        if (x.val() < need) throw precision_error("exp argument not known inside convergence disk");
        return PadicScalar::one(p, x.val());
    }
    long need = (p == 2) ? 2 : 1;
    if (x.val() < need) throw domain_error("exp diverges: valuation too small");
    long N = x.abs_prec();
    long slack = 2;
    {
        long q = 1;
        while (q < N + 8) { q *= p; ++slack; }
    }
    long W = N + slack * 2;
    PadicScalar acc = PadicScalar::one(p, W);
    PadicScalar term = PadicScalar::one(p, W);
    long v = x.val();
    // term n has valuation >= n*v - v_p(n!) > n*v - n/(p-1); stop when certainly > N
    long nmax = 2;
    while (nmax * v - nmax / (p - 1) - 2 <= N) ++nmax;
    for (long n = 1; n <= nmax; ++n) {
        term = term * x / PadicScalar::from_mpz(p, n, W);
        acc = acc + term;
    }
    return acc.with_prec(N);
}

}  // namespace padic
