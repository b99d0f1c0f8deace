#include <padic/ffield.hpp>

#include <numeric>

namespace padic {

namespace {

using Poly = std::vector<long>;  // coefficient i of x^i, not necessarily normalized

Poly poly_mod(Poly a, const Poly& m, long p) {
    long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) > dm) {
        long lead = a.back() % p;
        long da = static_cast<long>(a.size()) - 1;
        if (lead != 0) {
            for (long i = 0; i <= dm; ++i) {
                long& c = a[da - dm + i];
                c = ((c - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    for (auto& c : a) c = ((c % p) + p) % p;
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& m, long p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m, p);
        e >>= 1;
        if (e > 0) base = poly_mulmod(base, base, m, p);
    }
    r.resize(m.size() - 1, 0);
    return r;
}

bool poly_is_x(const Poly& a) {
    for (size_t i = 0; i < a.size(); ++i) {
        long want = (i == 1) ? 1 : 0;
        if ((i < a.size() ? a[i] : 0) != want) return false;
    }
    return a.size() >= 2;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    auto deg = [](const Poly& f) {
        long d = static_cast<long>(f.size()) - 1;
        while (d >= 0 && f[d] == 0) --d;
        return d;
    };
    while (deg(b) >= 0) {
        long db = deg(b);
        Poly m(b.begin(), b.begin() + db + 1);
        long lead_inv = 1;
        {  // make b monic for use as modulus
            long lead = m[db];
            long t = lead, inv = 1;
            // Fermat inverse
            long e = p - 2, base = t, acc = 1;
            while (e > 0) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            lead_inv = acc;
            for (auto& c : m) c = c * lead_inv % p;
        }
        Poly r = poly_mod(a, m, p);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

bool ffield_poly_irreducible(long p, const std::vector<long>& c) {
    long f = static_cast<long>(c.size()) - 1;
    if (f < 1 || c[f] != 1) return false;
    // x^(p^f) == x mod c, and gcd(x^(p^(f/l)) - x, c) trivial for prime l | f
    mpz_class pf;
    mpz_ui_pow_ui(pf.get_mpz_t(), p, f);
    Poly x{0, 1};
    Poly xq = poly_powmod(x, pf, c, p);
    if (!poly_is_x(xq)) return false;
    for (long l = 2; l <= f; ++l) {
        if (f % l != 0) continue;
        bool lprime = true;
        for (long d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, f / l);
        Poly xe = poly_powmod(x, pe, c, p);
        // xe - x
        Poly diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly g = poly_gcd(c, diff, p);
        long dg = static_cast<long>(g.size()) - 1;
        while (dg >= 0 && g[dg] == 0) --dg;
        if (dg > 0) return false;
    }
    return true;
}

FFCtx::FFCtx(long p, long f) : p_(p), f_(f) {
    if (!is_prime_small(p)) throw domain_error("p must be prime");
    if (f < 1) throw domain_error("degree must be >= 1");
    q_ = 1;
    for (long i = 0; i < f; ++i) {
        if (q_ > (1L << 40) / p) throw domain_error("p^f too large for exhaustive field");
        q_ *= p;
    }
    modulus_.assign(f + 1, 0);
    modulus_[f] = 1;
    if (f == 1) {
        // x itself is irreducible; elements are just Z/p
        return;
    }
    for (long n = 0; n < q_; ++n) {
        long m = n;
        for (long i = 0; i < f; ++i) {
            modulus_[i] = m % p;
            m /= p;
        }
        if (ffield_poly_irreducible(p, modulus_)) return;
    }
    throw domain_error("no irreducible modulus found");  // unreachable
}

FFCtx::Elem FFCtx::one() const {
    Elem e(f_, 0);
    e[0] = 1;
    return e;
}

FFCtx::Elem FFCtx::from_int(long n) const {
    Elem e(f_, 0);
    e[0] = ((n % p_) + p_) % p_;
    return e;
}

FFCtx::Elem FFCtx::from_index(long n) const {
    Elem e(f_, 0);
    for (long i = 0; i < f_; ++i) {
        e[i] = n % p_;
        n /= p_;
    }
    return e;
}

long FFCtx::to_index(const Elem& a) const {
    long n = 0;
    for (long i = f_ - 1; i >= 0; --i) n = n * p_ + a[i];
    return n;
}

bool FFCtx::is_zero(const Elem& a) const {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

FFCtx::Elem FFCtx::add(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (long i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FFCtx::Elem FFCtx::sub(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (long i = 0; i < f_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
    return r;
}

FFCtx::Elem FFCtx::neg(const Elem& a) const { return sub(zero(), a); }

std::vector<long> FFCtx::reduce(std::vector<long> poly) const {
    poly = poly_mod(std::move(poly), modulus_, p_);
    poly.resize(f_, 0);
    return poly;
}

FFCtx::Elem FFCtx::mul(const Elem& a, const Elem& b) const {
    std::vector<long> r(2 * f_ - 1, 0);
    for (long i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < f_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    return reduce(std::move(r));
}

FFCtx::Elem FFCtx::pow(const Elem& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = one(), base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

FFCtx::Elem FFCtx::inv(const Elem& a) const {
    if (is_zero(a)) throw domain_error("inverse of zero in finite field");
    return pow(a, q_ - 2);
}

long FFCtx::order(const Elem& a) const {
    if (is_zero(a)) throw domain_error("order of zero");
    Elem x = a;
    long n = 1;
    while (!(x == one())) {
        x = mul(x, a);
        ++n;
        if (n > q_) throw domain_error("order computation ran away");
    }
    return n;
}

}  // namespace padic
