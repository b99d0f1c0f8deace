#include <padic/series.hpp>

#include <algorithm>
#include <sstream>

namespace padic {

SeriesQ series_zero(long N, const std::string& var) {
    SeriesQ f;
    f.a.assign(N, mpq_class(0));
    f.var = var;
    return f;
}

SeriesQ series_const(const mpq_class& c, long N, const std::string& var) {
    SeriesQ f = series_zero(N, var);
    if (N > 0) f.a[0] = c;
    return f;
}

SeriesQ series_x(long N, const std::string& var) {
    SeriesQ f = series_zero(N, var);
    if (N > 1) f.a[1] = 1;
    return f;
}

static long min_order(const SeriesQ& f, const SeriesQ& g) { return std::min(f.order(), g.order()); }

SeriesQ series_add(const SeriesQ& f, const SeriesQ& g) {
    SeriesQ r = series_zero(min_order(f, g), f.var);
    for (long n = 0; n < r.order(); ++n) r.a[n] = f.a[n] + g.a[n];
    return r;
}

SeriesQ series_sub(const SeriesQ& f, const SeriesQ& g) {
    SeriesQ r = series_zero(min_order(f, g), f.var);
    for (long n = 0; n < r.order(); ++n) r.a[n] = f.a[n] - g.a[n];
    return r;
}

SeriesQ series_mul(const SeriesQ& f, const SeriesQ& g) {
    long N = min_order(f, g);
    SeriesQ r = series_zero(N, f.var);
    for (long i = 0; i < N; ++i) {
        if (f.a[i] == 0) continue;
        for (long j = 0; i + j < N; ++j) {
            if (g.a[j] == 0) continue;
            r.a[i + j] += f.a[i] * g.a[j];
        }
    }
    return r;
}

SeriesQ series_scale(const mpq_class& c, const SeriesQ& f) {
    SeriesQ r = f;
    for (auto& x : r.a) x *= c;
    return r;
}

SeriesQ series_inverse(const SeriesQ& f) {
    if (f.order() == 0 || f.a[0] == 0) throw domain_error("series reciprocal needs invertible constant term");
    long N = f.order();
    SeriesQ r = series_zero(N, f.var);
    mpq_class c0 = 1 / f.a[0];
    r.a[0] = c0;
    for (long n = 1; n < N; ++n) {
        mpq_class s = 0;
        for (long k = 1; k <= n; ++k) s += f.a[k] * r.a[n - k];
        r.a[n] = -c0 * s;
    }
    return r;
}

SeriesQ series_div(const SeriesQ& f, const SeriesQ& g) { return series_mul(f, series_inverse(g)); }

SeriesQ series_compose(const SeriesQ& f, const SeriesQ& g) {
    if (g.order() > 0 && g.a[0] != 0) throw domain_error("series composition needs g(0) = 0");
    long N = min_order(f, g);
    SeriesQ r = series_zero(N, g.var);
    // Horner from the top coefficient
    for (long n = std::min<long>(f.order(), N) - 1; n >= 0; --n) {
        r = series_mul(r, g);
        r.a.resize(N, mpq_class(0));
        r.a[0] += f.a[n];
    }
    return r;
}

SeriesQ series_derive(const SeriesQ& f) {
    if (f.order() == 0) return f;
    SeriesQ r = series_zero(f.order() - 1, f.var);
    for (long n = 1; n < f.order(); ++n) r.a[n - 1] = f.a[n] * n;
    return r;
}

bool series_is_zero(const SeriesQ& f) {
    for (const auto& c : f.a)
        if (c != 0) return false;
    return true;
}

SeriesQ hypergeometric_series(const mpq_class& a, const mpq_class& b, const mpq_class& c, long N) {
    SeriesQ f = series_zero(N);
    if (N == 0) return f;
    f.a[0] = 1;
    mpq_class cur = 1;
    for (long n = 1; n < N; ++n) {
        mpq_class den = (c + (n - 1)) * n;
        if (den == 0) throw domain_error("hypergeometric series: Pochhammer denominator vanished");
        cur *= (a + (n - 1)) * (b + (n - 1)) / den;
        f.a[n] = cur;
    }
    return f;
}

SeriesQ operator_apply(const DiffOperator& L, const SeriesQ& f) {
    long mu = L.order();
    long N = L.deriv == DiffOperator::Deriv::ddz ? f.order() - mu : f.order();
    if (N < 0) N = 0;
    SeriesQ acc = series_zero(N, f.var);
    SeriesQ der = f;
    for (long i = 0; i <= mu; ++i) {
        // multiply der by alpha_i and accumulate
        for (size_t j = 0; j < L.alpha[i].size(); ++j) {
            const mpq_class& c = L.alpha[i][j];
            if (c == 0) continue;
            for (long n = 0; n + static_cast<long>(j) < N && n < der.order(); ++n)
                acc.a[n + j] += c * der.a[n];
        }
        if (i < mu) {
            if (L.deriv == DiffOperator::Deriv::ddz) {
                der = series_derive(der);
            } else {
                // theta f = z f'
                SeriesQ t = series_zero(der.order(), der.var);
                for (long n = 0; n < der.order(); ++n) t.a[n] = der.a[n] * n;
                der = t;
            }
        }
    }
    return acc;
}

DiffOperator to_theta_form(const DiffOperator& L) {
    if (L.deriv == DiffOperator::Deriv::theta) return L;
    long mu = L.order();
    // (d/dz)^i = z^{-i} theta(theta-1)...(theta-i+1); operate with z-exponent
    // offsets and clear the worst negative offset at the end.
    // term a_{i,j} z^j (d/dz)^i -> a_{i,j} z^{j-i} sum_l s1(i,l) theta^l
    // where s1 are signed Stirling numbers of the first kind.
    std::vector<std::vector<mpz_class>> s1(mu + 1);
    s1[0] = {1};
    for (long i = 1; i <= mu; ++i) {
        s1[i].assign(i + 1, 0);
        // x(x-1)...(x-i+1) = (x - (i-1)) * prev
        for (long l = 0; l < i; ++l) {
            s1[i][l + 1] += s1[i - 1][l];
            s1[i][l] -= (i - 1) * s1[i - 1][l];
        }
    }
    long shift = 0;
    for (long i = 0; i <= mu; ++i)
        for (size_t j = 0; j < L.alpha[i].size(); ++j)
            if (L.alpha[i][j] != 0) shift = std::max(shift, i - static_cast<long>(j));
    DiffOperator R;
    R.deriv = DiffOperator::Deriv::theta;
    R.alpha.assign(mu + 1, {});
    for (long i = 0; i <= mu; ++i)
        for (size_t j = 0; j < L.alpha[i].size(); ++j) {
            if (L.alpha[i][j] == 0) continue;
            long zdeg = static_cast<long>(j) - i + shift;
            // z^zdeg * sum_l s1(i,l) theta^l, but theta^l must be commuted past
            // z^zdeg first: theta^l z^d = z^d (theta + d)^l.  We are building
            // sum b_l(z) theta^l with coefficients on the left, so rewrite
            // z^{j-i} FF_i(theta) directly: FF_i(theta) applied after the
            // multiplication corresponds to coefficients-on-left form already.
            for (long l = 0; l <= i; ++l) {
                if (s1[i][l] == 0) continue;
                auto& poly = R.alpha[l];
                if (static_cast<long>(poly.size()) <= zdeg) poly.resize(zdeg + 1, mpq_class(0));
                poly[zdeg] += mpq_class(s1[i][l]) * L.alpha[i][j];
            }
        }
    while (R.alpha.size() > 1 && R.alpha.back().empty()) R.alpha.pop_back();
    return R;
}

DiffOperator operator_recenter(const DiffOperator& L, const mpq_class& r, const mpq_class& s) {
    if (s == 0) throw domain_error("degenerate affine substitution");
    if (L.deriv != DiffOperator::Deriv::ddz) throw domain_error("recentering expects d/dz form");
    long mu = L.order();
    DiffOperator R;
    R.deriv = DiffOperator::Deriv::ddz;
    R.alpha.assign(mu + 1, {});
    // alpha_i(r + s w) (1/s)^i d/dw^i
    mpq_class si = 1;
    for (long i = 0; i <= mu; ++i) {
        // polynomial composition with r + s w by Horner
        std::vector<mpq_class> comp{0};
        const auto& A = L.alpha[i];
        for (long j = static_cast<long>(A.size()) - 1; j >= 0; --j) {
            // comp = comp * (r + s w) + A[j]
            std::vector<mpq_class> next(comp.size() + 1, mpq_class(0));
            for (size_t k = 0; k < comp.size(); ++k) {
                next[k] += comp[k] * r;
                next[k + 1] += comp[k] * s;
            }
            next[0] += A[j];
            comp = std::move(next);
        }
        while (comp.size() > 1 && comp.back() == 0) comp.pop_back();
        for (auto& c : comp) c /= si;
        R.alpha[i] = std::move(comp);
        si *= s;
    }
    return R;
}

static mpq_class poly_eval(const std::vector<mpq_class>& poly, const mpq_class& x) {
    mpq_class r = 0;
    for (long j = static_cast<long>(poly.size()) - 1; j >= 0; --j) r = r * x + poly[j];
    return r;
}

SeriesQ ode_taylor(const DiffOperator& L, const mpq_class& center, const std::vector<mpq_class>& inits,
                   long N) {
    if (L.deriv != DiffOperator::Deriv::ddz) throw domain_error("ode_taylor expects d/dz form");
    long mu = L.order();
    if (static_cast<long>(inits.size()) != mu) throw domain_error("ode_taylor: need order-many initial values");
    if (poly_eval(L.alpha[mu], center) == 0) throw domain_error("ode_taylor: singular expansion point");
    DiffOperator Lc = (center == 0) ? L : operator_recenter(L, center, 1);
    SeriesQ y = series_zero(N, "u");
    for (long m = 0; m < std::min<long>(mu, N); ++m) {
        // inits are y(c), y'(c), ...: Taylor coefficient m is y^(m)(c)/m!
        mpq_class fact = 1;
        for (long t = 2; t <= m; ++t) fact *= t;
        y.a[m] = inits[m] / fact;
    }
    // coefficient of u^k of L(y): sum_i sum_j alpha_{i,j} ff(k+i-j, i) y_{k+i-j}
    for (long k = 0; k + mu < N; ++k) {
        mpq_class rhs = 0;
        mpq_class lead = 0;
        for (long i = 0; i <= mu; ++i) {
            for (size_t j = 0; j < Lc.alpha[i].size(); ++j) {
                const mpq_class& c = Lc.alpha[i][j];
                if (c == 0) continue;
                long m = k + i - static_cast<long>(j);
                if (m < 0 || m > k + mu) continue;
                mpq_class ff = 1;  // m (m-1) ... (m-i+1)
                for (long t = 0; t < i; ++t) ff *= (m - t);
                if (ff == 0) continue;
                if (m == k + mu) {
                    lead += c * ff;
                } else {
                    if (m < N) rhs += c * ff * y.a[m];
                }
            }
        }
        if (lead == 0) throw domain_error("ode_taylor: recursion leading coefficient vanished");
        y.a[k + mu] = -rhs / lead;
    }
    return y;
}

long mpq_val(const mpq_class& x, long p) {
    if (x == 0) throw domain_error("valuation of zero");
    return mpz_val(x.get_num(), p) - mpz_val(x.get_den(), p);
}

mpq_class valuation_slope(const SeriesQ& f, long p, long n_min, long n_max) {
    if (n_min < 1) throw domain_error("valuation_slope: n_min must be >= 1");
    if (n_max >= f.order()) throw domain_error("valuation_slope: window beyond truncation order");
    bool found = false;
    mpq_class best = 0;
    for (long n = n_min; n <= n_max; ++n) {
        if (f.a[n] == 0) continue;
        mpq_class s(mpq_val(f.a[n], p), n);
        s.canonicalize();
        if (!found || s < best) {
            best = s;
            found = true;
        }
    }
    if (!found) throw domain_error("valuation_slope: all sampled coefficients are zero");
    return best;
}

std::string series_to_text(const SeriesQ& f) {
    std::ostringstream os;
    for (long n = 0; n < f.order(); ++n)
        os << n << '\t' << f.a[n].get_num().get_str() << '/' << f.a[n].get_den().get_str() << '\n';
    return os.str();
}

SeriesQ series_from_text(const std::string& text) {
    SeriesQ f;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw domain_error("series text: missing tab separator");
        long n = std::stol(line.substr(0, tab));
        mpq_class v(line.substr(tab + 1));
        v.canonicalize();
        if (n != f.order()) throw domain_error("series text: indices must be consecutive from 0");
        f.a.push_back(v);
    }
    return f;
}

}  // namespace padic
