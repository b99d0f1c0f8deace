#pragma once

#include <padic/common.hpp>

#include <string>
#include <vector>

namespace padic {

// Truncated formal power series with exact rational coefficients a_0..a_{N-1}.
// The truncation order is the vector length; binary operations truncate at the
// finer of the two operand orders' minimum.
struct SeriesQ {
    std::vector<mpq_class> a;
    std::string var = "z";

    long order() const { return static_cast<long>(a.size()); }
    const mpq_class& operator[](long n) const { return a[n]; }
};

SeriesQ series_zero(long N, const std::string& var = "z");
SeriesQ series_const(const mpq_class& c, long N, const std::string& var = "z");
SeriesQ series_x(long N, const std::string& var = "z");

SeriesQ series_add(const SeriesQ& f, const SeriesQ& g);
SeriesQ series_sub(const SeriesQ& f, const SeriesQ& g);
SeriesQ series_mul(const SeriesQ& f, const SeriesQ& g);
SeriesQ series_scale(const mpq_class& c, const SeriesQ& f);
// multiplicative reciprocal; requires f(0) != 0
SeriesQ series_inverse(const SeriesQ& f);
SeriesQ series_div(const SeriesQ& f, const SeriesQ& g);
// f(g(x)); requires g(0) = 0
SeriesQ series_compose(const SeriesQ& f, const SeriesQ& g);
SeriesQ series_derive(const SeriesQ& f);

bool series_is_zero(const SeriesQ& f);

// F(a,b,c;x) truncated at order N.  Throws domain_error when a Pochhammer
// denominator (c)_n n! vanishes before order N.
SeriesQ hypergeometric_series(const mpq_class& a, const mpq_class& b, const mpq_class& c, long N);

// Linear differential operator sum_i alpha_i(z) D^i where D is d/dz or
// theta = z d/dz depending on the convention flag.  alpha.back() != 0.
struct DiffOperator {
    enum class Deriv { ddz, theta };
    std::vector<std::vector<mpq_class>> alpha;  // alpha[i] = coefficients of z^j
    Deriv deriv = Deriv::ddz;

    long order() const { return static_cast<long>(alpha.size()) - 1; }
};

// apply L to a truncated series (valid to order f.order() - order of L when
// deriv is d/dz; exact in theta form)
SeriesQ operator_apply(const DiffOperator& L, const SeriesQ& f);

// rewrite a d/dz-form operator in theta-form, multiplying by the power of z
// that clears negative exponents (the Newton polygon is insensitive to this)
DiffOperator to_theta_form(const DiffOperator& L);

// substitute z = r + s*w (s != 0), returning the operator in the variable w
DiffOperator operator_recenter(const DiffOperator& L, const mpq_class& r, const mpq_class& s);

// unique truncated solution with initial jet inits at an ordinary point 0 of
// the (recentred) operator; L must be in d/dz form.
SeriesQ ode_taylor(const DiffOperator& L, const mpq_class& center, const std::vector<mpq_class>& inits,
                   long N);

// min over n in [n_min, n_max] of v_p(a_n)/n over nonzero coefficients; the
// tail statistic whose limit is -log_p(radius of convergence).
mpq_class valuation_slope(const SeriesQ& f, long p, long n_min, long n_max);

long mpq_val(const mpq_class& x, long p);  // x != 0

// line-oriented "n<TAB>numerator/denominator" dump
std::string series_to_text(const SeriesQ& f);
SeriesQ series_from_text(const std::string& text);

}  // namespace padic
