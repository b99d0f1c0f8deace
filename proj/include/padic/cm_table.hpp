#pragma once

#include <padic/scalar.hpp>

#include <string>
#include <vector>

namespace padic {

// An imaginary quadratic field of fundamental discriminant -d: class number h,
// unit count w, character eps = Kronecker(-d/.).  2hd/w = -sum_{u=1..d} eps(u) u.
struct CmRow {
    long d = 0;
    long h = 0;
    long w = 0;
};

// Kronecker symbol (a/n)
int kronecker_sym(const mpz_class& a, const mpz_class& n);

// -d a fundamental discriminant?
bool is_fundamental_neg_disc(long d);

// class number of discriminant -d by counting reduced binary quadratic forms
// b^2 - 4ac = -d, -a < b <= a <= c, b >= 0 when a = c.
long class_number_forms(long d);

// all rows with fundamental -d, 3 <= d <= dmax
std::vector<CmRow> cm_rows_generate(long dmax);

// the analytic class number identity 2hd/w = -sum eps(u) u
bool cm_row_validate(const CmRow& row);

// prod over u in (Z/d)^* of Gamma_p(<p u/d>)^{-eps(u)}, with the rational
// exponent w/4h reported symbolically; requires p odd, p coprime to d.
struct CmGammaProduct {
    PadicScalar base;
    mpq_class exponent;  // w / 4h
};
CmGammaProduct cm_gamma_product(long p, const CmRow& row, long N);

// JSON data file: top-level array of {"d":, "h":, "w":}
std::vector<CmRow> cm_rows_load(const std::string& path);
void cm_rows_save(const std::string& path, const std::vector<CmRow>& rows);

}  // namespace padic
