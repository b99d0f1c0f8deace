#pragma once

#include <padic/common.hpp>

#include <iosfwd>

namespace padic {

// An element of Q_p known to finite relative precision:
//   value = unit * p^val,  unit a p-adic unit known modulo p^prec.
//
// Two degenerate states exist besides ordinary values:
//   - exact zero (flag), valuation +infinity by convention;
//   - "approximate zero": a computed value indistinguishable from zero at
//     its absolute precision.  It remembers the absolute precision in `val`
//     and has prec == 0.  It can be added and multiplied, but inverting it
//     raises precision_error.
class PadicScalar {
  public:
    PadicScalar() = default;

    // value * p^shift with the given relative precision.
    static PadicScalar from_mpz(long p, const mpz_class& value, long prec, long shift = 0);
    static PadicScalar from_mpq(long p, const mpq_class& value, long prec);
    static PadicScalar zero(long p);
    static PadicScalar one(long p, long prec);
    // 0 mod p^abs_prec, nothing more known.
    static PadicScalar approx_zero(long p, long abs_prec);

    long prime() const { return p_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_approx_zero() const { return !exact_zero_ && prec_ == 0; }
    bool is_zeroish() const { return exact_zero_ || prec_ == 0; }
    // valuation; throws on exact zero.
    long val() const;
    long rel_prec() const { return prec_; }
    // absolute precision val + rel_prec (for approximate zero, the known bound).
    long abs_prec() const;
    const mpz_class& unit() const { return u_; }

    // canonical integer representative of value / p^val() in [0, p^prec).
    // For integral values, lift() * p^val is the representative mod p^abs_prec.
    mpz_class lift() const { return u_; }

    PadicScalar operator-() const;
    friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
    PadicScalar inv() const;
    PadicScalar pow(long e) const;  // e may be negative

    // x * p^k (exact shift).
    PadicScalar shift(long k) const;

    // truncate relative precision to n (no-op if already coarser).
    PadicScalar with_prec(long n) const;

    // equality as known values: true iff |a-b| <= p^-(min abs_prec).
    friend bool same_mod_known(const PadicScalar& a, const PadicScalar& b);
    // value congruent to integer m modulo p^k?
    bool congruent_to(const mpz_class& m, long k) const;

    std::string str() const;

  private:
    long p_ = 0;
    mpz_class u_ = 0;
    long val_ = 0;
    long prec_ = 0;
    bool exact_zero_ = true;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

// Teichmueller representative: the (p-1)th root of unity congruent to x mod p
// (x a unit).  Result carries relative precision N.
PadicScalar teichmueller(long p, const mpz_class& x, long N);

// Iwasawa logarithm: log(p) = 0, log of roots of unity = 0.  x != 0.
PadicScalar padic_log(const PadicScalar& x);

// Exponential; requires val(x) >= 1 (p odd) resp. >= 2 (p = 2).
PadicScalar padic_exp(const PadicScalar& x);

}  // namespace padic
