#pragma once

#include <padic/ffield.hpp>
#include <padic/scalar.hpp>

#include <vector>

namespace padic {

// The unramified extension Z_{p^f} truncated at p^K, presented as
// Z[theta]/(m(theta), p^K) where m is the degree-f factor of X^(p^f) - X
// lifting the residue-field modulus.  theta is therefore a Teichmueller
// element: theta^(p^f) = theta holds exactly at working precision, and the
// Frobenius lift is theta -> theta^p.
//
// Elements carry an absolute precision aprec <= K: the coordinate vector is
// trusted modulo p^aprec only.
class UnramCtx {
  public:
    UnramCtx(long p, long f, long K);

    long p() const { return p_; }
    long f() const { return f_; }
    long K() const { return K_; }
    const FFCtx& residue_field() const { return ff_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    struct Elem {
        std::vector<mpz_class> c;  // coordinates in the theta-power basis
        long aprec = 0;            // absolute precision in p-units
    };

    Elem zero() const;
    Elem one() const;
    Elem theta() const;
    Elem from_scalar(const mpz_class& n) const;
    Elem from_padic(const PadicScalar& x) const;  // integral x

    bool is_zero_at_prec(const Elem& a) const;
    // valuation = min coordinate valuation (integral basis); throws if zero at precision.
    long val(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const mpz_class& e) const;
    // inverse of a unit
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    // exact division by integer n (p-part must divide all coordinates)
    Elem div_by_mpz(const Elem& a, const mpz_class& n) const;

    Elem frobenius(const Elem& a) const;

    FFCtx::Elem reduce_mod_p(const Elem& a) const;
    // Teichmueller lift of a nonzero residue element
    Elem teichmueller(const FFCtx::Elem& a) const;

    // Iwasawa logarithm of a unit (Teichmueller part contributes zero).
    Elem log(const Elem& a) const;

    bool equal_mod(const Elem& a, const Elem& b, long k) const;

    // coordinate 0 as a PadicScalar when the element lies in Z_p
    // (all higher coordinates zero at precision); throws otherwise.
    PadicScalar to_padic(const Elem& a) const;

    std::string str(const Elem& a) const;

  private:
    long p_, f_, K_;
    FFCtx ff_;
    std::vector<mpz_class> modulus_;     // monic, length f+1
    std::vector<std::vector<mpz_class>> theta_p_pows_;  // (theta^p)^i, i = 0..f-1
    mpz_class pk_;                       // p^K

    std::vector<mpz_class> reduce(std::vector<mpz_class> poly) const;
    Elem mul_raw(const Elem& a, const Elem& b) const;
};

}  // namespace padic
