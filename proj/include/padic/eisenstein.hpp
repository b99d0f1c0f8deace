#pragma once

#include <padic/scalar.hpp>

#include <vector>

namespace padic {

// Z_p[pi] with pi^(p-1) = -p, for odd p: the totally ramified extension in
// which Dwork's exponential and the Gross-Koblitz formula live.
//
// Elements are coordinate vectors of length p-1 in the basis 1, pi, ...,
// pi^(p-2), coordinates held modulo p^K.  `piprec` is the absolute precision
// in pi-units: the element is trusted modulo pi^piprec.  Coordinate storage
// additionally caps the usable precision at kprec*(p-1), tracked separately
// so that exact divisions by powers of p stay honest.
class EisCtx {
  public:
    EisCtx(long p, long K);

    long p() const { return p_; }
    long K() const { return K_; }
    long e() const { return p_ - 1; }  // ramification degree

    struct Elem {
        std::vector<mpz_class> c;
        long piprec = 0;  // known modulo pi^piprec
        long kprec = 0;   // coordinates stored modulo p^kprec
        long eff_prec(long ram) const { return std::min(piprec, kprec * ram); }
    };

    Elem zero() const;
    Elem one() const;
    Elem pi() const;
    Elem from_scalar(const mpz_class& n) const;
    Elem from_padic(const PadicScalar& x) const;  // integral x

    bool is_zero_at_prec(const Elem& a) const;
    // pi-adic valuation; throws on (approximate) zero
    long pival(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, const mpz_class& n) const;
    Elem pow(const Elem& a, long e) const;
    // multiply by pi^m, any sign of m; negative powers use pi^-(p-1) = -1/p
    // and require exact divisibility.
    Elem mul_pi_pow(const Elem& a, long m) const;
    // exact division by integer n (losing (p-1)*v_p(n) pi-digits)
    Elem div_by_mpz(const Elem& a, const mpz_class& n) const;
    // inverse of a pi-unit
    Elem inv(const Elem& a) const;

    bool equal_mod_pi(const Elem& a, const Elem& b, long P) const;

    // the Z_p part of an element that lies in Z_p; throws otherwise
    PadicScalar to_padic(const Elem& a) const;

    std::string str(const Elem& a) const;

  private:
    long p_, K_;
    mpz_class pk_;

    void renorm(Elem& a) const;
};

}  // namespace padic
