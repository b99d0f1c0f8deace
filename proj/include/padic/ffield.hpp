#pragma once

#include <padic/common.hpp>

#include <vector>

namespace padic {

// F_{p^f} with a fixed irreducible modulus, found by deterministic search:
// among monic degree-f polynomials x^f + c_{f-1}x^{f-1} + ... + c_0, the one
// whose coefficient word (c_0 + c_1 p + ...) is smallest.  Elements are fully
// reduced coefficient vectors (length f, entries in [0, p)).
class FFCtx {
  public:
    FFCtx(long p, long f);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }  // p^f (requires p^f to fit in long)
    // monic modulus: coefficient i of x^i, i = 0..f (modulus_[f] == 1)
    const std::vector<long>& modulus() const { return modulus_; }

    using Elem = std::vector<long>;

    Elem zero() const { return Elem(f_, 0); }
    Elem one() const;
    Elem from_int(long n) const;
    // element with index n in [0, q): base-p digits of n are the coefficients
    Elem from_index(long n) const;
    long to_index(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, long e) const;
    Elem inv(const Elem& a) const;
    Elem frobenius(const Elem& a) const { return pow(a, p_); }

    // multiplicative order (a != 0)
    long order(const Elem& a) const;

  private:
    long p_, f_, q_;
    std::vector<long> modulus_;

    std::vector<long> reduce(std::vector<long> poly) const;
};

// Irreducibility of a monic polynomial over F_p (coefficients c[0..deg], c[deg]=1).
bool ffield_poly_irreducible(long p, const std::vector<long>& c);

}  // namespace padic
