#pragma once

#include <padic/common.hpp>

#include <array>
#include <vector>

namespace padic {

// Quaternion algebra (alpha, beta / Q): i^2 = alpha, j^2 = beta, ij = -ji.
// Elements are coordinate quadruples (a, b, c, d) for a + b i + c j + d ij.
struct QuatAlgebra {
    mpq_class alpha, beta;
};

using QuatElem = std::array<mpq_class, 4>;

QuatElem quat_mul(const QuatAlgebra& Q, const QuatElem& x, const QuatElem& y);
QuatElem quat_conj(const QuatElem& x);
// Nrd = a^2 - alpha b^2 - beta c^2 + alpha beta d^2, Trd = 2a
mpq_class quat_nrd(const QuatAlgebra& Q, const QuatElem& x);
mpq_class quat_trd(const QuatElem& x);

// the two algebras with explicitly verified orders
QuatAlgebra quat_b23();    // i^2 = -1, j^2 = 3  (indefinite, discriminant 6)
QuatAlgebra quat_b2inf();  // i^2 = j^2 = -1     (Hamilton)
QuatAlgebra quat_b3inf();  // i^2 = -1, j^2 = -3

std::array<QuatElem, 4> order_b23_maximal();    // 1, i, j, (1+i+j+ij)/2
std::array<QuatElem, 4> order_hurwitz();        // 1, i, j, (1+i+j+ij)/2
std::array<QuatElem, 4> order_b3inf_maximal();  // 1, i, (i+j)/2, (1+ij)/2

// true iff the four elements span over Q, every pairwise product lies in
// their integral span, and every basis element has integral Trd and Nrd
bool order_closure_check(const QuatAlgebra& Q, const std::array<QuatElem, 4>& basis);

// Exhaustive search over integer quadruples |a|,|b|,|c|,|d| <= B in B_{2.3}
// for reduced norm 1 and |Trd| = trace_abs.  level == 2 imposes the level-two
// congruence b = c = d != a (mod 2); level == 1 drops it.
std::vector<QuatElem> torsion_search(long B, long level, long trace_abs);
// the level-two torsion candidates: expected output exactly {+1, -1}
std::vector<QuatElem> torsion_search_gamma_plus_2(long B);

// Exact verification, in the commutative ring Q(sqrt-1, sqrt2, sqrt3) viewed
// as an 8-dimensional Q-algebra, of the hyperbolic reflection products
//   A = sqrt-1 [[sqrt2, -1], [1, -sqrt2]],  B = diag(sqrt3+sqrt-1, sqrt3-sqrt-1)/2:
// A^2 = B^6 = (AB)^4 = -I, tr(AB) = -sqrt2, det(AB) = 1.
struct EscherReport {
    bool a2_ok = false;
    bool b6_ok = false;
    bool ab4_ok = false;
    bool trace_ok = false;
    bool det_ok = false;
    bool all() const { return a2_ok && b6_ok && ab4_ok && trace_ok && det_ok; }
};

EscherReport escher_generators_check();

}  // namespace padic
