#pragma once

#include <padic/common.hpp>

#include <vector>

namespace padic {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // row-major

// A filtered isocrystal over Q_p with trivial sigma (residue field F_p):
// Frobenius matrix phi acting on column vectors, and a decreasing exhaustive
// filtration stored through an adapted basis: fil_basis[k] has weight[k], and
// F^j = span{ fil_basis[k] : weight[k] >= j }.  Any flag arises this way.
struct FilteredIsocrystal {
    long p = 0;
    QMat phi;                  // n x n, invertible
    std::vector<long> weight;  // length n
    QMat fil_basis;            // n rows forming a basis of Q^n

    long n() const { return static_cast<long>(phi.size()); }
};

// Raised when the Frobenius is outside the supported shapes (neither distinct
// split eigenvalues nor certified irreducible characteristic polynomial).
struct unsupported_frobenius : domain_error {
    using domain_error::domain_error;
};

// Throws domain_error on malformed data (singular phi or fil_basis,
// mismatched sizes, p not prime).
void isocrystal_validate(const FilteredIsocrystal& V);

// t_N = ord_p det(phi)
long newton_number(const FilteredIsocrystal& V);
// t_H = sum_i i dim gr^i_F = sum of the weights
long hodge_number(const FilteredIsocrystal& V);

// invariants of the subobject spanned by the given vectors, with the induced
// filtration F'^j = V' \cap F^j (Hodge) resp. the restricted Frobenius
// (Newton; the span must be phi-stable)
long hodge_number_induced(const FilteredIsocrystal& V, const QMat& span);
long newton_number_induced(const FilteredIsocrystal& V, const QMat& span);

struct WaReport {
    bool admissible = false;
    long t_N = 0, t_H = 0;  // of the total object
    bool has_witness = false;
    QMat witness;  // basis of a violating subobject when !admissible
    long witness_tN = 0, witness_tH = 0;
    bool irreducible_path = false;  // verdict from totals only (no proper subobjects)
};

// Fontaine's criterion: t_H(V') <= t_N(V') on every nonzero phi-stable
// subobject, with equality for V itself.  Supported Frobenius shapes: distinct
// eigenvalues in Q (subobjects = spans of eigenline subsets) or characteristic
// polynomial certified irreducible over Q_p (no proper subobjects).
WaReport weakly_admissible(const FilteredIsocrystal& V);

// independent recomputation for n <= 3 split objects: same subset enumeration
// but t_N through det of the restricted matrix instead of eigenvalue sums
WaReport weakly_admissible_bruteforce(const FilteredIsocrystal& V);

// the dual object: phi^{-T}, reflected filtration (weights negated on the
// dual basis); weakly admissible iff V is
FilteredIsocrystal isocrystal_dual(const FilteredIsocrystal& V);

// exact rational linear algebra used by the module (exposed for tests/CLI)
long qmat_rank(QMat m);
mpq_class qmat_det(QMat m);
QMat qmat_inverse(const QMat& m);  // throws domain_error if singular
QMat qmat_mul(const QMat& a, const QMat& b);

// characteristic polynomial det(x I - m), coefficients c[0..n] with c[n] = 1
std::vector<mpq_class> qmat_charpoly(const QMat& m);

// sufficient irreducibility certificate over Q_p for a rational polynomial:
// Eisenstein at p, irreducible modulo p, or (degree 2) discriminant a
// non-square in Q_p.  false means "not certified", not "reducible".
bool poly_qp_irreducible_certified(const std::vector<mpq_class>& c, long p);

long mpq_valuation(const mpq_class& x, long p);  // x != 0

}  // namespace padic
