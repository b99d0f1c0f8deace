#pragma once

#include <padic/series.hpp>

#include <array>
#include <string>
#include <vector>

namespace padic {

// parameters of z(z-1)y'' + (c - (a+b+1)z)y' - ab y = 0
struct HgdeParams {
    mpq_class a, b, c;
};

struct SchemeColumn {
    std::string point;  // "0", "1", "inf"
    mpq_class e1, e2;   // local exponent pair (at inf: negated convention)
};

struct RiemannScheme {
    std::array<SchemeColumn, 3> col;
};

// sum of all six exponents; equals 1 for a second-order operator on P^1 with
// three regular singularities (Fuchs relation)
mpq_class fuchs_sum(const RiemannScheme& s);

struct TriangleTriple {
    long e0 = 2, e1 = 2, einf = 2;

    bool operator==(const TriangleTriple&) const = default;
};

enum class TriangleClass { spherical, euclidean, hyperbolic };

// by the angle sum 1/e0 + 1/e1 + 1/einf against 1
TriangleClass classify_triple(const TriangleTriple& t);
// dihedral / tetrahedral / octahedral / icosahedral; throws if not spherical
std::string spherical_name(const TriangleTriple& t);

// a = (1 - 1/e0 - 1/e1 + 1/einf)/2, b likewise with -1/einf, c = 1 - 1/e0,
// so that 1-c = 1/e0, c-a-b = 1/e1, a-b = 1/einf
HgdeParams triple_to_hgde(const TriangleTriple& t);

// exponent scheme {0, 1-c} at 0, {0, c-a-b} at 1, {a, b} at infinity
RiemannScheme riemann_scheme(const HgdeParams& h);
// uniformizing scheme (1 +- 1/e)/2 at 0 and 1, -(1 +- 1/einf)/2 at infinity;
// differs from riemann_scheme(triple_to_hgde(t)) by the algebraic twist
// z^{(1-1/e0)/2} (z-1)^{(1-1/e1)/2}
RiemannScheme uniformizing_scheme(const TriangleTriple& t);

// formal Newton polygon at infinity of a theta-form operator sum alpha_i D^i:
// upper concave boundary of the points (i, deg alpha_0 - deg alpha_i); the
// region {X <= i, Y >= y_i} it bounds is convex, so the boundary slopes
// decrease left to right.  Operators in d/dz form are converted first.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;          // left to right
    std::vector<std::pair<mpq_class, long>> slopes;       // (slope, x-multiplicity)
    long height = 0;                                      // formal irregularity
};

NewtonPolygon newton_polygon_infty(const DiffOperator& L);

// hypergeometric radius diagnostic at the origin: tail minimum of v_p(a_n)/n,
// whose limit is log_p of the radius of convergence
struct RadiusReport {
    long p = 0, n_min = 0, n_max = 0;
    mpq_class slope_estimate;
    double radius_estimate = 0;     // p^slope_estimate
    bool radius_at_least_one = false;
};

RadiusReport radius_report(const HgdeParams& h, long p, long n_max);

std::string scheme_to_text(const RiemannScheme& s);
std::string polygon_to_text(const NewtonPolygon& np);
// SVG path element data for the boundary polyline (y axis flipped for display)
std::string polygon_svg_path(const NewtonPolygon& np, long scale = 40);

}  // namespace padic
