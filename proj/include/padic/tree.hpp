#pragma once

#include <padic/common.hpp>
#include <padic/quaternion.hpp>

#include <array>
#include <string>
#include <vector>

namespace padic {

// The Bruhat-Tits tree of PGL_2 over K = Q_p[x]/(m(x)), m monic with rational
// coefficients and irreducible modulo p (so K is the unramified extension of
// degree f = deg m and the x-power basis is an integral basis).  Field
// elements are exact rational coordinate vectors; valuations are computed as
// the minimum coordinate valuation.
class TreeCtx {
  public:
    // default modulus: x for f = 1, otherwise the smallest monic polynomial
    // with coefficients in [0, p) that is irreducible modulo p
    TreeCtx(long p, long f);
    TreeCtx(long p, std::vector<mpq_class> modulus);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }  // p^f
    const std::vector<mpq_class>& modulus() const { return modulus_; }

    using KElem = std::vector<mpq_class>;  // length f

    KElem zero() const;
    KElem one() const;
    KElem gen() const;  // the class of x
    KElem from_rational(const mpq_class& a) const;

    bool is_zero(const KElem& a) const;
    long val(const KElem& a) const;  // throws domain_error on zero

    KElem add(const KElem& a, const KElem& b) const;
    KElem sub(const KElem& a, const KElem& b) const;
    KElem neg(const KElem& a) const;
    KElem mul(const KElem& a, const KElem& b) const;
    KElem inv(const KElem& a) const;
    KElem div(const KElem& a, const KElem& b) const { return mul(a, inv(b)); }
    KElem scale_p(const KElem& a, long k) const;  // a * p^k

    std::string str(const KElem& a) const;

  private:
    long p_, f_, q_;
    std::vector<mpq_class> modulus_;  // monic, length f + 1
    std::vector<std::vector<mpq_class>> xpow_;  // x^f .. x^(2f-2) reduced
};

// Vertex in normal form: the similarity class of the lattice with basis
// matrix [[p^r, a], [0, 1]], i.e. the disk D(a, |p|^r) with a determined
// modulo p^r.  The center is stored as c / p^e with integer coordinates c
// canonical modulo p^(r+e) and e >= 0 minimal.
struct TreeVertex {
    long q = 0;
    long r = 0;
    long e = 0;
    std::vector<mpz_class> c;
    bool operator==(const TreeVertex&) const = default;
};

TreeVertex vertex_make(const TreeCtx& K, long r, const TreeCtx::KElem& center);
TreeVertex tree_origin(const TreeCtx& K);  // the standard lattice, D(0, 1)
TreeCtx::KElem vertex_center(const TreeCtx& K, const TreeVertex& v);

// canonical string "q:r:a" with the center coordinates in base-p digits
std::string vertex_str(const TreeCtx& K, const TreeVertex& v);

// the q + 1 adjacent vertices: one up (radius * p), q down (one per residue)
std::vector<TreeVertex> neighbors(const TreeCtx& K, const TreeVertex& v);

// unique geodesic (inclusive): ascend both vertices to the join disk and
// concatenate; distance equals the elementary-divisor gap of lattice bases
std::vector<TreeVertex> geodesic(const TreeCtx& K, const TreeVertex& v, const TreeVertex& w);
long vertex_distance(const TreeCtx& K, const TreeVertex& v, const TreeVertex& w);

// normal form of the lattice spanned by the columns of a nonsingular matrix
TreeVertex vertex_from_lattice(const TreeCtx& K, const std::array<TreeCtx::KElem, 4>& m);

// DOT digraph source for the ball of radius R around v, deterministic order
std::string tree_ball_dot(const TreeCtx& K, const TreeVertex& v, long R);

// Berkovich points of the affine line over C_p with center in K: type 1
// (classical), type 2 (disk with radius in the value group |K^x| = p^Z),
// type 3 (disk radius outside it).  log_radius r means radius |p|^r.
struct BerkovichPoint {
    enum class Kind { classical, disk };
    Kind kind = Kind::classical;
    TreeCtx::KElem center;
    mpq_class log_radius;
};

BerkovichPoint berkovich_classical(const TreeCtx& K, const TreeCtx::KElem& a);
BerkovichPoint berkovich_disk(const TreeCtx& K, const TreeCtx::KElem& a,
                              const mpq_class& log_radius);
// nested disk families without a common point (type 4) are out of scope
BerkovichPoint berkovich_nested_family(const TreeCtx& K,
                                       const std::vector<BerkovichPoint>& chain);

int classify_point(const BerkovichPoint& x);  // 1, 2 or 3

// type-2 points with integral log_radius are exactly the tree vertices
BerkovichPoint vertex_to_point(const TreeCtx& K, const TreeVertex& v);
TreeVertex point_to_vertex(const TreeCtx& K, const BerkovichPoint& x);

// membership in the Drinfeld space Omega = P^1 minus P^1(Q_p): disk points
// always lie in Omega, classical points iff not Q_p-rational
bool in_drinfeld_space(const TreeCtx& K, const BerkovichPoint& x);
// classical point given by its monic minimal polynomial over Q (degree 1 or
// 2); throws domain_error when a quadratic input is reducible over Q_p
bool in_drinfeld_space(long p, const std::vector<mpq_class>& minpoly);

// element of PGL_2(K): matrix (row-major) up to scalar, normalized so the
// minimum entry valuation is zero
struct Pgl2Elem {
    std::array<TreeCtx::KElem, 4> m;
};

Pgl2Elem pgl2_make(const TreeCtx& K, const std::array<TreeCtx::KElem, 4>& m);
Pgl2Elem pgl2_mul(const TreeCtx& K, const Pgl2Elem& g, const Pgl2Elem& h);
Pgl2Elem pgl2_inv(const TreeCtx& K, const Pgl2Elem& g);
TreeVertex pgl2_act(const TreeCtx& K, const Pgl2Elem& g, const TreeVertex& v);

// translation length on the tree from the characteristic polynomial
// X^2 - t X + d: hyperbolic iff 2 v(t) < v(d), with length v(d) - 2 v(t);
// otherwise the element is bounded and reported as elliptic with length 0
struct Pgl2Class {
    bool hyperbolic = false;
    long translation_length = 0;
    std::string note;
};

Pgl2Class pgl2_classify(const TreeCtx& K, const Pgl2Elem& g);

// The rank-three Schottky group inside PGL_2(Q_9): z_ee' = i + e j + e' ij in
// the Hamilton quaternions have Trd 0 and Nrd 3, embed via
//   a + b i + c j + d ij  ->  [[a + b s, c + d s], [-c + d s, a - b s]]
// (s a fixed square root of -1 in Q_9), and the even words gamma_1 = z++ z+-,
// gamma_2 = z++ z-+, gamma_3 = z++ z-- freely generate a Schottky group.
struct SchottkyReport {
    bool z_invariants_ok = false;     // Trd = 0, Nrd = 3 for all four z
    bool embedding_hom_ok = false;    // embedding respects the products
    bool gamma1_matches = false;      // entrywise equal to the known matrix
    bool gamma3_matches = false;
    bool gamma2_invariants_ok = false;  // trace -2, determinant 9
    std::array<long, 3> lengths{0, 0, 0};
    bool pairwise_hyperbolic = false;  // gamma_i and gamma_i gamma_j^-1
    bool all() const {
        return z_invariants_ok && embedding_hom_ok && gamma1_matches && gamma3_matches &&
               gamma2_invariants_ok && pairwise_hyperbolic && lengths == std::array<long, 3>{2, 2, 2};
    }
};

SchottkyReport schottky_triple_check();

// the displayed embedding of the Hamilton quaternions into M_2(Q_9)
Pgl2Elem quat_embed_q9(const TreeCtx& K, const QuatElem& x);

}  // namespace padic
