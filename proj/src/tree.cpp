#include <padic/isocrystal.hpp>
#include <padic/tree.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace padic {

namespace {

// is the monic integer polynomial m (length f+1) irreducible over F_p?
// checks x^(p^f) = x mod (m, p) and x^(p^(f/l)) != x for prime divisors l of f
bool irreducible_mod_p(const std::vector<mpz_class>& m, long p) {
    long f = (long)m.size() - 1;
    if (f < 1) return false;
    auto reduce = [&](std::vector<mpz_class> a) {
        for (long i = (long)a.size() - 1; i >= f; --i) {
            mpz_class lead = mpz_mod(a[i], p);
            if (lead == 0) continue;
            for (long j = 0; j < f; ++j) a[i - f + j] = mpz_mod(a[i - f + j] - lead * m[j], p);
        }
        a.resize(f);
        for (auto& c : a) c = mpz_mod(c, p);
        return a;
    };
    auto mul = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> c(2 * f - 1, 0);
        for (long i = 0; i < f; ++i)
            for (long j = 0; j < f; ++j) c[i + j] += a[i] * b[j];
        return reduce(std::move(c));
    };
    auto xq = [&](long k) {
        // x^(p^k) mod (m, p) by repeated p-th powers
        std::vector<mpz_class> a(f, 0);
        if (f == 1)
            a[0] = mpz_mod(-m[0], p);
        else
            a[1] = 1;
        for (long s = 0; s < k; ++s) {
            std::vector<mpz_class> r(f, 0);
            r[0] = 1;
            std::vector<mpz_class> base = a;
            long e = p;
            while (e) {
                if (e & 1) r = mul(r, base);
                base = mul(base, base);
                e >>= 1;
            }
            a = std::move(r);
        }
        return a;
    };
    auto is_x = [&](const std::vector<mpz_class>& a) {
        if (f == 1) return a[0] == mpz_mod(-m[0], p);
        for (long i = 0; i < f; ++i)
            if (a[i] != (i == 1 ? 1 : 0)) return false;
        return true;
    };
    if (!is_x(xq(f))) return false;
    for (long l = 2; l <= f; ++l)
        if (f % l == 0 && is_prime_small(l) && is_x(xq(f / l))) return false;
    return true;
}

std::vector<mpz_class> int_modulus(const std::vector<mpq_class>& m, long p) {
    std::vector<mpz_class> a(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        if (mpz_class(m[i].get_den()) % p == 0)
            throw domain_error("modulus coefficients must be p-integral");
        a[i] = mpz_mod(mpz_class(m[i].get_num()) * mpz_inv_mod(m[i].get_den(), mpz_pow(p, 1)),
                       mpz_pow(p, 1));
    }
    return a;
}

}  // namespace

TreeCtx::TreeCtx(long p, std::vector<mpq_class> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime_small(p_)) throw domain_error("p must be prime");
    f_ = (long)modulus_.size() - 1;
    if (f_ < 1 || modulus_[f_] != 1) throw domain_error("modulus must be monic of degree >= 1");
    if (!irreducible_mod_p(int_modulus(modulus_, p_), p_))
        throw domain_error("modulus must be irreducible modulo p");
    q_ = 1;
    for (long i = 0; i < f_; ++i) {
        if (q_ > (1L << 40)) throw domain_error("residue field too large");
        q_ *= p_;
    }
    // x^f .. x^(2f-2) reduced modulo the modulus
    std::vector<mpq_class> cur(f_);
    for (long i = 0; i < f_; ++i) cur[i] = -modulus_[i];
    for (long k = 0; k < std::max<long>(0, f_ - 1); ++k) {
        xpow_.push_back(cur);
        std::vector<mpq_class> nxt(f_, 0);
        for (long i = 0; i + 1 < f_; ++i) nxt[i + 1] = cur[i];
        mpq_class top = cur[f_ - 1];
        for (long i = 0; i < f_; ++i) nxt[i] -= top * modulus_[i];
        for (auto& c : nxt) c.canonicalize();
        cur = std::move(nxt);
    }
}

namespace {

std::vector<mpq_class> default_modulus(long p, long f) {
    if (f == 1) return {0, 1};
    // smallest coefficient vector in [0,p)^f giving an irreducible polynomial
    std::vector<mpz_class> m(f + 1, 0);
    m[f] = 1;
    while (true) {
        if (irreducible_mod_p(m, p)) {
            std::vector<mpq_class> out(f + 1);
            for (long i = 0; i <= f; ++i) out[i] = mpq_class(m[i]);
            return out;
        }
        long i = 0;
        while (i < f && m[i] == p - 1) m[i++] = 0;
        if (i == f) throw domain_error("no irreducible modulus found");  // unreachable
        m[i] += 1;
    }
}

}  // namespace

TreeCtx::TreeCtx(long p, long f) : TreeCtx(p, default_modulus(p, f)) {}

TreeCtx::KElem TreeCtx::zero() const { return KElem(f_, 0); }

TreeCtx::KElem TreeCtx::one() const { return from_rational(1); }

TreeCtx::KElem TreeCtx::gen() const {
    KElem a(f_, 0);
    if (f_ == 1)
        a[0] = -modulus_[0];
    else
        a[1] = 1;
    return a;
}

TreeCtx::KElem TreeCtx::from_rational(const mpq_class& a) const {
    KElem x(f_, 0);
    x[0] = a;
    return x;
}

bool TreeCtx::is_zero(const KElem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

long TreeCtx::val(const KElem& a) const {
    bool seen = false;
    long v = 0;
    for (const auto& c : a) {
        if (c == 0) continue;
        long w = mpq_valuation(c, p_);
        if (!seen || w < v) v = w;
        seen = true;
    }
    if (!seen) throw domain_error("valuation of zero");
    return v;
}

TreeCtx::KElem TreeCtx::add(const KElem& a, const KElem& b) const {
    KElem c(f_);
    for (long i = 0; i < f_; ++i) {
        c[i] = a[i] + b[i];
        c[i].canonicalize();
    }
    return c;
}

TreeCtx::KElem TreeCtx::sub(const KElem& a, const KElem& b) const {
    KElem c(f_);
    for (long i = 0; i < f_; ++i) {
        c[i] = a[i] - b[i];
        c[i].canonicalize();
    }
    return c;
}

TreeCtx::KElem TreeCtx::neg(const KElem& a) const {
    KElem c(f_);
    for (long i = 0; i < f_; ++i) c[i] = -a[i];
    return c;
}

TreeCtx::KElem TreeCtx::mul(const KElem& a, const KElem& b) const {
    std::vector<mpq_class> conv(2 * f_ - 1, 0);
    for (long i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < f_; ++j) conv[i + j] += a[i] * b[j];
    }
    KElem c(conv.begin(), conv.begin() + f_);
    for (long k = f_; k < 2 * f_ - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& rep = xpow_[k - f_];
        for (long i = 0; i < f_; ++i) c[i] += conv[k] * rep[i];
    }
    for (auto& t : c) t.canonicalize();
    return c;
}

TreeCtx::KElem TreeCtx::inv(const KElem& a) const {
    if (is_zero(a)) throw domain_error("inverse of zero");
    // solve (mult-by-a matrix) y = e_0 over Q
    std::vector<std::vector<mpq_class>> m(f_, std::vector<mpq_class>(f_ + 1, 0));
    for (long j = 0; j < f_; ++j) {
        KElem col(f_, 0);
        col[j] = 1;
        col = mul(a, col);
        for (long i = 0; i < f_; ++i) m[i][j] = col[i];
    }
    m[0][f_] = 1;
    for (long col = 0; col < f_; ++col) {
        long piv = -1;
        for (long r = col; r < f_; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw domain_error("modulus is not irreducible");  // defensive
        std::swap(m[col], m[piv]);
        for (long r = 0; r < f_; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class fac = m[r][col] / m[col][col];
            for (long k = col; k <= f_; ++k) m[r][k] -= fac * m[col][k];
        }
    }
    KElem y(f_);
    for (long r = 0; r < f_; ++r) {
        y[r] = m[r][f_] / m[r][r];
        y[r].canonicalize();
    }
    return y;
}

TreeCtx::KElem TreeCtx::scale_p(const KElem& a, long k) const {
    mpq_class s = (k >= 0) ? mpq_class(mpz_pow(p_, k)) : mpq_class(1, mpz_pow(p_, -k));
    KElem c(f_);
    for (long i = 0; i < f_; ++i) {
        c[i] = a[i] * s;
        c[i].canonicalize();
    }
    return c;
}

std::string TreeCtx::str(const KElem& a) const {
    std::ostringstream os;
    bool any = false;
    for (long i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        if (any) os << " + ";
        os << a[i];
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

TreeVertex vertex_make(const TreeCtx& K, long r, const TreeCtx::KElem& center) {
    long p = K.p(), f = K.f();
    TreeVertex v;
    v.q = K.q();
    v.r = r;
    long e = 0;
    for (const auto& c : center)
        if (c != 0) e = std::max(e, -mpq_valuation(c, p));
    if (r + e <= 0) {
        v.e = 0;
        v.c.assign(f, 0);
        return v;
    }
    mpz_class mod = mpz_pow(p, r + e);
    v.c.resize(f);
    for (long i = 0; i < f; ++i) {
        mpq_class t = center[i] * mpq_class(mpz_pow(p, e));
        t.canonicalize();
        v.c[i] = mpz_mod(mpz_class(t.get_num()) * mpz_inv_mod(t.get_den(), mod), mod);
    }
    while (e > 0) {
        bool all = true;
        for (const auto& c : v.c) all &= (c % p == 0);
        if (!all) break;
        for (auto& c : v.c) c /= p;
        --e;
    }
    v.e = e;
    return v;
}

TreeVertex tree_origin(const TreeCtx& K) { return vertex_make(K, 0, K.zero()); }

TreeCtx::KElem vertex_center(const TreeCtx& K, const TreeVertex& v) {
    TreeCtx::KElem a(K.f());
    mpz_class den = mpz_pow(K.p(), v.e);
    for (long i = 0; i < K.f(); ++i) {
        a[i] = mpq_class(v.c[i], den);
        a[i].canonicalize();
    }
    return a;
}

std::string vertex_str(const TreeCtx& K, const TreeVertex& v) {
    std::ostringstream os;
    os << v.q << ":" << v.r << ":";
    int base = (K.p() <= 36) ? (int)K.p() : 10;
    for (long i = 0; i < K.f(); ++i) {
        if (i) os << ",";
        os << v.c[i].get_str(base);
    }
    if (v.e > 0) os << "/p^" << v.e;
    return os.str();
}

std::vector<TreeVertex> neighbors(const TreeCtx& K, const TreeVertex& v) {
    std::vector<TreeVertex> out;
    auto a = vertex_center(K, v);
    out.push_back(vertex_make(K, v.r - 1, a));  // up: the containing disk
    // down: one per residue of the center modulo p^(r+1)
    std::vector<long> digit(K.f(), 0);
    while (true) {
        TreeCtx::KElem rep(K.f());
        for (long i = 0; i < K.f(); ++i) rep[i] = digit[i];
        out.push_back(vertex_make(K, v.r + 1, K.add(a, K.scale_p(rep, v.r))));
        long i = 0;
        while (i < K.f() && digit[i] == K.p() - 1) digit[i++] = 0;
        if (i == K.f()) break;
        digit[i] += 1;
    }
    return out;
}

namespace {

long join_level(const TreeCtx& K, const TreeVertex& v, const TreeVertex& w) {
    long s = std::min(v.r, w.r);
    auto d = K.sub(vertex_center(K, v), vertex_center(K, w));
    if (!K.is_zero(d)) s = std::min(s, K.val(d));
    return s;
}

}  // namespace

std::vector<TreeVertex> geodesic(const TreeCtx& K, const TreeVertex& v, const TreeVertex& w) {
    if (v.q != w.q) throw domain_error("vertices of different trees");
    long s = join_level(K, v, w);
    std::vector<TreeVertex> path;
    auto av = vertex_center(K, v), aw = vertex_center(K, w);
    for (long r = v.r; r >= s; --r) path.push_back(vertex_make(K, r, av));
    for (long r = s + 1; r <= w.r; ++r) path.push_back(vertex_make(K, r, aw));
    return path;
}

long vertex_distance(const TreeCtx& K, const TreeVertex& v, const TreeVertex& w) {
    if (v.q != w.q) throw domain_error("vertices of different trees");
    long s = join_level(K, v, w);
    return (v.r - s) + (w.r - s);
}

TreeVertex vertex_from_lattice(const TreeCtx& K, const std::array<TreeCtx::KElem, 4>& m) {
    // columns (m0, m2), (m1, m3); column-reduce to [[p^r, a], [0, 1]] form
    TreeCtx::KElem c0t = m[0], c1t = m[1], c0b = m[2], c1b = m[3];
    bool swap = K.is_zero(c1b) || (!K.is_zero(c0b) && K.val(c0b) < K.val(c1b));
    if (swap) {
        std::swap(c0t, c1t);
        std::swap(c0b, c1b);
    }
    if (K.is_zero(c1b)) throw domain_error("singular lattice matrix");
    if (!K.is_zero(c0b)) c0t = K.sub(c0t, K.mul(K.div(c0b, c1b), c1t));
    if (K.is_zero(c0t)) throw domain_error("singular lattice matrix");
    // scale the lattice by 1/c1b: basis (x, 0), (a, 1)
    TreeCtx::KElem x = K.div(c0t, c1b), a = K.div(c1t, c1b);
    return vertex_make(K, K.val(x), a);
}

std::string tree_ball_dot(const TreeCtx& K, const TreeVertex& v, long R) {
    if (R < 0) throw domain_error("radius must be >= 0");
    std::ostringstream os;
    os << "graph tree {\n  node [shape=circle];\n";
    std::map<std::string, long> id;
    std::vector<TreeVertex> frontier{v}, all{v};
    id[vertex_str(K, v)] = 0;
    os << "  n0 [label=\"" << vertex_str(K, v) << "\"];\n";
    for (long depth = 0; depth < R; ++depth) {
        std::vector<TreeVertex> next;
        for (const auto& u : frontier) {
            long uid = id[vertex_str(K, u)];
            for (const auto& w : neighbors(K, u)) {
                auto key = vertex_str(K, w);
                if (id.count(key)) continue;
                long wid = (long)id.size();
                id[key] = wid;
                os << "  n" << wid << " [label=\"" << key << "\"];\n";
                os << "  n" << uid << " -- n" << wid << ";\n";
                next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    os << "}\n";
    return os.str();
}

BerkovichPoint berkovich_classical(const TreeCtx& K, const TreeCtx::KElem& a) {
    BerkovichPoint x;
    x.kind = BerkovichPoint::Kind::classical;
    x.center = a;
    if ((long)a.size() != K.f()) throw domain_error("center has wrong length");
    return x;
}

BerkovichPoint berkovich_disk(const TreeCtx& K, const TreeCtx::KElem& a,
                              const mpq_class& log_radius) {
    BerkovichPoint x;
    x.kind = BerkovichPoint::Kind::disk;
    x.center = a;
    x.log_radius = log_radius;
    if ((long)a.size() != K.f()) throw domain_error("center has wrong length");
    return x;
}

BerkovichPoint berkovich_nested_family(const TreeCtx&, const std::vector<BerkovichPoint>&) {
    throw domain_error("points of type 4 (nested disk families without intersection) are not supported");
}

int classify_point(const BerkovichPoint& x) {
    if (x.kind == BerkovichPoint::Kind::classical) return 1;
    return (x.log_radius.get_den() == 1) ? 2 : 3;
}

BerkovichPoint vertex_to_point(const TreeCtx& K, const TreeVertex& v) {
    return berkovich_disk(K, vertex_center(K, v), v.r);
}

TreeVertex point_to_vertex(const TreeCtx& K, const BerkovichPoint& x) {
    if (classify_point(x) != 2) throw domain_error("only type-2 points are tree vertices");
    return vertex_make(K, mpz_class(x.log_radius.get_num()).get_si(), x.center);
}

bool in_drinfeld_space(const TreeCtx& K, const BerkovichPoint& x) {
    if (x.kind == BerkovichPoint::Kind::disk) return true;
    for (long i = 1; i < K.f(); ++i)
        if (x.center[i] != 0) return true;  // not Q_p-rational
    return false;
}

bool in_drinfeld_space(long p, const std::vector<mpq_class>& minpoly) {
    if (!is_prime_small(p)) throw domain_error("p must be prime");
    long d = (long)minpoly.size() - 1;
    while (d > 0 && minpoly[d] == 0) --d;
    if (d < 1 || d > 2) throw domain_error("minimal polynomial must have degree 1 or 2");
    if (d == 1) return false;  // Q_p-rational
    // for quadratics the discriminant certificate is decisive both ways
    if (poly_qp_irreducible_certified(minpoly, p)) return true;
    throw domain_error("quadratic is reducible over Q_p; roots are rational points");
}

namespace {

TreeCtx::KElem pgl2_det(const TreeCtx& K, const std::array<TreeCtx::KElem, 4>& m) {
    return K.sub(K.mul(m[0], m[3]), K.mul(m[1], m[2]));
}

}  // namespace

Pgl2Elem pgl2_make(const TreeCtx& K, const std::array<TreeCtx::KElem, 4>& m) {
    if (K.is_zero(pgl2_det(K, m))) throw domain_error("matrix must be invertible");
    long mv = 0;
    bool seen = false;
    for (const auto& ent : m) {
        if (K.is_zero(ent)) continue;
        long v = K.val(ent);
        if (!seen || v < mv) mv = v;
        seen = true;
    }
    Pgl2Elem g;
    for (int i = 0; i < 4; ++i) g.m[i] = K.scale_p(m[i], -mv);
    return g;
}

Pgl2Elem pgl2_mul(const TreeCtx& K, const Pgl2Elem& g, const Pgl2Elem& h) {
    std::array<TreeCtx::KElem, 4> m;
    m[0] = K.add(K.mul(g.m[0], h.m[0]), K.mul(g.m[1], h.m[2]));
    m[1] = K.add(K.mul(g.m[0], h.m[1]), K.mul(g.m[1], h.m[3]));
    m[2] = K.add(K.mul(g.m[2], h.m[0]), K.mul(g.m[3], h.m[2]));
    m[3] = K.add(K.mul(g.m[2], h.m[1]), K.mul(g.m[3], h.m[3]));
    return pgl2_make(K, m);
}

Pgl2Elem pgl2_inv(const TreeCtx& K, const Pgl2Elem& g) {
    return pgl2_make(K, {g.m[3], K.neg(g.m[1]), K.neg(g.m[2]), g.m[0]});
}

TreeVertex pgl2_act(const TreeCtx& K, const Pgl2Elem& g, const TreeVertex& v) {
    auto a = vertex_center(K, v);
    TreeCtx::KElem pr = K.scale_p(K.one(), v.r);
    // image of the lattice with basis columns (p^r, 0), (a, 1)
    std::array<TreeCtx::KElem, 4> m;
    m[0] = K.mul(g.m[0], pr);
    m[1] = K.add(K.mul(g.m[0], a), g.m[1]);
    m[2] = K.mul(g.m[2], pr);
    m[3] = K.add(K.mul(g.m[2], a), g.m[3]);
    return vertex_from_lattice(K, m);
}

Pgl2Class pgl2_classify(const TreeCtx& K, const Pgl2Elem& g) {
    TreeCtx::KElem t = K.add(g.m[0], g.m[3]);
    TreeCtx::KElem d = pgl2_det(K, g.m);
    Pgl2Class out;
    if (!K.is_zero(t) && 2 * K.val(t) < K.val(d)) {
        out.hyperbolic = true;
        out.translation_length = K.val(d) - 2 * K.val(t);
        out.note = "hyperbolic";
    } else {
        out.note = "elliptic (parabolic not distinguished)";
    }
    return out;
}

Pgl2Elem quat_embed_q9(const TreeCtx& K, const QuatElem& x) {
    if (K.f() < 2) throw domain_error("embedding needs the quadratic extension");
    auto lift = [&](const mpq_class& re, const mpq_class& im) {
        // re + im * s with s = the class of x (a square root of -1 for x^2+1)
        return K.add(K.from_rational(re), K.mul(K.gen(), K.from_rational(im)));
    };
    return pgl2_make(
        K, {lift(x[0], x[1]), lift(x[2], x[3]), lift(-x[2], x[3]), lift(x[0], -x[1])});
}

SchottkyReport schottky_triple_check() {
    TreeCtx K(3, 2);  // Q_9 = Q_3[x]/(x^2+1); s = x
    QuatAlgebra H = quat_b2inf();
    QuatElem zpp{0, 1, 1, 1}, zpm{0, 1, 1, -1}, zmp{0, 1, -1, 1}, zmm{0, 1, -1, -1};
    SchottkyReport rep;
    rep.z_invariants_ok = true;
    for (const auto& z : {zpp, zpm, zmp, zmm})
        rep.z_invariants_ok &= (quat_trd(z) == 0 && quat_nrd(H, z) == 3);

    std::array<QuatElem, 3> gq{quat_mul(H, zpp, zpm), quat_mul(H, zpp, zmp),
                               quat_mul(H, zpp, zmm)};
    std::array<Pgl2Elem, 3> G{quat_embed_q9(K, gq[0]), quat_embed_q9(K, gq[1]),
                              quat_embed_q9(K, gq[2])};
    auto Zpp = quat_embed_q9(K, zpp);
    rep.embedding_hom_ok =
        pgl2_mul(K, Zpp, quat_embed_q9(K, zpm)).m == G[0].m &&
        pgl2_mul(K, Zpp, quat_embed_q9(K, zmp)).m == G[1].m &&
        pgl2_mul(K, Zpp, quat_embed_q9(K, zmm)).m == G[2].m;

    using KE = TreeCtx::KElem;
    // [[-1-2s, 2], [-2, -1+2s]]
    rep.gamma1_matches =
        G[0].m == std::array<KE, 4>{KE{-1, -2}, KE{2, 0}, KE{-2, 0}, KE{-1, 2}};
    // [[1, 2-2s], [-2-2s, 1]]
    rep.gamma3_matches =
        G[2].m == std::array<KE, 4>{KE{1, 0}, KE{2, -2}, KE{-2, -2}, KE{1, 0}};
    rep.gamma2_invariants_ok =
        K.add(G[1].m[0], G[1].m[3]) == K.from_rational(-2) &&
        pgl2_det(K, G[1].m) == K.from_rational(9);

    rep.pairwise_hyperbolic = true;
    for (int i = 0; i < 3; ++i) {
        auto cl = pgl2_classify(K, G[i]);
        rep.lengths[i] = cl.translation_length;
        rep.pairwise_hyperbolic &= cl.hyperbolic;
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            auto w = pgl2_mul(K, G[i], pgl2_inv(K, G[j]));
            rep.pairwise_hyperbolic &= pgl2_classify(K, w).hyperbolic;
        }
    }
    return rep;
}

}  // namespace padic
