#include <padic/quaternion.hpp>

#include <algorithm>

namespace padic {

QuatElem quat_mul(const QuatAlgebra& Q, const QuatElem& x, const QuatElem& y) {
    const mpq_class &a = x[0], &b = x[1], &c = x[2], &d = x[3];
    const mpq_class &e = y[0], &f = y[1], &g = y[2], &h = y[3];
    const mpq_class &al = Q.alpha, &be = Q.beta;
    // (a + bi + cj + dij)(e + fi + gj + hij) with ji = -ij, i^2 = al, j^2 = be
    QuatElem z;
    z[0] = a * e + al * b * f + be * c * g - al * be * d * h;
    z[1] = a * f + b * e - be * c * h + be * d * g;
    z[2] = a * g + c * e + al * b * h - al * d * f;
    z[3] = a * h + d * e + b * g - c * f;
    for (auto& t : z) t.canonicalize();
    return z;
}

QuatElem quat_conj(const QuatElem& x) { return {x[0], -x[1], -x[2], -x[3]}; }

mpq_class quat_nrd(const QuatAlgebra& Q, const QuatElem& x) {
    mpq_class n = x[0] * x[0] - Q.alpha * x[1] * x[1] - Q.beta * x[2] * x[2] +
                  Q.alpha * Q.beta * x[3] * x[3];
    n.canonicalize();
    return n;
}

mpq_class quat_trd(const QuatElem& x) { return 2 * x[0]; }

QuatAlgebra quat_b23() { return {-1, 3}; }
QuatAlgebra quat_b2inf() { return {-1, -1}; }
QuatAlgebra quat_b3inf() { return {-1, -3}; }

std::array<QuatElem, 4> order_b23_maximal() {
    mpq_class h(1, 2);
    return {QuatElem{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {h, h, h, h}};
}

std::array<QuatElem, 4> order_hurwitz() { return order_b23_maximal(); }

std::array<QuatElem, 4> order_b3inf_maximal() {
    mpq_class h(1, 2);
    return {QuatElem{1, 0, 0, 0}, {0, 1, 0, 0}, {0, h, h, 0}, {h, 0, 0, h}};
}

namespace {

// solve sum_k t_k basis[k] = x over Q; returns false when the basis is singular
bool in_span_coords(const std::array<QuatElem, 4>& basis, const QuatElem& x, QuatElem& t) {
    // gaussian elimination on the 4x5 system (columns = basis elements)
    mpq_class m[4][5];
    for (int r = 0; r < 4; ++r) {
        for (int k = 0; k < 4; ++k) m[r][k] = basis[k][r];
        m[r][4] = x[r];
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    for (int r = 0; r < 4; ++r) {
        t[r] = m[r][4] / m[r][r];
        t[r].canonicalize();
    }
    return true;
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

bool order_closure_check(const QuatAlgebra& Q, const std::array<QuatElem, 4>& basis) {
    QuatElem t;
    if (!in_span_coords(basis, {1, 0, 0, 0}, t)) return false;  // not a Q-basis
    for (const auto& x : basis) {
        if (!is_integer(quat_trd(x)) || !is_integer(quat_nrd(Q, x))) return false;
    }
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (!in_span_coords(basis, quat_mul(Q, x, y), t)) return false;
            for (const auto& c : t)
                if (!is_integer(c)) return false;
        }
    return true;
}

std::vector<QuatElem> torsion_search(long B, long level, long trace_abs) {
    if (B < 1) throw domain_error("search bound must be >= 1");
    if (level != 1 && level != 2) throw domain_error("level must be 1 or 2");
    if (trace_abs < 0 || trace_abs % 2 != 0)
        throw domain_error("reduced trace of an integral element is even");
    std::vector<QuatElem> out;
    std::vector<long> as;
    long a0 = trace_abs / 2;
    if (a0 <= B) {
        as.push_back(a0);
        if (a0 != 0) as.push_back(-a0);
    }
    for (long a : as) {
        if (level == 2 && a % 2 == 0) continue;  // a odd, b,c,d even mod 2
        long step = (level == 2) ? 2 : 1;
        long lo = -B + ((level == 2 && B % 2 != 0) ? 1 : 0);
        long rem = 1 - a * a;  // b^2 - 3c^2 - 3d^2 must equal rem
        for (long b = lo; b <= B; b += step)
            for (long c = lo; c <= B; c += step)
                for (long d = lo; d <= B; d += step)
                    if (b * b - 3 * (c * c + d * d) == rem)
                        out.push_back({a, b, c, d});
    }
    return out;
}

std::vector<QuatElem> torsion_search_gamma_plus_2(long B) { return torsion_search(B, 2, 2); }

namespace {

// Q(sqrt-1, sqrt2, sqrt3) as a commutative 8-dimensional Q-algebra; basis
// index bits: 1 = sqrt-1, 2 = sqrt2, 4 = sqrt3
using R8 = std::array<mpq_class, 8>;

R8 r8_mul(const R8& x, const R8& y) {
    static const long sq[3] = {-1, 2, 3};
    R8 z{};
    for (int m = 0; m < 8; ++m) {
        if (x[m] == 0) continue;
        for (int n = 0; n < 8; ++n) {
            if (y[n] == 0) continue;
            mpq_class f = x[m] * y[n];
            for (int bit = 0; bit < 3; ++bit)
                if ((m & n) >> bit & 1) f *= sq[bit];
            z[m ^ n] += f;
        }
    }
    for (auto& t : z) t.canonicalize();
    return z;
}

R8 r8_basis(int idx, mpq_class coeff = 1) {
    R8 z{};
    z[idx] = std::move(coeff);
    return z;
}

using M2 = std::array<R8, 4>;  // row-major 2x2

M2 m2_mul(const M2& x, const M2& y) {
    auto add = [](R8 a, const R8& b) {
        for (int k = 0; k < 8; ++k) a[k] += b[k];
        return a;
    };
    return {add(r8_mul(x[0], y[0]), r8_mul(x[1], y[2])),
            add(r8_mul(x[0], y[1]), r8_mul(x[1], y[3])),
            add(r8_mul(x[2], y[0]), r8_mul(x[3], y[2])),
            add(r8_mul(x[2], y[1]), r8_mul(x[3], y[3]))};
}

bool m2_is(const M2& x, mpq_class scalar) {
    R8 s = r8_basis(0, std::move(scalar));
    return x[0] == s && x[1] == R8{} && x[2] == R8{} && x[3] == s;
}

}  // namespace

EscherReport escher_generators_check() {
    // A = sqrt-1 [[sqrt2, -1], [1, -sqrt2]]
    M2 A{r8_basis(3), r8_basis(1, -1), r8_basis(1), r8_basis(3, -1)};
    // B = diag(sqrt3 + sqrt-1, sqrt3 - sqrt-1) / 2
    mpq_class h(1, 2);
    M2 B{R8{}, R8{}, R8{}, R8{}};
    B[0][4] = h;
    B[0][1] = h;
    B[3][4] = h;
    B[3][1] = -h;

    EscherReport rep;
    rep.a2_ok = m2_is(m2_mul(A, A), -1);
    M2 B2 = m2_mul(B, B);
    rep.b6_ok = m2_is(m2_mul(B2, m2_mul(B2, B2)), -1);
    M2 AB = m2_mul(A, B);
    M2 AB2 = m2_mul(AB, AB);
    rep.ab4_ok = m2_is(m2_mul(AB2, AB2), -1);
    R8 tr = AB[0];
    for (int k = 0; k < 8; ++k) tr[k] += AB[3][k];
    rep.trace_ok = (tr == r8_basis(2, -1));  // -sqrt2
    R8 det = r8_mul(AB[0], AB[3]);
    R8 od = r8_mul(AB[1], AB[2]);
    for (int k = 0; k < 8; ++k) det[k] -= od[k];
    rep.det_ok = (det == r8_basis(0, 1));
    return rep;
}

}  // namespace padic
