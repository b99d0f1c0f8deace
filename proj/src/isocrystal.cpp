#include <padic/isocrystal.hpp>

#include <algorithm>

namespace padic {

long mpq_valuation(const mpq_class& x, long p) {
    if (x == 0) throw domain_error("valuation of zero");
    return mpz_val(x.get_num(), p) - mpz_val(x.get_den(), p);
}

long qmat_rank(QMat m) {
    if (m.empty()) return 0;
    long rows = (long)m.size(), cols = (long)m[0].size();
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (long r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (long j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

mpq_class qmat_det(QMat m) {
    long n = (long)m.size();
    mpq_class det = 1;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        for (long r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (long j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

QMat qmat_inverse(const QMat& m) {
    long n = (long)m.size();
    QMat a = m;
    QMat inv(n, QVec(n, 0));
    for (long i = 0; i < n; ++i) inv[i][i] = 1;
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw domain_error("singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        mpq_class d = a[c][c];
        for (long j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (long r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (long j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    long n = (long)a.size(), k = (long)b.size(), m = (long)b[0].size();
    QMat out(n, QVec(m, 0));
    for (long i = 0; i < n; ++i)
        for (long t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (long j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

std::vector<mpq_class> qmat_charpoly(const QMat& m) {
    // Faddeev-LeVerrier: exact over Q, fine at these dimensions
    long n = (long)m.size();
    std::vector<mpq_class> c(n + 1, 0);
    c[n] = 1;
    QMat N(n, QVec(n, 0));  // starts as the zero matrix
    for (long k = 1; k <= n; ++k) {
        // N <- m (N + c_{n-k+1} I)
        QMat t = N;
        for (long i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
        N = qmat_mul(m, t);
        mpq_class tr = 0;
        for (long i = 0; i < n; ++i) tr += N[i][i];
        c[n - k] = -tr / k;
    }
    return c;
}

namespace {

// integer primitive form of a rational polynomial, same roots
std::vector<mpz_class> primitive_int_poly(const std::vector<mpq_class>& c) {
    mpz_class lcm = 1;
    for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> a(c.size());
    mpz_class g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        mpq_class s = c[i] * lcm;
        a[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : a) x /= g;
    return a;
}

// all positive divisors; throws unsupported_frobenius when the cofactor after
// small trial division is too large to factor
std::vector<mpz_class> divisors_of(mpz_class n, long trial_limit = 1000000) {
    n = abs(n);
    std::vector<std::pair<mpz_class, long>> fac;
    for (long d = 2; d <= trial_limit && mpz_class(d) * d <= n; ++d) {
        if (n % d == 0) {
            long e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.push_back({d, e});
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30))
            fac.push_back({n, 1});
        else
            throw unsupported_frobenius("cannot enumerate eigenvalue candidates");
    }
    std::vector<mpz_class> divs{1};
    for (auto& [q, e] : fac) {
        size_t base = divs.size();
        mpz_class pw = 1;
        for (long i = 1; i <= e; ++i) {
            pw *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

mpq_class poly_eval_q(const std::vector<mpq_class>& c, const mpq_class& x) {
    mpq_class acc = 0;
    for (long i = (long)c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

// rational roots with multiplicity, by candidate enumeration and deflation
std::vector<mpq_class> rational_roots(std::vector<mpq_class> c) {
    std::vector<mpq_class> roots;
    while (c.size() > 1) {
        auto a = primitive_int_poly(c);
        long d = (long)a.size() - 1;
        if (a[0] == 0) throw domain_error("zero eigenvalue: Frobenius not invertible");
        bool found = false;
        mpq_class root;
        auto rs = divisors_of(a[0]);
        auto ss = divisors_of(a[d]);
        for (const auto& r : rs) {
            for (const auto& s : ss) {
                for (int sg : {1, -1}) {
                    mpq_class cand(r * sg, s);
                    cand.canonicalize();
                    if (poly_eval_q(c, cand) == 0) {
                        root = cand;
                        found = true;
                        goto deflate;
                    }
                }
            }
        }
    deflate:
        if (!found) break;
        roots.push_back(root);
        // synthetic division by (x - root)
        std::vector<mpq_class> q(c.size() - 1);
        mpq_class carry = c.back();
        for (long i = (long)c.size() - 2; i >= 1; --i) {
            q[i] = carry;
            carry = c[i] + carry * root;
        }
        q[0] = carry;
        c = q;
    }
    return roots;
}

// one-dimensional kernel basis vector of (m - lambda I); throws if dim != 1
QVec eigenvector(const QMat& m, const mpq_class& lambda) {
    long n = (long)m.size();
    QMat a = m;
    for (long i = 0; i < n; ++i) a[i][i] -= lambda;
    // row-reduce, record pivot columns
    std::vector<long> pivot_col;
    long rank = 0;
    for (long c = 0; c < n && rank < n; ++c) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        mpq_class d = a[rank][c];
        for (long j = 0; j < n; ++j) a[rank][j] /= d;
        for (long r = 0; r < n; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (long j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank != n - 1) throw unsupported_frobenius("eigenspace dimension exceeds one");
    long free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    QVec v(n, 0);
    v[free_col] = 1;
    for (long r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free_col];
    // clear denominators for readability
    mpz_class lcm = 1;
    for (auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) x *= lcm;
    return v;
}

struct SplitData {
    std::vector<mpq_class> lambda;
    QMat lines;  // lines[i] spans the lambda[i]-eigenline
};

// distinct split eigenvalues with eigenlines, or no value if not fully split
bool split_eigen(const FilteredIsocrystal& V, SplitData& out) {
    auto c = qmat_charpoly(V.phi);
    auto roots = rational_roots(c);
    if ((long)roots.size() < V.n()) {
        if (!roots.empty()) throw unsupported_frobenius("partially split characteristic polynomial");
        return false;
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw unsupported_frobenius("repeated split eigenvalues");
    out.lambda = roots;
    out.lines.clear();
    for (const auto& l : roots) out.lines.push_back(eigenvector(V.phi, l));
    return true;
}

WaReport run_enumeration(const FilteredIsocrystal& V, const SplitData& S, bool det_newton) {
    long n = V.n();
    WaReport rep;
    rep.t_N = newton_number(V);
    rep.t_H = hodge_number(V);
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        QMat span;
        long tN = 0;
        for (long i = 0; i < n; ++i)
            if (mask >> i & 1) {
                span.push_back(S.lines[i]);
                tN += mpq_valuation(S.lambda[i], V.p);
            }
        if (det_newton) tN = newton_number_induced(V, span);
        long tH = hodge_number_induced(V, span);
        if (tH > tN) {
            rep.admissible = false;
            rep.has_witness = true;
            rep.witness = span;
            rep.witness_tN = tN;
            rep.witness_tH = tH;
            return rep;
        }
    }
    rep.admissible = (rep.t_H == rep.t_N);
    return rep;
}

}  // namespace

void isocrystal_validate(const FilteredIsocrystal& V) {
    long n = V.n();
    if (n == 0) throw domain_error("empty isocrystal");
    if (!is_prime_small(V.p)) throw domain_error("p must be prime");
    if ((long)V.weight.size() != n || (long)V.fil_basis.size() != n)
        throw domain_error("filtration data does not match the dimension");
    for (const auto& row : V.phi)
        if ((long)row.size() != n) throw domain_error("Frobenius matrix not square");
    for (const auto& row : V.fil_basis)
        if ((long)row.size() != n) throw domain_error("filtration basis shape mismatch");
    if (qmat_det(V.phi) == 0) throw domain_error("Frobenius not invertible");
    if (qmat_det(V.fil_basis) == 0) throw domain_error("filtration vectors are not a basis");
}

long newton_number(const FilteredIsocrystal& V) { return mpq_valuation(qmat_det(V.phi), V.p); }

long hodge_number(const FilteredIsocrystal& V) {
    long s = 0;
    for (long w : V.weight) s += w;
    return s;
}

long hodge_number_induced(const FilteredIsocrystal& V, const QMat& span) {
    if (span.empty()) return 0;
    long wmin = *std::min_element(V.weight.begin(), V.weight.end());
    long wmax = *std::max_element(V.weight.begin(), V.weight.end());
    long dim = qmat_rank(span);
    long tH = 0;
    long prev = dim;  // dim(V' cap F^wmin) = dim V'
    for (long j = wmin + 1; j <= wmax + 1; ++j) {
        QMat stack;
        for (long k = 0; k < V.n(); ++k)
            if (V.weight[k] >= j) stack.push_back(V.fil_basis[k]);
        long fdim = (long)stack.size();
        for (const auto& r : span) stack.push_back(r);
        long cap = dim + fdim - qmat_rank(stack);
        tH += (j - 1) * (prev - cap);
        prev = cap;
    }
    return tH;  // prev == 0 here: F^{wmax+1} = 0
}

long newton_number_induced(const FilteredIsocrystal& V, const QMat& span) {
    long n = V.n(), d = (long)span.size();
    if (d == 0) return 0;
    // solve phi v_i = sum_j M_ij v_j: one elimination on [span^T | images]
    QMat aug(n, QVec(d + d, 0));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i < d; ++i) aug[r][i] = span[i][r];
    for (long i = 0; i < d; ++i)
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) aug[r][d + i] += V.phi[r][c] * span[i][c];
    long rank = 0;
    std::vector<long> pivot_row(d, -1);
    for (long c = 0; c < d && rank < n; ++c) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (aug[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw domain_error("span vectors are linearly dependent");
        std::swap(aug[rank], aug[piv]);
        mpq_class dd = aug[rank][c];
        for (long j = 0; j < 2 * d; ++j) aug[rank][j] /= dd;
        for (long r = 0; r < n; ++r) {
            if (r == rank || aug[r][c] == 0) continue;
            mpq_class f = aug[r][c];
            for (long j = 0; j < 2 * d; ++j) aug[r][j] -= f * aug[rank][j];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    for (long r = rank; r < n; ++r)
        for (long i = 0; i < d; ++i)
            if (aug[r][d + i] != 0) throw domain_error("span is not Frobenius-stable");
    QMat M(d, QVec(d, 0));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) M[i][j] = aug[pivot_row[j]][d + i];
    mpq_class det = qmat_det(M);
    if (det == 0) throw domain_error("restricted Frobenius singular");
    return mpq_valuation(det, V.p);
}

bool poly_qp_irreducible_certified(const std::vector<mpq_class>& c, long p) {
    auto a = primitive_int_poly(c);
    long d = (long)a.size() - 1;
    while (d > 0 && a[d] == 0) --d;
    if (d <= 0) return false;
    if (d == 1) return true;
    // Eisenstein at p
    {
        bool eis = a[d] % p != 0 && a[0] % (mpz_class(p) * p) != 0;
        for (long i = 0; i < d && eis; ++i)
            if (a[i] % p != 0) eis = false;
        if (eis) return true;
    }
    // irreducible modulo p (monic reduction, trial division over F_p)
    if (a[d] % p != 0) {
        mpz_class inv = mpz_inv_mod(mpz_mod(a[d], p), p);
        std::vector<long> f(d + 1);
        for (long i = 0; i <= d; ++i) f[i] = mpz_class(mpz_mod(a[i] * inv, p)).get_si();
        bool feasible = true;
        for (long k = 1; 2 * k <= d && feasible; ++k) {
            mpz_class count = mpz_pow(p, k);
            if (count > 20000) feasible = false;
        }
        if (feasible && f[0] != 0) {
            bool irred = true;
            for (long k = 1; 2 * k <= d && irred; ++k) {
                long nk = mpz_class(mpz_pow(p, k)).get_si();
                for (long idx = 0; idx < nk && irred; ++idx) {
                    // monic divisor candidate g of degree k from base-p digits
                    std::vector<long> g(k + 1, 1);
                    long t = idx;
                    for (long i = 0; i < k; ++i) {
                        g[i] = t % p;
                        t /= p;
                    }
                    // remainder of f by g over F_p
                    std::vector<long> r = f;
                    for (long i = d; i >= k; --i) {
                        long lead = r[i] % p;
                        if (lead == 0) continue;
                        for (long j = 0; j <= k; ++j)
                            r[i - k + j] = ((r[i - k + j] - lead * g[j]) % p + p) % p;
                    }
                    bool zero = true;
                    for (long i = 0; i < k; ++i)
                        if (r[i] % p != 0) zero = false;
                    if (zero) irred = false;
                }
            }
            if (irred) return true;
        }
    }
    // quadratic: discriminant a non-square in Q_p
    if (d == 2) {
        mpz_class disc = a[1] * a[1] - 4 * a[2] * a[0];
        if (disc == 0) return false;
        long v = mpz_val(disc, p);
        if (v % 2 != 0) return true;
        mpz_class u = disc / mpz_pow(p, v);
        if (p == 2) return mpz_mod(u, 8) != 1;
        return mpz_kronecker_ui(u.get_mpz_t(), (unsigned long)p) == -1;
    }
    return false;
}

WaReport weakly_admissible(const FilteredIsocrystal& V) {
    isocrystal_validate(V);
    SplitData S;
    if (split_eigen(V, S)) return run_enumeration(V, S, /*det_newton=*/false);
    if (poly_qp_irreducible_certified(qmat_charpoly(V.phi), V.p)) {
        WaReport rep;
        rep.irreducible_path = true;
        rep.t_N = newton_number(V);
        rep.t_H = hodge_number(V);
        rep.admissible = (rep.t_H == rep.t_N);
        if (rep.t_H > rep.t_N) {
            rep.has_witness = true;
            rep.witness = V.fil_basis;
            rep.witness_tN = rep.t_N;
            rep.witness_tH = rep.t_H;
        }
        return rep;
    }
    throw unsupported_frobenius("Frobenius neither split with distinct eigenvalues nor certified irreducible");
}

WaReport weakly_admissible_bruteforce(const FilteredIsocrystal& V) {
    isocrystal_validate(V);
    if (V.n() > 3) throw domain_error("brute-force oracle supports n <= 3");
    SplitData S;
    if (!split_eigen(V, S)) throw unsupported_frobenius("oracle requires split eigenvalues");
    return run_enumeration(V, S, /*det_newton=*/true);
}

FilteredIsocrystal isocrystal_dual(const FilteredIsocrystal& V) {
    isocrystal_validate(V);
    long n = V.n();
    FilteredIsocrystal D;
    D.p = V.p;
    QMat phinv = qmat_inverse(V.phi);
    D.phi.assign(n, QVec(n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) D.phi[i][j] = phinv[j][i];
    QMat binv = qmat_inverse(V.fil_basis);
    D.fil_basis.assign(n, QVec(n, 0));
    for (long k = 0; k < n; ++k)
        for (long j = 0; j < n; ++j) D.fil_basis[k][j] = binv[j][k];
    D.weight.resize(n);
    for (long k = 0; k < n; ++k) D.weight[k] = -V.weight[k];
    return D;
}

}  // namespace padic
