#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padic/isocrystal.hpp>

#include <random>

using namespace padic;

namespace {

QMat diag(const std::vector<mpq_class>& d) {
    long n = (long)d.size();
    QMat m(n, QVec(n, 0));
    for (long i = 0; i < n; ++i) m[i][i] = d[i];
    return m;
}

QMat identity(long n) { return diag(QVec(n, 1)); }

FilteredIsocrystal make(long p, QMat phi, std::vector<long> w, QMat basis) {
    FilteredIsocrystal V;
    V.p = p;
    V.phi = std::move(phi);
    V.weight = std::move(w);
    V.fil_basis = std::move(basis);
    return V;
}

}  // namespace

TEST_CASE("newton and hodge numbers on elementary shapes") {
    // n = 1, phi = (p), jump at 1
    auto V1 = make(5, {{5}}, {1}, {{1}});
    CHECK(newton_number(V1) == 1);
    CHECK(hodge_number(V1) == 1);

    // n = 2, phi = diag(1, p), F^1 a line
    auto V2 = make(5, diag({1, 5}), {1, 0}, {{1, 1}, {0, 1}});
    CHECK(newton_number(V2) == 1);
    CHECK(hodge_number(V2) == 1);

    // n = 2, phi = diag(p, p), gr concentrated in degree 1 with dim 2
    auto V3 = make(5, diag({5, 5}), {1, 1}, identity(2));
    CHECK(newton_number(V3) == 2);
    CHECK(hodge_number(V3) == 2);
}

TEST_CASE("charpoly and valuation helpers") {
    auto c = qmat_charpoly(diag({1, 5}));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 5);
    CHECK(c[1] == -6);
    CHECK(c[2] == 1);
    CHECK(mpq_valuation(mpq_class(50, 3), 5) == 2);
    CHECK(mpq_valuation(mpq_class(3, 25), 5) == -2);
    CHECK_THROWS_AS(mpq_valuation(mpq_class(0), 5), domain_error);
}

TEST_CASE("ordinary shape is weakly admissible") {
    // F^1 = span(e1 + e2): meets neither eigenline, so both proper subobjects
    // have t_H = 0 against t_N = 0 resp. 1
    auto V = make(5, diag({1, 5}), {1, 0}, {{1, 1}, {0, 1}});
    auto rep = weakly_admissible(V);
    CHECK(rep.admissible);
    CHECK(rep.t_N == 1);
    CHECK(rep.t_H == 1);
    CHECK(!rep.has_witness);
    CHECK(!rep.irreducible_path);
}

TEST_CASE("slope-0 line in F^1 is rejected with that line as witness") {
    auto V = make(5, diag({1, 5}), {1, 0}, {{1, 0}, {0, 1}});
    auto rep = weakly_admissible(V);
    CHECK(!rep.admissible);
    REQUIRE(rep.has_witness);
    REQUIRE(rep.witness.size() == 1);
    // the witness is the e1-eigenline
    CHECK(rep.witness[0][1] == 0);
    CHECK(rep.witness[0][0] != 0);
    CHECK(rep.witness_tH == 1);
    CHECK(rep.witness_tN == 0);
}

TEST_CASE("irreducible Frobenius accepts on totals") {
    // phi e1 = e2, phi e2 = p e1: characteristic polynomial X^2 - p
    auto V = make(5, {{0, 5}, {1, 0}}, {1, 0}, identity(2));
    auto rep = weakly_admissible(V);
    CHECK(rep.admissible);
    CHECK(rep.irreducible_path);
    CHECK(rep.t_N == 1);
    CHECK(rep.t_H == 1);

    // unbalanced filtration on the same Frobenius fails the equality
    auto W = make(5, {{0, 5}, {1, 0}}, {2, 1}, identity(2));
    auto rw = weakly_admissible(W);
    CHECK(!rw.admissible);
    CHECK(rw.has_witness);  // t_H = 3 > 1 = t_N: the total object violates
}

TEST_CASE("unsupported Frobenius shapes are rejected with the typed error") {
    CHECK_THROWS_AS(weakly_admissible(make(5, diag({2, 2}), {1, 0}, identity(2))),
                    unsupported_frobenius);
    // partially split: (x - 1)(x^2 - 5)
    QMat m = {{1, 0, 0}, {0, 0, 5}, {0, 1, 0}};
    CHECK_THROWS_AS(weakly_admissible(make(5, m, {1, 0, 0}, identity(3))), unsupported_frobenius);
}

TEST_CASE("validation rejects malformed objects") {
    CHECK_THROWS_AS(weakly_admissible(make(5, diag({0, 5}), {1, 0}, identity(2))), domain_error);
    CHECK_THROWS_AS(weakly_admissible(make(5, diag({1, 5}), {1, 0}, {{1, 1}, {2, 2}})),
                    domain_error);
    CHECK_THROWS_AS(weakly_admissible(make(4, diag({1, 3}), {1, 0}, identity(2))), domain_error);
}

TEST_CASE("irreducibility certificates") {
    using P = std::vector<mpq_class>;
    CHECK(poly_qp_irreducible_certified(P{-5, 0, 1}, 5));   // x^2 - 5: Eisenstein
    CHECK(poly_qp_irreducible_certified(P{-5, 0, 0, 1}, 5));  // x^3 - 5
    CHECK(poly_qp_irreducible_certified(P{1, 0, 1}, 7));    // x^2 + 1, -1 not a QR mod 7
    CHECK(!poly_qp_irreducible_certified(P{1, 0, 1}, 5));   // -1 = 2^2 mod 5: splits
    CHECK(!poly_qp_irreducible_certified(P{-1, 0, 1}, 5));  // x^2 - 1 reducible
    CHECK(poly_qp_irreducible_certified(P{1, 1, 1}, 5));    // x^2 + x + 1 irreducible mod 5
}

TEST_CASE("duality preserves the verdict and negates the invariants") {
    std::vector<FilteredIsocrystal> zoo = {
        make(5, diag({1, 5}), {1, 0}, {{1, 1}, {0, 1}}),
        make(5, diag({1, 5}), {1, 0}, identity(2)),
        make(5, {{0, 5}, {1, 0}}, {1, 0}, identity(2)),
        make(7, diag({1, 7, 49}), {2, 1, 0}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
    };
    for (const auto& V : zoo) {
        auto D = isocrystal_dual(V);
        CHECK(newton_number(D) == -newton_number(V));
        CHECK(hodge_number(D) == -hodge_number(V));
        CHECK(weakly_admissible(D).admissible == weakly_admissible(V).admissible);
    }
}

TEST_CASE("randomized oracle agreement for n <= 3") {
    std::mt19937_64 rng(424242);
    auto rnd = [&](long lo, long hi) { return lo + (long)(rng() % (unsigned long)(hi - lo + 1)); };
    int built = 0;
    while (built < 100) {
        long p = std::vector<long>{3, 5, 7}[rnd(0, 2)];
        long n = rnd(1, 3);
        // distinct eigenvalues u p^e with unit parts prime to p
        std::vector<mpq_class> lam;
        while ((long)lam.size() < n) {
            long u = rnd(1, 6);
            if (u % p == 0) continue;
            long e = rnd(-2, 2);
            mpq_class l = e >= 0 ? mpq_class(u * mpz_pow(p, e)) : mpq_class(u, mpz_pow(p, -e));
            l.canonicalize();
            bool dup = false;
            for (const auto& x : lam) dup |= (x == l);
            if (!dup) lam.push_back(l);
        }
        auto rand_invertible = [&]() {
            while (true) {
                QMat q(n, QVec(n));
                for (long i = 0; i < n; ++i)
                    for (long j = 0; j < n; ++j) q[i][j] = rnd(-3, 3);
                if (qmat_det(q) != 0) return q;
            }
        };
        QMat Q = rand_invertible();
        QMat phi = qmat_mul(qmat_mul(Q, diag(lam)), qmat_inverse(Q));
        std::vector<long> w(n);
        for (auto& x : w) x = rnd(-2, 2);
        auto V = make(p, phi, w, rand_invertible());

        auto fast = weakly_admissible(V);
        auto slow = weakly_admissible_bruteforce(V);
        CHECK(fast.admissible == slow.admissible);
        CHECK(fast.t_N == slow.t_N);
        CHECK(fast.t_H == slow.t_H);
        CHECK(fast.has_witness == slow.has_witness);
        if (fast.has_witness) {
            CHECK(fast.witness_tH > fast.witness_tN);
            CHECK(slow.witness_tH > slow.witness_tN);
            // the witnesses are found in the same enumeration order
            CHECK(fast.witness == slow.witness);
            CHECK(fast.witness_tN == slow.witness_tN);
            CHECK(fast.witness_tH == slow.witness_tH);
        }
        ++built;
    }
}
