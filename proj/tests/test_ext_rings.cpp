#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padic/eisenstein.hpp>
#include <padic/ffield.hpp>
#include <padic/unram.hpp>

#include <random>

using namespace padic;

TEST_CASE("finite field F_25") {
    FFCtx F(5, 2);
    CHECK(ffield_poly_irreducible(5, F.modulus()));
    auto g = F.from_index(5);  // the class of x
    // multiplicative group is cyclic of order 24; every nonzero order divides 24
    for (long n = 1; n < 25; ++n) {
        auto a = F.from_index(n);
        CHECK(24 % F.order(a) == 0);
        CHECK(F.is_zero(F.sub(F.mul(a, F.inv(a)), F.one())));
    }
    // Frobenius has order 2
    auto fr = F.frobenius(g);
    CHECK(!(fr == g));
    CHECK(F.frobenius(fr) == g);
}

TEST_CASE("unramified Z_49: teichmueller and frobenius") {
    UnramCtx R(7, 2, 8);
    const FFCtx& F = R.residue_field();
    // find a generator of F_49^*
    FFCtx::Elem gen;
    for (long n = 1; n < 49; ++n) {
        auto a = F.from_index(n);
        if (F.order(a) == 48) {
            gen = a;
            break;
        }
    }
    auto w = R.teichmueller(gen);
    auto w48 = R.pow(w, 48);
    CHECK(R.equal_mod(w48, R.one(), 8));
    CHECK(R.reduce_mod_p(w) == gen);

    // frobenius fixes Z_p coordinates and squares to identity on the residue field
    auto fw = R.frobenius(w);
    CHECK(R.equal_mod(R.frobenius(fw), w, 8));
    CHECK(R.reduce_mod_p(fw) == F.frobenius(gen));
    auto c = R.from_scalar(12345);
    CHECK(R.equal_mod(R.frobenius(c), c, 8));

    // teichmueller multiplicativity
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 30; ++i) {
        auto a = F.from_index(1 + (long)(rng() % 48));
        auto b = F.from_index(1 + (long)(rng() % 48));
        if (F.is_zero(a) || F.is_zero(b)) continue;
        auto lhs = R.mul(R.teichmueller(a), R.teichmueller(b));
        auto rhs = R.teichmueller(F.mul(a, b));
        CHECK(R.equal_mod(lhs, rhs, 8));
    }

    // log of a root of unity vanishes; log is additive
    auto lw = R.log(w);
    CHECK(R.is_zero_at_prec(lw));
    auto u1 = R.add(R.one(), R.mul(R.from_scalar(7), w));
    auto u2 = R.add(R.one(), R.from_scalar(14));
    auto l12 = R.log(R.mul(u1, u2));
    auto sum = R.add(R.log(u1), R.log(u2));
    CHECK(R.equal_mod(l12, sum, 7));
}

TEST_CASE("unramified inverse and valuation") {
    UnramCtx R(5, 3, 6);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        UnramCtx::Elem a = R.zero();
        for (auto& c : a.c) c = (long)(rng() % 15625);
        if (R.is_zero_at_prec(a) || R.val(a) != 0) continue;
        auto ia = R.inv(a);
        CHECK(R.equal_mod(R.mul(a, ia), R.one(), 6));
    }
}

TEST_CASE("eisenstein ring: defining relation and valuations") {
    EisCtx E(5, 8);
    auto pi = E.pi();
    auto pi4 = E.pow(pi, 4);
    CHECK(E.equal_mod_pi(pi4, E.from_scalar(-5), 30));
    CHECK(E.pival(pi) == 1);
    CHECK(E.pival(E.from_scalar(25)) == 8);

    // v_pi multiplicativity on random nonzero elements
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        EisCtx::Elem a = E.zero(), b = E.zero();
        for (auto& c : a.c) c = (long)(rng() % 3125);
        for (auto& c : b.c) c = (long)(rng() % 3125);
        if (E.is_zero_at_prec(a) || E.is_zero_at_prec(b)) continue;
        long va = E.pival(a), vb = E.pival(b);
        auto ab = E.mul(a, b);
        if (va + vb < ab.eff_prec(4)) CHECK(E.pival(ab) == va + vb);
    }
}

TEST_CASE("eisenstein pi-power shifts and division") {
    EisCtx E(7, 10);
    auto x = E.mul_scalar(E.pow(E.pi(), 3), 11);
    auto y = E.mul_pi_pow(x, -3);
    CHECK(E.equal_mod_pi(y, E.from_scalar(11), 40));
    auto z = E.mul_pi_pow(E.from_scalar(-7), -6);  // pi^6 = -7
    CHECK(E.equal_mod_pi(z, E.one(), 30));
    auto w = E.div_by_mpz(E.mul_scalar(E.one(), 21), 3);
    CHECK(E.equal_mod_pi(w, E.from_scalar(7), 50));
    // inverse of a unit
    auto u = E.add(E.one(), E.pi());
    auto iu = E.inv(u);
    CHECK(E.equal_mod_pi(E.mul(u, iu), E.one(), 50));
}
