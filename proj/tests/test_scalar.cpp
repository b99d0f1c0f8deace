#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padic/scalar.hpp>

#include <random>

using namespace padic;

TEST_CASE("basic arithmetic in Q_5") {
    long p = 5;
    auto two = PadicScalar::from_mpz(p, 2, 10);
    CHECK(same_mod_known(two * two.inv(), PadicScalar::one(p, 10)));

    auto fifty = PadicScalar::from_mpz(p, 50, 10);
    CHECK(fifty.val() == 2);
    CHECK(fifty.unit() == 2);

    auto half = PadicScalar::from_mpq(p, mpq_class(1, 2), 6);
    CHECK((half + half).congruent_to(1, 6));

    // p in the denominator gives negative valuation
    auto fifth = PadicScalar::from_mpq(p, mpq_class(1, 5), 6);
    CHECK(fifth.val() == -1);
    CHECK(same_mod_known(fifth * PadicScalar::from_mpz(p, 5, 6), PadicScalar::one(p, 6)));
    CHECK(PadicScalar::from_mpq(p, mpq_class(50, 4), 6).val() == 2);
}

TEST_CASE("ultrametric triangle inequality on random inputs") {
    std::mt19937_64 rng(12345);
    long p = 7;
    for (int i = 0; i < 500; ++i) {
        mpz_class a = (long)(rng() % 100000) + 1;
        mpz_class b = (long)(rng() % 100000) + 1;
        long sa = (long)(rng() % 4), sb = (long)(rng() % 4);
        auto x = PadicScalar::from_mpz(p, a, 12, sa);
        auto y = PadicScalar::from_mpz(p, b, 12, sb);
        auto s = x + y;
        if (s.is_zeroish()) continue;
        CHECK(s.val() >= std::min(x.val(), y.val()));
        if (x.val() != y.val()) CHECK(s.val() == std::min(x.val(), y.val()));
    }
}

TEST_CASE("precision propagation never overstates") {
    long p = 5;
    auto x = PadicScalar::from_mpz(p, 6, 3);   // 6 mod 5^3
    auto y = PadicScalar::from_mpz(p, 1, 8);   // 1 mod 5^8
    auto d = x - y;                            // 5 mod 5^3 -> rel prec 2
    CHECK(d.val() == 1);
    CHECK(d.abs_prec() == 3);
    // cancellation down to approximate zero
    auto z = x - x;
    CHECK(z.is_approx_zero());
    CHECK_THROWS_AS(z.inv(), precision_error);
    CHECK_THROWS_AS(PadicScalar::zero(p).inv(), domain_error);
}

TEST_CASE("teichmueller fixpoints") {
    // 182^2 = -1 mod 625 and 182 = 2 mod 5
    auto t = teichmueller(5, 2, 4);
    CHECK(t.congruent_to(182, 4));
    mpz_class sq = 182 * 182;
    CHECK((t * t).congruent_to(-1, 4));
    CHECK(same_mod_known(teichmueller(5, 1, 6), PadicScalar::one(5, 6)));

    // multiplicativity
    for (long a = 1; a < 7; ++a)
        for (long b = 1; b < 7; ++b) {
            auto ta = teichmueller(7, a, 8), tb = teichmueller(7, b, 8);
            auto tab = teichmueller(7, a * b, 8);
            CHECK(same_mod_known(ta * tb, tab));
        }
}

TEST_CASE("log and exp") {
    long p = 5;
    // log of a root of unity vanishes
    auto t = teichmueller(p, 3, 8);
    auto lt = padic_log(t);
    CHECK((lt.is_exact_zero() || lt.is_approx_zero()));

    // log(1+5) = 555 mod 5^4: truncated alternating series
    auto x = PadicScalar::from_mpz(p, 6, 4);
    auto lx = padic_log(x);
    CHECK(lx.val() == 1);
    CHECK(lx.congruent_to(555, 4));

    // round trip
    auto back = padic_exp(lx);
    CHECK(back.congruent_to(6, 4));

    // exp(0) = 1; val(exp(p) - 1) = 1
    CHECK(padic_exp(PadicScalar::zero(p)).congruent_to(1, 1));
    auto ep = padic_exp(PadicScalar::from_mpz(p, 5, 8));
    auto em1 = ep - PadicScalar::one(p, 8);
    CHECK(em1.val() == 1);

    // homomorphism on random units
    std::mt19937_64 rng(999);
    for (int i = 0; i < 50; ++i) {
        mpz_class a = (long)(rng() % 100000) + 1;
        mpz_class b = (long)(rng() % 100000) + 1;
        if (a % p == 0 || b % p == 0) continue;
        auto xa = PadicScalar::from_mpz(p, a, 10);
        auto xb = PadicScalar::from_mpz(p, b, 10);
        auto lhs = padic_log(xa * xb);
        auto rhs = padic_log(xa) + padic_log(xb);
        CHECK(same_mod_known(lhs, rhs));
    }
}

TEST_CASE("exp domain errors") {
    CHECK_THROWS_AS(padic_exp(PadicScalar::from_mpz(5, 2, 6)), domain_error);
    CHECK_THROWS_AS(padic_exp(PadicScalar::from_mpz(2, 2, 6)), domain_error);
}
