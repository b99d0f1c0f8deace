#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padic/tree.hpp>

#include <random>

using namespace padic;

namespace {

TreeCtx::KElem random_elem(const TreeCtx& K, std::mt19937_64& rng) {
    TreeCtx::KElem a(K.f());
    for (auto& c : a) {
        long num = (long)(rng() % 41) - 20;
        long den = 1 + (long)(rng() % 3) * (K.p() - 1);  // occasionally p-divisible denominator
        c = mpq_class(num, den);
        c.canonicalize();
    }
    return a;
}

TreeVertex random_vertex(const TreeCtx& K, std::mt19937_64& rng) {
    long r = (long)(rng() % 7) - 3;
    return vertex_make(K, r, random_elem(K, rng));
}

}  // namespace

TEST_CASE("field contexts and exact arithmetic") {
    TreeCtx K(3, 2);
    CHECK(K.q() == 9);
    CHECK(K.modulus() == std::vector<mpq_class>{1, 0, 1});  // x^2 + 1
    auto s = K.gen();
    CHECK(K.mul(s, s) == K.from_rational(-1));
    CHECK(K.val(K.scale_p(K.one(), 3)) == 3);
    CHECK(K.val(K.add(s, K.from_rational(3))) == 0);
    CHECK_THROWS_AS(K.val(K.zero()), domain_error);

    std::mt19937_64 rng(7);
    for (long p : {2L, 5L}) {
        for (long f : {1L, 2L}) {
            TreeCtx L(p, f);
            for (int t = 0; t < 20; ++t) {
                auto a = random_elem(L, rng);
                if (L.is_zero(a)) continue;
                CHECK(L.mul(a, L.inv(a)) == L.one());
            }
        }
    }
    CHECK_THROWS_AS(TreeCtx(4, 1), domain_error);
    // x^2 - 1 splits mod 5
    CHECK_THROWS_AS(TreeCtx(5, std::vector<mpq_class>{-1, 0, 1}), domain_error);
}

TEST_CASE("vertex normal form") {
    TreeCtx K(5, 1);
    auto v = vertex_make(K, 2, K.from_rational(7));
    CHECK(v.r == 2);
    CHECK(v.e == 0);
    CHECK(v.c == std::vector<mpz_class>{7});
    CHECK(vertex_str(K, v) == "5:2:12");  // 7 in base 5

    // center only matters modulo p^r
    CHECK(vertex_make(K, 2, K.from_rational(7 + 25)) == v);
    CHECK(vertex_make(K, 2, K.from_rational(7 + 50)) == v);
    CHECK(vertex_make(K, 1, K.from_rational(7)) != v);

    // fractional center
    auto w = vertex_make(K, 1, K.from_rational(mpq_class(1, 5)));
    CHECK(w.e == 1);
    CHECK(w.c == std::vector<mpz_class>{1});
    CHECK(vertex_center(K, w) == K.from_rational(mpq_class(1, 5)));

    // huge disks absorb integral centers
    auto big = vertex_make(K, -2, K.from_rational(7));
    CHECK(big == vertex_make(K, -2, K.zero()));

    // round trip through the center
    std::mt19937_64 rng(11);
    TreeCtx L(3, 2);
    for (int t = 0; t < 50; ++t) {
        auto v2 = random_vertex(L, rng);
        CHECK(vertex_make(L, v2.r, vertex_center(L, v2)) == v2);
    }
}

TEST_CASE("every vertex has q + 1 neighbors") {
    std::mt19937_64 rng(13);
    for (auto [p, f] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        TreeCtx K(p, f);
        long q = K.q();
        for (int t = 0; t < 8; ++t) {
            auto v = random_vertex(K, rng);
            auto nb = neighbors(K, v);
            CHECK((long)nb.size() == q + 1);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) CHECK(!(nb[i] == nb[j]));
            // adjacency is symmetric and has distance one
            for (const auto& w : nb) {
                CHECK(vertex_distance(K, v, w) == 1);
                auto back = neighbors(K, w);
                bool found = false;
                for (const auto& u : back) found |= (u == v);
                CHECK(found);
            }
        }
    }
}

TEST_CASE("geodesics and the tree metric") {
    TreeCtx K(5, 1);
    auto v = tree_origin(K);
    auto w = vertex_make(K, 1, K.zero());  // the class of diag(p, 1)
    CHECK(vertex_distance(K, v, w) == 1);

    auto w2 = vertex_make(K, 2, K.zero());
    CHECK(vertex_distance(K, v, w2) == 2);
    auto path = geodesic(K, v, w2);
    REQUIRE(path.size() == 3);
    CHECK(path[0] == v);
    CHECK(path[1] == w);
    CHECK(path[2] == w2);

    // two branches meet at their join disk
    auto a = vertex_make(K, 2, K.from_rational(1));
    auto b = vertex_make(K, 2, K.from_rational(2));
    CHECK(vertex_distance(K, a, b) == 4);  // join at r = 0

    std::mt19937_64 rng(17);
    TreeCtx L(3, 2);
    for (int t = 0; t < 40; ++t) {
        auto x = random_vertex(L, rng), y = random_vertex(L, rng), z = random_vertex(L, rng);
        long dxy = vertex_distance(L, x, y);
        CHECK(dxy == vertex_distance(L, y, x));
        CHECK((dxy == 0) == (x == y));
        CHECK(dxy <= vertex_distance(L, x, z) + vertex_distance(L, z, y));
        auto g = geodesic(L, x, y);
        CHECK((long)g.size() == dxy + 1);
        for (size_t i = 0; i + 1 < g.size(); ++i) CHECK(vertex_distance(L, g[i], g[i + 1]) == 1);
    }
}

TEST_CASE("lattice reduction agrees with the disk normal form") {
    TreeCtx K(5, 1);
    for (long r : {-2L, 0L, 1L, 3L})
        for (long a : {0L, 1L, 7L, 23L}) {
            auto v = vertex_make(K, r, K.from_rational(a));
            auto pr = K.scale_p(K.one(), r);
            std::array<TreeCtx::KElem, 4> m{pr, K.from_rational(a), K.zero(), K.one()};
            CHECK(vertex_from_lattice(K, m) == v);
            // scaling the basis does not change the class
            for (auto& ent : m) ent = K.scale_p(ent, -2);
            CHECK(vertex_from_lattice(K, m) == v);
        }
    std::array<TreeCtx::KElem, 4> sing{K.one(), K.one(), K.one(), K.one()};
    CHECK_THROWS_AS(vertex_from_lattice(K, sing), domain_error);
}

TEST_CASE("the projective action is by isometries") {
    std::mt19937_64 rng(19);
    for (auto [p, f] : std::vector<std::pair<long, long>>{{5, 1}, {3, 2}}) {
        TreeCtx K(p, f);
        for (int t = 0; t < 30; ++t) {
            std::array<TreeCtx::KElem, 4> m;
            do {
                for (auto& ent : m) ent = random_elem(K, rng);
            } while (K.is_zero(K.sub(K.mul(m[0], m[3]), K.mul(m[1], m[2]))));
            auto g = pgl2_make(K, m);
            auto v = random_vertex(K, rng), w = random_vertex(K, rng);
            CHECK(vertex_distance(K, pgl2_act(K, g, v), pgl2_act(K, g, w)) ==
                  vertex_distance(K, v, w));
            // inverse really inverts the action
            CHECK(pgl2_act(K, pgl2_inv(K, g), pgl2_act(K, g, v)) == v);
        }
    }
}

TEST_CASE("berkovich point classification") {
    TreeCtx K(5, 1);
    CHECK(classify_point(berkovich_classical(K, K.from_rational(3))) == 1);
    CHECK(classify_point(berkovich_disk(K, K.zero(), 2)) == 2);
    CHECK(classify_point(berkovich_disk(K, K.zero(), mpq_class(1, 2))) == 3);
    CHECK_THROWS_AS(berkovich_nested_family(K, {}), domain_error);

    // vertex <-> integral type-2 point round trip
    std::mt19937_64 rng(23);
    TreeCtx L(3, 2);
    for (int t = 0; t < 25; ++t) {
        auto v = random_vertex(L, rng);
        auto x = vertex_to_point(L, v);
        CHECK(classify_point(x) == 2);
        CHECK(point_to_vertex(L, x) == v);
    }
    CHECK_THROWS_AS(point_to_vertex(K, berkovich_disk(K, K.zero(), mpq_class(1, 2))),
                    domain_error);
}

TEST_CASE("drinfeld space membership") {
    TreeCtx K9(3, 2);
    CHECK(in_drinfeld_space(K9, berkovich_disk(K9, K9.zero(), 0)));
    CHECK(in_drinfeld_space(K9, berkovich_classical(K9, K9.gen())));
    CHECK(!in_drinfeld_space(K9, berkovich_classical(K9, K9.from_rational(3))));

    CHECK(in_drinfeld_space(5, {-5, 0, 1}));   // X^2 - 5, ramified
    CHECK(in_drinfeld_space(3, {1, 0, 1}));    // X^2 + 1, inert
    CHECK(!in_drinfeld_space(5, {-3, 1}));     // z = 3 is rational
    CHECK_THROWS_AS(in_drinfeld_space(5, {-1, 0, 1}), domain_error);  // X^2 - 1 splits
    CHECK_THROWS_AS(in_drinfeld_space(5, {1, 0, 0, 1}), domain_error);
}

TEST_CASE("translation lengths from the characteristic polynomial") {
    TreeCtx K(5, 1);
    auto id = pgl2_make(K, {K.one(), K.zero(), K.zero(), K.one()});
    auto c0 = pgl2_classify(K, id);
    CHECK(!c0.hyperbolic);
    CHECK(c0.translation_length == 0);
    CHECK(c0.note.find("elliptic") != std::string::npos);

    auto h = pgl2_make(K, {K.one(), K.zero(), K.zero(), K.scale_p(K.one(), 1)});
    auto c1 = pgl2_classify(K, h);
    CHECK(c1.hyperbolic);
    CHECK(c1.translation_length == 1);
    // and it translates vertices along the standard apartment by exactly 1
    auto v = tree_origin(K);
    CHECK(vertex_distance(K, v, pgl2_act(K, h, v)) == 1);
    auto v2 = pgl2_act(K, h, pgl2_act(K, h, v));
    CHECK(vertex_distance(K, v, v2) == 2);

    // gamma_1 over Q_9: trace -2, determinant 9, length 2
    TreeCtx K9(3, 2);
    using KE = TreeCtx::KElem;
    auto g1 = pgl2_make(K9, {KE{-1, -2}, KE{2, 0}, KE{-2, 0}, KE{-1, 2}});
    auto c2 = pgl2_classify(K9, g1);
    CHECK(c2.hyperbolic);
    CHECK(c2.translation_length == 2);
}

TEST_CASE("rank-three schottky generators") {
    auto rep = schottky_triple_check();
    CHECK(rep.z_invariants_ok);
    CHECK(rep.embedding_hom_ok);
    CHECK(rep.gamma1_matches);
    CHECK(rep.gamma3_matches);
    CHECK(rep.gamma2_invariants_ok);
    CHECK(rep.lengths == std::array<long, 3>{2, 2, 2});
    CHECK(rep.pairwise_hyperbolic);
    CHECK(rep.all());
}

TEST_CASE("dot emitter for finite balls") {
    TreeCtx K(2, 1);
    auto dot = tree_ball_dot(K, tree_origin(K), 1);
    CHECK(dot.substr(0, 5) == "graph");
    // 4 nodes (origin + 3 neighbors), 3 edges
    size_t nodes = 0, edges = 0;
    for (size_t pos = 0; (pos = dot.find("label", pos)) != std::string::npos; ++pos) ++nodes;
    for (size_t pos = 0; (pos = dot.find("--", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes == 4);
    CHECK(edges == 3);
    CHECK_THROWS_AS(tree_ball_dot(K, tree_origin(K), -1), domain_error);
}
