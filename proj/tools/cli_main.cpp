// Batch command-line front end: one subcommand per module operation group,
// text or structured-document output, data-file management.
#include <CLI11.hpp>
#include <json.hpp>

#include <padic/atlas.hpp>
#include <padic/cm_table.hpp>
#include <padic/gamma_dwork.hpp>
#include <padic/hgde.hpp>
#include <padic/isocrystal.hpp>
#include <padic/quaternion.hpp>
#include <padic/tree.hpp>
#include <padic/unit_root.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace padic;
using nlohmann::json;

namespace {

struct Doc {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json precision = json::object();
    std::ostringstream text;

    template <typename T>
    void in(const std::string& key, const T& v) {
        inputs[key] = v;
    }
    template <typename T>
    void prec(const std::string& key, const T& v) {
        precision[key] = v;
    }
    template <typename T>
    void out(const std::string& key, const T& v) {
        outputs[key] = v;
        text << key << ": " << json(v).dump() << "\n";
    }
    void out_str(const std::string& key, const std::string& v) {
        outputs[key] = v;
        text << key << ": " << v << "\n";
    }
    void block(const std::string& key, const std::string& v) {
        outputs[key] = v;
        text << v;
        if (!v.empty() && v.back() != '\n') text << "\n";
    }
};

mpq_class parse_q(const std::string& s) {
    mpq_class x;
    if (x.set_str(s, 10) != 0) throw domain_error("cannot parse rational: " + s);
    x.canonicalize();
    return x;
}

std::vector<mpq_class> parse_q_list(const std::string& s) {
    std::vector<mpq_class> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_q(tok));
    return out;
}

std::vector<std::vector<mpq_class>> parse_poly_list(const std::string& s) {
    std::vector<std::vector<mpq_class>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(parse_q_list(tok));
    return out;
}

TriangleTriple parse_triple(const std::string& s) {
    auto v = parse_q_list(s);
    if (v.size() != 3) throw domain_error("triple needs e0,e1,einf");
    return {mpz_class(v[0].get_num()).get_si(), mpz_class(v[1].get_num()).get_si(),
            mpz_class(v[2].get_num()).get_si()};
}

std::string q_str(const mpq_class& x) { return x.get_str(); }

void write_or_print(Doc& doc, const std::string& key, const std::string& payload,
                    const std::string& out_path) {
    if (out_path.empty()) {
        doc.block(key, payload);
    } else {
        std::ofstream os(out_path);
        if (!os) throw domain_error("cannot write " + out_path);
        os << payload;
        doc.out_str(key, out_path);
    }
}

FilteredIsocrystal wa_example(const std::string& name) {
    auto diag2 = [](mpq_class a, mpq_class b) { return QMat{{a, 0}, {0, b}}; };
    FilteredIsocrystal V;
    V.p = 5;
    if (name == "ordinary") {
        V.phi = diag2(1, 5);
        V.weight = {1, 0};
        V.fil_basis = {{1, 1}, {0, 1}};
    } else if (name == "slope0-line") {
        V.phi = diag2(1, 5);
        V.weight = {1, 0};
        V.fil_basis = {{1, 0}, {0, 1}};
    } else if (name == "irreducible") {
        V.phi = {{0, 5}, {1, 0}};  // X^2 - 5
        V.weight = {1, 0};
        V.fil_basis = {{1, 0}, {0, 1}};
    } else {
        throw domain_error("unknown example: " + name);
    }
    return V;
}

FilteredIsocrystal wa_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw domain_error("cannot read " + path);
    json j;
    is >> j;
    FilteredIsocrystal V;
    V.p = j.at("p").get<long>();
    for (const auto& row : j.at("phi")) {
        QVec r;
        for (const auto& c : row) r.push_back(parse_q(c.get<std::string>()));
        V.phi.push_back(std::move(r));
    }
    V.weight = j.at("weight").get<std::vector<long>>();
    for (const auto& row : j.at("fil_basis")) {
        QVec r;
        for (const auto& c : row) r.push_back(parse_q(c.get<std::string>()));
        V.fil_basis.push_back(std::move(r));
    }
    return V;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic computations: gamma functions, unit roots, "
                 "triangle groups, trees"};
    app.require_subcommand(1);

    long p = 5, prec = 12, piprec = 20, order = 20, seed = 1, threads = 1;
    std::string format = "text", data_dir = "data", out_path;
    app.add_option("--p", p, "prime");
    app.add_option("--prec", prec, "p-adic working precision")->check(CLI::PositiveNumber);
    app.add_option("--pi-prec", piprec, "precision in pi-units")->check(CLI::PositiveNumber);
    app.add_option("--order", order, "series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text | json-doc")
        ->check(CLI::IsMember({"text", "json-doc"}));
    app.add_option("--seed", seed, "seed for randomized property commands");
    app.add_option("--threads", threads, "parallelism cap (0: hardware)");
    app.add_option("--data-dir", data_dir, "directory holding the data files");
    app.add_option("--out", out_path, "write DOT/SVG payloads here instead of stdout");

    Doc doc;
    std::function<void()> run;

    // ---- gamma ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("gamma", "Morita Gamma_p at a p-integral rational");
        auto x = std::make_shared<std::string>("1/2");
        c->add_option("--x", *x, "argument (rational, denominator prime to p)");
        c->callback([&, x] {
            run = [&, x] {
                doc.in("x", *x);
                auto v = gamma_p(p, PadicScalar::from_mpq(p, parse_q(*x), prec), prec);
                doc.out_str("gamma_p", v.str());
            };
        });
    }
    // ---- gk -------------------------------------------------------------
    {
        auto* c = app.add_subcommand("gk", "Gross-Koblitz three-way check at k/(p-1)");
        auto k = std::make_shared<long>(1);
        c->add_option("--k", *k, "numerator k in [0, p-2]");
        c->callback([&, k] {
            run = [&, k] {
                doc.in("k", *k);
                auto rep = gross_koblitz_check(p, *k, piprec);
                doc.out_str("gamma_value", rep.ctx.str(rep.lhs));
                doc.out_str("gauss_sum", rep.ctx.str(rep.rhs_gauss_sum));
                doc.out_str("telescoped_sum", rep.ctx.str(rep.rhs_robert));
                doc.out("equal", rep.equal);
            };
        });
    }
    // ---- robert ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("robert", "Robert's identity G_k - G_{p-1+k} = (1-p)e_k");
        auto k = std::make_shared<long>(0);
        c->add_option("--k", *k, "index k in [0, p-2]");
        c->callback([&, k] {
            run = [&, k] {
                doc.in("k", *k);
                doc.out("holds", robert_identity_check(p, *k, piprec));
            };
        });
    }
    // ---- dwork-exp ------------------------------------------------------
    {
        auto* c = app.add_subcommand("dwork-exp", "splitting-function coefficients e_n");
        c->callback([&] {
            run = [&] {
                auto coeffs = dwork_coeffs(p, order, prec);
                doc.out("count", coeffs.count());
                std::ostringstream os;
                for (long n = 0; n < coeffs.count(); ++n)
                    os << "e_" << n << " = " << coeffs.ctx.str(coeffs.e[n]) << "\n";
                doc.block("coefficients", os.str());
            };
        });
    }
    // ---- diamond --------------------------------------------------------
    {
        auto* c = app.add_subcommand("diamond", "level-m partial sum of Diamond's LogGamma");
        auto x = std::make_shared<std::string>("1/2");
        auto m = std::make_shared<long>(3);
        c->add_option("--x", *x, "argument");
        c->add_option("--m", *m, "level");
        c->callback([&, x, m] {
            run = [&, x, m] {
                doc.in("x", *x);
                doc.in("m", *m);
                doc.out_str("G_p", diamond_Gp(p, parse_q(*x), *m, prec).str());
            };
        });
    }
    // ---- cm-product -----------------------------------------------------
    {
        auto* c = app.add_subcommand("cm-product", "Gamma_p product over a CM discriminant");
        auto d = std::make_shared<long>(4);
        c->add_option("--d", *d, "positive d with -d a fundamental discriminant");
        c->callback([&, d] {
            run = [&, d] {
                doc.in("d", *d);
                auto rows = cm_rows_load(data_dir + "/cm_discriminants.json");
                const CmRow* row = nullptr;
                for (const auto& r : rows)
                    if (r.d == *d) row = &r;
                if (!row) throw domain_error("discriminant not in the table");
                doc.out("h", row->h);
                doc.out("w", row->w);
                auto prod = cm_gamma_product(p, *row, prec);
                doc.out_str("base", prod.base.str());
                doc.out_str("exponent", q_str(prod.exponent));
            };
        });
    }
    // ---- hasse ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("hasse", "Hasse polynomial mod p and its symmetries");
        c->callback([&] {
            run = [&] {
                auto h = hasse_poly(p);
                doc.out("coefficients", h.c);
                doc.out("functional_equations", hasse_functional_equations(p));
            };
        });
    }
    // ---- ssing ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("ssing", "supersingular Legendre moduli in F_{p^2}");
        c->callback([&] {
            run = [&] {
                FFCtx F2(p, 2);
                auto roots = supersingular_roots(p, F2);
                std::vector<long> idx;
                for (const auto& r : roots) idx.push_back(F2.to_index(r));
                doc.out("count", (long)roots.size());
                doc.out("indices", idx);
            };
        });
    }
    // ---- fp -------------------------------------------------------------
    {
        auto* c = app.add_subcommand("fp", "Dwork unit-root function at a Teichmueller point");
        auto z = std::make_shared<long>(1);
        auto f = std::make_shared<long>(1);
        auto teich = std::make_shared<long>(-1);
        c->add_option("--z", *z, "integer argument (its Teichmueller disk)");
        c->add_option("--f", *f, "residue extension degree");
        c->add_option("--teich", *teich, "residue-field element index to lift instead");
        c->callback([&, z, f, teich] {
            run = [&, z, f, teich] {
                UnramCtx R(p, *f, prec);
                UnramCtx::Elem arg;
                if (*teich >= 0) {
                    doc.in("teich_index", *teich);
                    arg = R.teichmueller(R.residue_field().from_index(*teich));
                } else {
                    doc.in("z", *z);
                    arg = R.from_scalar(*z);
                }
                FpEvalOptions opt;
                opt.threads = threads;
                auto res = fp_eval(R, arg, prec, opt);
                doc.out_str("value", R.str(res.value));
                doc.out("level", res.level);
                doc.out("stabilized", res.stabilized);
                doc.out("jumped", res.jumped);
            };
        });
    }
    // ---- count ----------------------------------------------------------
    {
        auto* c = app.add_subcommand("count", "Legendre-curve point count via the unit root");
        auto n = std::make_shared<long>(1);
        auto s0 = std::make_shared<long>(2);
        auto verify = std::make_shared<bool>(false);
        c->add_option("--n", *n, "extension degree");
        c->add_option("--s0", *s0, "modulus as a field-element index");
        c->add_flag("--verify", *verify, "compare against brute force");
        c->callback([&, n, s0, verify] {
            run = [&, n, s0, verify] {
                doc.in("n", *n);
                doc.in("s0", *s0);
                FFCtx F(p, *n);
                auto s = F.from_index(*s0);
                FpEvalOptions opt;
                opt.threads = threads;
                auto rep = count_points_dwork(p, *n, F, s, opt);
                doc.out("count_dwork", rep.count);
                doc.out_str("unit_root", rep.unit_root.str());
                if (*verify) {
                    long brute = count_points_bruteforce(F, s);
                    doc.out("count_brute", brute);
                    doc.out("agree", brute == rep.count);
                }
            };
        });
    }
    // ---- gm-check -------------------------------------------------------
    {
        auto* c = app.add_subcommand("gm-check", "formal Gauss-Manin identities at z = 1/2");
        c->callback([&] {
            run = [&] {
                auto rep = legendre_gm_check(order);
                doc.out("ode_ok", rep.ode_ok);
                doc.out("det_ok", rep.det_ok);
                doc.out("wronskian_ok", rep.wronskian_ok);
                std::ostringstream os;
                for (long k = 0; k < std::min<long>(5, rep.y11.order()); ++k)
                    os << "y11[" << k << "] = " << q_str(rep.y11[k]) << "\n";
                doc.block("leading_jet", os.str());
            };
        });
    }
    // ---- wa -------------------------------------------------------------
    {
        auto* c = app.add_subcommand("wa", "weak admissibility of a filtered isocrystal");
        auto example = std::make_shared<std::string>("ordinary");
        auto file = std::make_shared<std::string>();
        c->add_option("--example", *example, "ordinary | slope0-line | irreducible");
        c->add_option("--file", *file, "JSON object {p, phi, weight, fil_basis}");
        c->callback([&, example, file] {
            run = [&, example, file] {
                FilteredIsocrystal V;
                if (!file->empty()) {
                    doc.in("file", *file);
                    V = wa_from_file(*file);
                } else {
                    doc.in("example", *example);
                    V = wa_example(*example);
                }
                auto rep = weakly_admissible(V);
                doc.out("admissible", rep.admissible);
                doc.out("t_N", rep.t_N);
                doc.out("t_H", rep.t_H);
                doc.out("irreducible_path", rep.irreducible_path);
                if (rep.has_witness) {
                    std::vector<std::vector<std::string>> w;
                    for (const auto& row : rep.witness) {
                        std::vector<std::string> r;
                        for (const auto& x : row) r.push_back(q_str(x));
                        w.push_back(std::move(r));
                    }
                    doc.out("witness", w);
                    doc.out("witness_tN", rep.witness_tN);
                    doc.out("witness_tH", rep.witness_tH);
                }
            };
        });
    }
    // ---- scheme ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("scheme", "Riemann schemes of a triangle triple");
        auto tri = std::make_shared<std::string>("2,4,6");
        c->add_option("--triple", *tri, "e0,e1,einf");
        c->callback([&, tri] {
            run = [&, tri] {
                doc.in("triple", *tri);
                auto t = parse_triple(*tri);
                auto h = triple_to_hgde(t);
                doc.out_str("a", q_str(h.a));
                doc.out_str("b", q_str(h.b));
                doc.out_str("c", q_str(h.c));
                doc.block("hypergeometric_scheme", scheme_to_text(riemann_scheme(h)));
                doc.block("uniformizing_scheme", scheme_to_text(uniformizing_scheme(t)));
            };
        });
    }
    // ---- triple ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("triple", "classification and p-adic existence");
        auto tri = std::make_shared<std::string>("2,4,6");
        c->add_option("--triple", *tri, "e0,e1,einf");
        c->callback([&, tri] {
            run = [&, tri] {
                doc.in("triple", *tri);
                auto t = parse_triple(*tri);
                auto cls = classify_triple(t);
                const char* names[] = {"spherical", "euclidean", "hyperbolic"};
                doc.out_str("class", names[(int)cls]);
                if (cls == TriangleClass::spherical) doc.out_str("group", spherical_name(t));
                auto table = takeuchi_load(data_dir + "/takeuchi.json");
                auto v = padic_existence(p, t, table);
                const char* kinds[] = {"finite", "none", "arithmetic_infinite", "unknown"};
                doc.out_str("padic_kind", kinds[(int)v.kind]);
                if (v.kind == PadicExistence::Kind::arithmetic_infinite) {
                    doc.out_str("field", v.field);
                    doc.out("disc", v.disc);
                    doc.out("padic_disc", v.padic_disc);
                }
            };
        });
    }
    // ---- takeuchi -------------------------------------------------------
    {
        auto* c = app.add_subcommand("takeuchi", "the arithmetic triangle-group table");
        auto padic = std::make_shared<long>(0);
        auto lookup = std::make_shared<std::string>();
        c->add_option("--padic", *padic, "list the triples arithmetic at this prime");
        c->add_option("--lookup", *lookup, "row of one triple e0,e1,einf");
        c->callback([&, padic, lookup] {
            run = [&, padic, lookup] {
                auto table = takeuchi_load(data_dir + "/takeuchi.json");
                doc.out_str("checksum", takeuchi_checksum(table));
                if (*padic > 0) {
                    doc.in("padic", *padic);
                    auto list = arithmetic_padic_triples(table, *padic);
                    doc.out("count", (long)list.size());
                    std::ostringstream os;
                    for (const auto& t : list)
                        os << "(" << t.e0 << "," << t.e1 << "," << t.einf << ")\n";
                    doc.block("triples", os.str());
                } else if (!lookup->empty()) {
                    doc.in("lookup", *lookup);
                    const auto* row = takeuchi_lookup(table, parse_triple(*lookup));
                    doc.out("found", row != nullptr);
                    if (row) {
                        doc.out_str("field", row->field);
                        doc.out("disc", row->disc);
                    }
                } else {
                    doc.out("rows", (long)table.rows.size());
                    long total = 0;
                    for (const auto& r : table.rows) total += (long)r.triples.size();
                    doc.out("triples", total);
                }
            };
        });
    }
    // ---- np -------------------------------------------------------------
    {
        auto* c = app.add_subcommand("np", "Newton polygon at infinity of an operator");
        auto alpha = std::make_shared<std::string>("-1/9,0,1;0;1");
        auto theta = std::make_shared<bool>(false);
        c->add_option("--alpha", *alpha, "coefficient polynomials alpha_0;alpha_1;...");
        c->add_flag("--theta", *theta, "coefficients are in theta form");
        c->callback([&, alpha, theta] {
            run = [&, alpha, theta] {
                doc.in("alpha", *alpha);
                DiffOperator L;
                L.alpha = parse_poly_list(*alpha);
                L.deriv = *theta ? DiffOperator::Deriv::theta : DiffOperator::Deriv::ddz;
                auto np = newton_polygon_infty(L);
                doc.block("polygon", polygon_to_text(np));
                if (!out_path.empty()) write_or_print(doc, "svg_path", polygon_svg_path(np), out_path);
            };
        });
    }
    // ---- radius ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("radius", "p-adic radius diagnostics of F(a,b,c)");
        auto a = std::make_shared<std::string>("1/24");
        auto b = std::make_shared<std::string>("7/24");
        auto cc = std::make_shared<std::string>("5/6");
        auto nmax = std::make_shared<long>(2187);
        c->add_option("--a", *a);
        c->add_option("--b", *b);
        c->add_option("--c", *cc);
        c->add_option("--nmax", *nmax, "window upper end");
        c->callback([&, a, b, cc, nmax] {
            run = [&, a, b, cc, nmax] {
                doc.in("a", *a);
                doc.in("b", *b);
                doc.in("c", *cc);
                doc.in("n_max", *nmax);
                auto rep = radius_report({parse_q(*a), parse_q(*b), parse_q(*cc)}, p, *nmax);
                doc.out_str("slope_estimate", q_str(rep.slope_estimate));
                doc.out("radius_at_least_one", rep.radius_at_least_one);
            };
        });
    }
    // ---- tree -----------------------------------------------------------
    {
        auto* c = app.add_subcommand("tree", "Bruhat-Tits tree vertices and balls");
        auto f = std::make_shared<long>(1);
        auto r = std::make_shared<long>(0);
        auto center = std::make_shared<std::string>("0");
        auto ball = std::make_shared<long>(-1);
        c->add_option("--f", *f, "unramified degree");
        c->add_option("--r", *r, "disk radius exponent");
        c->add_option("--center", *center, "center coordinates c0,c1,...");
        c->add_option("--ball", *ball, "emit the DOT ball of this radius");
        c->callback([&, f, r, center, ball] {
            run = [&, f, r, center, ball] {
                doc.in("f", *f);
                doc.in("r", *r);
                doc.in("center", *center);
                TreeCtx K(p, *f);
                auto cen = parse_q_list(*center);
                cen.resize(K.f(), 0);
                auto v = vertex_make(K, *r, cen);
                doc.out_str("vertex", vertex_str(K, v));
                auto nb = neighbors(K, v);
                std::vector<std::string> ns;
                for (const auto& w : nb) ns.push_back(vertex_str(K, w));
                doc.out("degree", (long)nb.size());
                doc.out("neighbors", ns);
                if (*ball >= 0) {
                    doc.in("ball", *ball);
                    write_or_print(doc, "dot", tree_ball_dot(K, v, *ball), out_path);
                }
            };
        });
    }
    // ---- pgl2 -----------------------------------------------------------
    {
        auto* c = app.add_subcommand("pgl2", "elliptic/hyperbolic classification");
        auto f = std::make_shared<long>(1);
        auto mat = std::make_shared<std::string>("1;0;0;5");
        c->add_option("--f", *f, "unramified degree");
        c->add_option("--matrix", *mat, "entries m00;m01;m10;m11, coordinates comma-separated");
        c->callback([&, f, mat] {
            run = [&, f, mat] {
                doc.in("f", *f);
                doc.in("matrix", *mat);
                TreeCtx K(p, *f);
                auto polys = parse_poly_list(*mat);
                if (polys.size() != 4) throw domain_error("matrix needs 4 entries");
                std::array<TreeCtx::KElem, 4> m;
                for (int i = 0; i < 4; ++i) {
                    polys[i].resize(K.f(), 0);
                    m[i] = polys[i];
                }
                auto cls = pgl2_classify(K, pgl2_make(K, m));
                doc.out_str("type", cls.hyperbolic ? "hyperbolic" : "elliptic");
                doc.out("translation_length", cls.translation_length);
                doc.out_str("note", cls.note);
            };
        });
    }
    // ---- schottky -------------------------------------------------------
    {
        auto* c = app.add_subcommand("schottky", "rank-three Schottky generators over Q_9");
        c->callback([&] {
            run = [&] {
                auto rep = schottky_triple_check();
                doc.out("z_invariants_ok", rep.z_invariants_ok);
                doc.out("embedding_hom_ok", rep.embedding_hom_ok);
                doc.out("gamma1_matches", rep.gamma1_matches);
                doc.out("gamma3_matches", rep.gamma3_matches);
                doc.out("gamma2_invariants_ok", rep.gamma2_invariants_ok);
                doc.out("translation_lengths", std::vector<long>(rep.lengths.begin(), rep.lengths.end()));
                doc.out("pairwise_hyperbolic", rep.pairwise_hyperbolic);
                doc.out("all", rep.all());
            };
        });
    }
    // ---- escher ---------------------------------------------------------
    {
        auto* c = app.add_subcommand("escher", "quaternion verifications for the (2,4,6) group");
        auto bound = std::make_shared<long>(50);
        c->add_option("--bound", *bound, "torsion search bound");
        c->callback([&, bound] {
            run = [&, bound] {
                doc.in("bound", *bound);
                auto rep = escher_generators_check();
                doc.out("A2_is_minus_I", rep.a2_ok);
                doc.out("B6_is_minus_I", rep.b6_ok);
                doc.out("AB4_is_minus_I", rep.ab4_ok);
                doc.out("trace_AB_is_minus_sqrt2", rep.trace_ok);
                doc.out("det_AB_is_one", rep.det_ok);
                doc.out("hurwitz_order_closed", order_closure_check(quat_b2inf(), order_hurwitz()));
                doc.out("b23_order_closed", order_closure_check(quat_b23(), order_b23_maximal()));
                auto tors = torsion_search_gamma_plus_2(*bound);
                std::vector<std::string> ts;
                for (const auto& x : tors)
                    ts.push_back(q_str(x[0]) + "," + q_str(x[1]) + "," + q_str(x[2]) + "," +
                                 q_str(x[3]));
                doc.out("torsion_candidates", ts);
            };
        });
    }
    // ---- amalgam --------------------------------------------------------
    {
        auto* c = app.add_subcommand("amalgam", "amalgam and quotient data for the p-adic group");
        c->callback([&] {
            run = [&] {
                auto d = amalgam_data(p);
                doc.out("vertex_orders", d.graph.vertex_orders);
                doc.out("edge_orders", d.graph.edge_orders);
                doc.out_str("chi", q_str(d.chi));
                doc.out_str("note", d.graph.note);
                auto q = quotient_chain();
                doc.out("order_plus", q.order_plus);
                doc.out("order_star", q.order_star);
                doc.out("genus", q.genus);
            };
        });
    }
    // ---- regen-data -----------------------------------------------------
    {
        auto* c = app.add_subcommand("regen-data", "rewrite the data files from built-in sources");
        auto dmax = std::make_shared<long>(200);
        c->add_option("--dmax", *dmax, "CM discriminant bound");
        c->callback([&, dmax] {
            run = [&, dmax] {
                doc.in("dmax", *dmax);
                takeuchi_save(data_dir + "/takeuchi.json", takeuchi_builtin());
                cm_rows_save(data_dir + "/cm_discriminants.json", cm_rows_generate(*dmax));
                doc.out_str("takeuchi", data_dir + "/takeuchi.json");
                doc.out_str("cm_discriminants", data_dir + "/cm_discriminants.json");
            };
        });
    }

    // global flags may appear after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    // `--prec` alone also sets the pi-precision for the pi-adic commands
    if (app.count("--prec") > 0 && app.count("--pi-prec") == 0) piprec = prec;

    doc.command = app.get_subcommands().front()->get_name();
    doc.prec("p", p);
    doc.prec("prec", prec);
    doc.prec("pi_prec", piprec);
    doc.prec("order", order);
    doc.in("seed", seed);

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (!is_prime_small(p)) throw domain_error("p must be prime");
        run();
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    if (format == "json-doc") {
        json j{{"command", doc.command},
               {"inputs", doc.inputs},
               {"outputs", doc.outputs},
               {"precision", doc.precision},
               {"elapsed_ms", ms}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << doc.text.str();
    }
    return 0;
}
