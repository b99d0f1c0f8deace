#include <padic/atlas.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace padic {

namespace {

TriangleTriple tri(long a, long b, long c) { return {a, b, c}; }

std::array<long, 3> key(const TriangleTriple& t) {
    std::array<long, 3> k{t.e0, t.e1, t.einf};
    std::sort(k.begin(), k.end());
    return k;
}

TakeuchiTable build_table() {
    TakeuchiTable t;
    auto row = [&](std::string field, std::vector<std::string> disc,
                   std::vector<TriangleTriple> triples) {
        t.rows.push_back({std::move(field), std::move(disc), std::move(triples)});
    };
    row("Q", {"2", "3"}, {tri(2, 4, 6), tri(2, 6, 6), tri(3, 4, 4), tri(3, 6, 6)});
    row("Q(sqrt 2)", {"v2"},
        {tri(2, 3, 8), tri(2, 4, 8), tri(2, 6, 8), tri(2, 8, 8), tri(3, 3, 4), tri(3, 8, 8),
         tri(4, 4, 4), tri(4, 6, 6), tri(4, 8, 8)});
    row("Q(sqrt 3)", {"v2"},
        {tri(2, 3, 12), tri(2, 6, 12), tri(3, 3, 6), tri(3, 4, 12), tri(3, 12, 12), tri(6, 6, 6)});
    row("Q(sqrt 3)", {"v3"}, {tri(2, 4, 12), tri(2, 12, 12), tri(4, 4, 6), tri(6, 12, 12)});
    row("Q(sqrt 5)", {"v2"},
        {tri(2, 4, 5), tri(2, 4, 10), tri(2, 5, 5), tri(2, 10, 10), tri(4, 4, 5), tri(5, 10, 10)});
    row("Q(sqrt 5)", {"v3"}, {tri(2, 5, 6), tri(3, 5, 5)});
    row("Q(sqrt 5)", {"v5"}, {tri(2, 3, 10), tri(2, 5, 10), tri(3, 3, 5), tri(5, 5, 5)});
    row("Q(sqrt 6)", {"v2"}, {tri(3, 4, 6)});
    row("Q(cos pi/7)", {},
        {tri(2, 3, 7), tri(2, 3, 14), tri(2, 4, 7), tri(2, 7, 7), tri(2, 7, 14), tri(3, 3, 7),
         tri(7, 7, 7)});
    row("Q(cos pi/9)", {},
        {tri(2, 3, 9), tri(2, 3, 18), tri(2, 9, 18), tri(3, 3, 9), tri(3, 6, 18), tri(9, 9, 9)});
    row("Q(cos pi/9)", {"v2", "v3"}, {tri(2, 4, 18), tri(2, 18, 18), tri(4, 4, 9), tri(9, 18, 18)});
    row("Q(cos pi/8)", {"v2"},
        {tri(2, 3, 16), tri(2, 8, 16), tri(3, 3, 8), tri(4, 16, 16), tri(8, 8, 8)});
    row("Q(cos pi/10)", {"v2"}, {tri(2, 5, 20), tri(5, 5, 10)});
    row("Q(cos pi/12)", {"v2"},
        {tri(2, 3, 24), tri(2, 12, 24), tri(3, 3, 12), tri(3, 8, 24), tri(6, 24, 24),
         tri(12, 12, 12)});
    row("Q(cos pi/15)", {"v3"}, {tri(2, 5, 30), tri(5, 5, 15)});
    row("Q(cos pi/15)", {"v5"},
        {tri(2, 3, 30), tri(2, 15, 30), tri(3, 3, 15), tri(3, 10, 30), tri(15, 15, 15)});
    row("Q(sqrt 2, sqrt 5)", {"v2"}, {tri(2, 5, 8), tri(4, 5, 5)});
    row("Q(cos pi/11)", {}, {tri(2, 3, 11)});
    return t;
}

bool place_over(const std::string& label, long p) {
    return label == std::to_string(p) || label == "v" + std::to_string(p);
}

void validate_table(const TakeuchiTable& t) {
    if (t.rows.size() != 18) throw domain_error("takeuchi table must have 18 rows");
    long total = 0;
    std::vector<std::array<long, 3>> seen;
    for (const auto& r : t.rows) {
        if (r.field.empty()) throw domain_error("empty field label");
        if (r.triples.empty()) throw domain_error("row without triples");
        for (size_t i = 0; i < r.triples.size(); ++i) {
            const auto& x = r.triples[i];
            if (classify_triple(x) != TriangleClass::hyperbolic)
                throw domain_error("non-hyperbolic triple in table");
            if (!(x.e0 <= x.e1 && x.e1 <= x.einf)) throw domain_error("triple not sorted");
            if (i > 0) {
                const auto& pr = r.triples[i - 1];
                if (std::array{pr.e0, pr.e1, pr.einf} >= std::array{x.e0, x.e1, x.einf})
                    throw domain_error("triples not sorted within row");
            }
            seen.push_back(key(x));
        }
        total += (long)r.triples.size();
    }
    if (total != 76) throw domain_error("takeuchi table must list 76 triples");
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw domain_error("duplicate triple across rows");
}

}  // namespace

const TakeuchiTable& takeuchi_builtin() {
    static const TakeuchiTable t = [] {
        auto tab = build_table();
        validate_table(tab);
        return tab;
    }();
    return t;
}

std::string takeuchi_canonical(const TakeuchiTable& t) {
    std::ostringstream os;
    for (const auto& r : t.rows) {
        os << r.field << "|";
        for (size_t i = 0; i < r.disc.size(); ++i) os << (i ? "." : "") << r.disc[i];
        os << "|";
        for (size_t i = 0; i < r.triples.size(); ++i)
            os << (i ? ";" : "") << r.triples[i].e0 << "," << r.triples[i].e1 << ","
               << r.triples[i].einf;
        os << "\n";
    }
    return os.str();
}

std::string takeuchi_checksum(const TakeuchiTable& t) {
    std::string s = takeuchi_canonical(t);
    unsigned long long h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void takeuchi_save(const std::string& path, const TakeuchiTable& t) {
    nlohmann::json j;
    j["format"] = "takeuchi-triangle-table";
    j["version"] = 1;
    j["checksum"] = takeuchi_checksum(t);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row;
        row["field"] = r.field;
        row["disc"] = r.disc;
        row["triples"] = nlohmann::json::array();
        for (const auto& x : r.triples) row["triples"].push_back({x.e0, x.e1, x.einf});
        j["rows"].push_back(row);
    }
    std::ofstream os(path);
    if (!os) throw domain_error("cannot write " + path);
    os << j.dump(2) << "\n";
}

TakeuchiTable takeuchi_load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw domain_error("cannot read " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw domain_error("malformed takeuchi data file: " + std::string(e.what()));
    }
    if (j.value("format", "") != "takeuchi-triangle-table")
        throw domain_error("wrong data file format tag");
    TakeuchiTable t;
    for (const auto& row : j.at("rows")) {
        TakeuchiRow r;
        r.field = row.at("field").get<std::string>();
        r.disc = row.at("disc").get<std::vector<std::string>>();
        for (const auto& x : row.at("triples")) {
            if (!x.is_array() || x.size() != 3) throw domain_error("malformed triple");
            r.triples.push_back({x[0].get<long>(), x[1].get<long>(), x[2].get<long>()});
        }
        t.rows.push_back(std::move(r));
    }
    validate_table(t);
    if (j.value("checksum", "") != takeuchi_checksum(t))
        throw domain_error("takeuchi data file checksum mismatch");
    return t;
}

const TakeuchiRow* takeuchi_lookup(const TakeuchiTable& t, const TriangleTriple& tri) {
    auto k = key(tri);
    for (const auto& r : t.rows)
        for (const auto& x : r.triples)
            if (key(x) == k) return &r;
    return nullptr;
}

std::vector<TriangleTriple> arithmetic_padic_triples(const TakeuchiTable& t, long p) {
    std::vector<TriangleTriple> out;
    for (const auto& r : t.rows) {
        bool ram = false;
        for (const auto& l : r.disc) ram |= place_over(l, p);
        if (ram) out.insert(out.end(), r.triples.begin(), r.triples.end());
    }
    return out;
}

PadicExistence padic_existence(long p, const TriangleTriple& tri, const TakeuchiTable& t) {
    if (!is_prime_small(p)) throw domain_error("p must be prime");
    PadicExistence out;
    switch (classify_triple(tri)) {
        case TriangleClass::spherical:
            out.kind = PadicExistence::Kind::finite;
            out.group_name = spherical_name(tri);
            return out;
        case TriangleClass::euclidean:
            out.kind = PadicExistence::Kind::none;
            return out;
        case TriangleClass::hyperbolic:
            break;
    }
    if (p > 5) {
        out.kind = PadicExistence::Kind::none;  // no infinite p-adic triangle group for p > 5
        return out;
    }
    const TakeuchiRow* r = takeuchi_lookup(t, tri);
    if (r) {
        bool ram = false;
        for (const auto& l : r->disc) ram |= place_over(l, p);
        if (ram) {
            out.kind = PadicExistence::Kind::arithmetic_infinite;
            out.field = r->field;
            out.disc = r->disc;
            for (const auto& l : r->disc)
                if (!place_over(l, p)) out.padic_disc.push_back(l);
            return out;
        }
    }
    out.kind = PadicExistence::Kind::unknown;  // non-arithmetic existence not classified here
    return out;
}

mpq_class orbifold_euler_char(const std::vector<long>& indices, long genus0) {
    mpq_class chi = 2 - 2 * genus0;
    for (long e : indices) {
        if (e < 1) throw domain_error("branching index must be >= 1");
        chi -= mpq_class(e - 1, e);
    }
    chi.canonicalize();
    return chi;
}

long covering_genus(const mpq_class& chi, long degree) {
    if (degree < 1) throw domain_error("degree must be positive");
    mpq_class x = chi * degree;
    x.canonicalize();
    if (x.get_den() != 1) throw domain_error("d*chi is not an integer");
    mpz_class num = x.get_num();
    if (num % 2 != 0 || num > 2) throw domain_error("no smooth cover of that degree");
    return mpz_class(1 - num / 2).get_si();
}

mpq_class graph_euler_char(const GraphOfGroups& g) {
    mpq_class chi = 0;
    for (long v : g.vertex_orders) chi += mpq_class(1, v);
    for (long e : g.edge_orders) chi -= mpq_class(1, e);
    chi.canonicalize();
    return chi;
}

AmalgamData amalgam_data(long p) {
    AmalgamData d;
    if (p == 3) {
        // D6 *_{D3} S4
        d.graph = {{12, 24}, {6}, "edge group D3"};
    } else if (p == 2) {
        d.graph = {{12, 8}, {4}, "edge group D2; the center of D6 x D4 acts on D2 as all of D2"};
    } else {
        throw domain_error("amalgam data available for p in {2, 3} only");
    }
    for (long e : d.graph.edge_orders)
        for (long v : d.graph.vertex_orders)
            if (v % e != 0) throw domain_error("edge order must divide vertex orders");
    d.chi = graph_euler_char(d.graph);
    return d;
}

QuotientChain quotient_chain() {
    QuotientChain q;
    q.order_plus = 12;
    q.order_star = 48;
    // both quotient covers land on the same genus-3 curve
    long g1 = covering_genus(orbifold_euler_char({2, 2, 3, 3}), q.order_plus);
    long g2 = covering_genus(orbifold_euler_char({2, 4, 6}), q.order_star);
    if (g1 != g2) throw domain_error("inconsistent quotient data");
    q.genus = g1;
    return q;
}

}  // namespace padic
