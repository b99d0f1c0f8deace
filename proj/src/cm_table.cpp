#include <padic/cm_table.hpp>
#include <padic/gamma_dwork.hpp>

#include <json.hpp>

#include <fstream>
#include <numeric>

namespace padic {

int kronecker_sym(const mpz_class& a, const mpz_class& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

bool squarefree(long n) {
    for (long q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

}  // namespace

bool is_fundamental_neg_disc(long d) {
    if (d < 3) return false;
    if (d % 4 == 1 || d % 4 == 2) return false;
    if (d % 4 == 3) return squarefree(d);
    long m = d / 4;  // -d = -4m, need -m = 2 or 3 mod 4 and m squarefree
    return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
}

long class_number_forms(long d) {
    long h = 0;
    for (long a = 1; 3 * a * a <= d + 3; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++h;
        }
    }
    return h;
}

std::vector<CmRow> cm_rows_generate(long dmax) {
    std::vector<CmRow> rows;
    for (long d = 3; d <= dmax; ++d) {
        if (!is_fundamental_neg_disc(d)) continue;
        long w = d == 3 ? 6 : d == 4 ? 4 : 2;
        rows.push_back({d, class_number_forms(d), w});
    }
    return rows;
}

bool cm_row_validate(const CmRow& row) {
    mpz_class s = 0;
    for (long u = 1; u <= row.d; ++u) s += kronecker_sym(-row.d, u) * mpz_class(u);
    // 2hd/w = -sum eps(u) u
    return mpz_class(2) * row.h * row.d == mpz_class(-s) * row.w;
}

CmGammaProduct cm_gamma_product(long p, const CmRow& row, long N) {
    if (p == 2) throw domain_error("Gamma_p products need p odd");
    if (row.d % p == 0) throw domain_error("ramified prime: p divides the discriminant");
    PadicScalar base = PadicScalar::one(p, N);
    for (long u = 1; u <= row.d; ++u) {
        if (std::gcd(u, row.d) != 1) continue;
        int eps = kronecker_sym(-row.d, u);
        if (eps == 0) continue;
        long r = (p * u) % row.d;  // <p u / d> = r / d
        PadicScalar g = gamma_p(p, PadicScalar::from_mpq(p, mpq_class(r, row.d), N), N);
        base = base * (eps > 0 ? g.inv() : g);  // exponent -eps(u)
    }
    mpq_class expo(row.w, 4 * row.h);
    expo.canonicalize();
    return {base, expo};
}

std::vector<CmRow> cm_rows_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw domain_error("expected a JSON array of {d,h,w}");
    std::vector<CmRow> rows;
    for (const auto& e : j) {
        CmRow r{e.at("d").get<long>(), e.at("h").get<long>(), e.at("w").get<long>()};
        if (!is_fundamental_neg_disc(r.d) || !cm_row_validate(r))
            throw domain_error("invalid table row at d=" + std::to_string(r.d));
        rows.push_back(r);
    }
    return rows;
}

void cm_rows_save(const std::string& path, const std::vector<CmRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back({{"d", r.d}, {"h", r.h}, {"w", r.w}});
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace padic
