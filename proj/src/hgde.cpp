#include <padic/hgde.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace padic {

mpq_class fuchs_sum(const RiemannScheme& s) {
    mpq_class acc = 0;
    for (const auto& c : s.col) acc += c.e1 + c.e2;
    return acc;
}

namespace {

std::array<long, 3> sorted_indices(const TriangleTriple& t) {
    std::array<long, 3> e{t.e0, t.e1, t.einf};
    std::sort(e.begin(), e.end());
    return e;
}

void check_triple(const TriangleTriple& t) {
    if (t.e0 < 2 || t.e1 < 2 || t.einf < 2) throw domain_error("triangle indices must be >= 2");
}

}  // namespace

TriangleClass classify_triple(const TriangleTriple& t) {
    check_triple(t);
    mpq_class s = mpq_class(1, t.e0) + mpq_class(1, t.e1) + mpq_class(1, t.einf);
    if (s > 1) return TriangleClass::spherical;
    if (s == 1) return TriangleClass::euclidean;
    return TriangleClass::hyperbolic;
}

std::string spherical_name(const TriangleTriple& t) {
    if (classify_triple(t) != TriangleClass::spherical) throw domain_error("triple is not spherical");
    auto e = sorted_indices(t);
    if (e[0] == 2 && e[1] == 2) return "dihedral";
    if (e[2] == 3) return "tetrahedral";
    if (e[2] == 4) return "octahedral";
    return "icosahedral";  // (2,3,5)
}

HgdeParams triple_to_hgde(const TriangleTriple& t) {
    check_triple(t);
    mpq_class i0(1, t.e0), i1(1, t.e1), ii(1, t.einf);
    HgdeParams h;
    h.a = (1 - i0 - i1 + ii) / 2;
    h.b = (1 - i0 - i1 - ii) / 2;
    h.c = 1 - i0;
    return h;
}

RiemannScheme riemann_scheme(const HgdeParams& h) {
    RiemannScheme s;
    s.col[0] = {"0", 0, 1 - h.c};
    s.col[1] = {"1", 0, h.c - h.a - h.b};
    s.col[2] = {"inf", h.a, h.b};
    return s;
}

RiemannScheme uniformizing_scheme(const TriangleTriple& t) {
    check_triple(t);
    mpq_class i0(1, t.e0), i1(1, t.e1), ii(1, t.einf);
    RiemannScheme s;
    s.col[0] = {"0", (1 + i0) / 2, (1 - i0) / 2};
    s.col[1] = {"1", (1 + i1) / 2, (1 - i1) / 2};
    s.col[2] = {"inf", -(1 + ii) / 2, -(1 - ii) / 2};
    return s;
}

NewtonPolygon newton_polygon_infty(const DiffOperator& L) {
    DiffOperator T = (L.deriv == DiffOperator::Deriv::theta) ? L : to_theta_form(L);
    auto deg = [](const std::vector<mpq_class>& poly) -> long {
        for (long i = (long)poly.size() - 1; i >= 0; --i)
            if (poly[i] != 0) return i;
        return -1;
    };
    long d0 = T.alpha.empty() ? -1 : deg(T.alpha[0]);
    if (d0 < 0) throw domain_error("alpha_0 must be nonzero");
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i < (long)T.alpha.size(); ++i) {
        long di = deg(T.alpha[i]);
        if (di >= 0) pts.push_back({i, d0 - di});
    }
    // upper concave chain over all points, left to right
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b when it lies on or below segment a->pt
            if ((mpq_class(b.second - a.second) * (pt.first - a.first)) <=
                (mpq_class(pt.second - a.second) * (b.first - a.first)))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.vertices = hull;
    for (size_t i = 1; i < hull.size(); ++i) {
        mpq_class sl(hull[i].second - hull[i - 1].second, hull[i].first - hull[i - 1].first);
        sl.canonicalize();
        np.slopes.push_back({sl, hull[i].first - hull[i - 1].first});
    }
    np.height = hull.back().second - hull.front().second;
    return np;
}

RadiusReport radius_report(const HgdeParams& h, long p, long n_max) {
    if (n_max < 2) throw domain_error("window too small");
    auto f = hypergeometric_series(h.a, h.b, h.c, n_max + 1);
    RadiusReport rep;
    rep.p = p;
    rep.n_max = n_max;
    rep.n_min = std::max<long>(1, n_max / 2);
    rep.slope_estimate = valuation_slope(f, p, rep.n_min, rep.n_max);
    rep.radius_estimate = std::pow((double)p, rep.slope_estimate.get_d());
    rep.radius_at_least_one = rep.slope_estimate >= 0;
    return rep;
}

std::string scheme_to_text(const RiemannScheme& s) {
    // exponents at inf follow the negated-local convention
    std::ostringstream os;
    os << "point     exponents\n";
    for (const auto& c : s.col)
        os << c.point << (c.point.size() == 1 ? "       " : "     ") << "{" << c.e1 << ", " << c.e2
           << "}\n";
    return os.str();
}

std::string polygon_to_text(const NewtonPolygon& np) {
    std::ostringstream os;
    os << "vertices:";
    for (auto& [x, y] : np.vertices) os << " (" << x << "," << y << ")";
    os << "\nslopes:";
    for (auto& [s, m] : np.slopes) os << " " << s << " (x" << m << ")";
    os << "\nirregularity: " << np.height << "\n";
    return os.str();
}

std::string polygon_svg_path(const NewtonPolygon& np, long scale) {
    std::ostringstream os;
    long ymax = 0;
    for (auto& [x, y] : np.vertices) ymax = std::max(ymax, y);
    bool first = true;
    for (auto& [x, y] : np.vertices) {
        os << (first ? "M " : "L ") << x * scale << " " << (ymax - y) * scale << " ";
        first = false;
    }
    return os.str();
}

}  // namespace padic
