#include "polarmin/verify.hpp"

#include "polarmin/body_ops.hpp"
#include "polarmin/error.hpp"
#include "polarmin/families.hpp"

namespace polarmin {

namespace {

Rat product(const MinimaCert& c) { return c.lambda[0] * c.lambda[1]; }

Report conj(Report r) {
    r.conjecture = true;
    return r;
}

Report with_note(Report r, std::string note) {
    r.note = std::move(note);
    return r;
}

}  // namespace

Rat pi_upper() { return Rat(157079633, 50000000); }

Report make_report(std::string check, Rat lhs, Relation rel, Rat rhs, bool exact) {
    Report r;
    r.check = std::move(check);
    r.slack = lhs - rhs;
    r.holds = rel == Relation::Ge ? r.slack.sign() >= 0 : r.slack.sign() <= 0;
    r.equality = exact && r.slack.is_zero();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.relation = rel;
    r.exact = exact;
    return r;
}

Analysis analyze(const Body& k) {
    const Vec2 c = centroid(k.polygon());
    Body centered = translate(k, -c);
    const Body cs = central_symmetral(k);
    const Body cs_polar = polar(cs);
    const Body k_polar = polar(centered);
    return Analysis{k,
                    centered,
                    c,
                    area(k.polygon()),
                    is_origin_symmetric(centered.polygon()),
                    successive_minima(cs),
                    successive_minima(cs_polar),
                    successive_minima(k_polar),
                    area(cs_polar.polygon()),
                    area(k_polar.polygon())};
}

namespace {

std::pair<Report, Report> minkowski(const Analysis& a) {
    const Rat inv = product(a.cs).inverse();
    return {make_report("minkowski_lower", a.volume, Relation::Ge, Rat(2) * inv),
            make_report("minkowski_upper", a.volume, Relation::Le, Rat(4) * inv)};
}

Report planar_main(const Analysis& a) {
    const Rat& l1 = a.cs_polar.lambda[0];
    const Rat& l2 = a.cs_polar.lambda[1];
    return make_report("main_planar", a.volume, Relation::Ge, Rat(2) * l1 * l2 - l1 * l1 / Rat(2));
}

Report upper_sym(const Analysis& a) {
    return make_report("upper_symmetral", a.volume, Relation::Le, Rat(4) * product(a.cs_polar));
}

Report upper_centered(const Analysis& a) {
    Report r = make_report("upper_centered", a.volume, Relation::Le, Rat(9, 2) * product(a.polar));
    if (!a.centroid.is_zero()) {
        r.note = "translated by (" + (-a.centroid.x).str() + ", " + (-a.centroid.y).str() + ")";
    }
    return r;
}

std::vector<Report> conjectures(const Analysis& a) {
    std::vector<Report> out;
    const Rat mahler = a.volume * a.polar_volume;
    const Rat& p1 = a.polar.lambda[0];
    if (a.symmetric) {
        out.push_back(conj(make_report("mahler_symmetric", mahler, Relation::Ge, Rat(8))));
        out.push_back(conj(make_report("mahler_minima", a.volume, Relation::Ge, Rat(2) * product(a.polar))));
        out.push_back(conj(make_report("mahler_minima_weak", a.volume, Relation::Ge, Rat(2) * p1 * p1)));
    }
    out.push_back(conj(make_report("mahler_general", mahler, Relation::Ge, Rat(27, 4))));
    const Rat& c1 = a.cs_polar.lambda[0];
    out.push_back(conj(make_report("makai", a.volume, Relation::Ge, Rat(3, 2) * c1 * c1)));
    out.push_back(conj(with_note(make_report("makai_product", a.volume, Relation::Ge, Rat(3, 2) * product(a.cs_polar)),
                                 "product of minima without inner exponent")));
    out.push_back(make_report("eggleston", a.volume * a.cs_polar_volume, Relation::Ge, Rat(6)));
    const Rat quarter_pi = pi_upper() / Rat(4);
    out.push_back(conj(with_note(
        make_report("kuperberg_minima", a.volume, Relation::Ge, quarter_pi * quarter_pi / Rat(2) * product(a.cs_polar), false),
        "pi replaced by the upper bound " + pi_upper().str() + "; product of minima without inner exponent")));
    out.push_back(conj(make_report("alvarez", a.volume, Relation::Ge, Rat(3, 2) * p1 * p1)));
    return out;
}

std::pair<Report, Report> prop_succ(const MinimaCert& polar, const MinimaCert& cs_polar) {
    return {make_report("polar_minima_1", polar.lambda[0], Relation::Le, cs_polar.lambda[0]),
            make_report("polar_minima_2", polar.lambda[1], Relation::Le, cs_polar.lambda[1])};
}

}  // namespace

std::pair<Report, Report> check_minkowski(const Body& k) { return minkowski(analyze(k)); }
Report check_planar_main(const Body& k) { return planar_main(analyze(k)); }
Report check_upper_sym(const Body& k) { return upper_sym(analyze(k)); }
Report check_upper_centered(const Body& k) { return upper_centered(analyze(k)); }
std::vector<Report> conjecture_report(const Body& k) { return conjectures(analyze(k)); }

std::pair<Report, Report> check_prop_succ(const Body& k) {
    if (!k.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "polar minima need 0 in the interior");
    return prop_succ(successive_minima(polar(k)), successive_minima(polar(central_symmetral(k))));
}

Report check_grunbaum(const Body& k, const Vec2& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroNormal, "halfplane normal is zero");
    const VPolygon centered = translate(k.polygon(), -centroid(k.polygon()));
    const Rat part = hull_area(clip_halfplane(centered, a, Rat(0)));
    return make_report("gruenbaum", part, Relation::Ge, Rat(4, 9) * area(centered));
}

std::vector<Report> all_checks(const Analysis& a) {
    std::vector<Report> out;
    auto [lo, hi] = minkowski(a);
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
    out.push_back(planar_main(a));
    out.push_back(upper_sym(a));
    out.push_back(upper_centered(a));
    for (auto& r : conjectures(a)) out.push_back(std::move(r));
    auto [p1, p2] = prop_succ(a.polar, a.cs_polar);
    out.push_back(std::move(p1));
    out.push_back(std::move(p2));
    return out;
}

std::vector<Report> all_checks(const Body& k) { return all_checks(analyze(k)); }

std::vector<UnboundedRow> unbounded_demo(std::span<const Rat> s_values) {
    std::vector<UnboundedRow> rows;
    for (const Rat& s : s_values) {
        const FamilySpec spec = families::t_of_s(s);
        const Body k = families::make(spec);
        const Rat vol = families::closed_form_volume(spec);
        if (vol != area(k.polygon())) {
            throw Error(ErrorKind::InternalInvariantViolation, "closed-form volume disagrees with the shoelace area");
        }
        const MinimaCert m = successive_minima(polar(k));
        if (!rows.empty() && !(rows.back().volume < vol)) {
            throw Error(ErrorKind::BadParams, "s values must be increasing");
        }
        rows.push_back({s, m.lambda[0], m.lambda[1], vol});
    }
    return rows;
}

std::vector<GridEntry> family_grid() {
    std::vector<GridEntry> g;
    const std::pair<Rat, Rat> st[] = {{1, 1}, {1, 2}, {2, 3}, {Rat(1, 2), 5}, {3, 7}};
    for (const auto& [s, t] : st) g.push_back({"T_st(" + s.str() + "," + t.str() + ")", families::t_st(s, t)});
    g.push_back({"cube", families::cube()});
    g.push_back({"cross", families::cross()});
    g.push_back({"S_2", families::simplex_s()});
    g.push_back({"T_2", families::simplex_t()});
    for (int s : {1, 2}) g.push_back({"T_of_s(" + std::to_string(s) + ")", families::t_of_s(s)});
    for (const Rat& t : {Rat(1), Rat(3, 2), Rat(2)}) {
        g.push_back({"Q_quad(" + t.str() + ")", families::q_quad(t)});
        g.push_back({"Tri_case2(" + t.str() + ")", families::tri_case2(t)});
        const Rat t1 = Rat(3, 2) / t;
        g.push_back({"Tri_case2(" + t.str() + ",skew)", families::tri_case2(t, t1, Rat(2) / t - t1)});
    }
    return g;
}

}  // namespace polarmin
