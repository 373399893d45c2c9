// One PASS/FAIL line per acceptance criterion. Exact comparisons throughout;
// the only tolerance is the search gap of 1e-6, compared exactly as 1/10^6.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "polarmin/body_ops.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/families.hpp"
#include "polarmin/lattice.hpp"
#include "polarmin/search.hpp"
#include "polarmin/verify.hpp"

using namespace polarmin;
using namespace polarmin::families;

namespace {

constexpr std::uint64_t kCorpusSeed = 7;
constexpr std::size_t kCorpusSize = 500;
const Rat kGapTolerance(1, 1000000);
constexpr double kSearchSecondsPerT = 120.0;

Rat R(const char* s) { return Rat::parse(s); }
Vec2 V(long x, long y) { return {Rat(x), Rat(y)}; }

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

const std::vector<VPolygon>& corpus_bodies() {
    static const std::vector<VPolygon> c = corpus::make_corpus(kCorpusSeed, kCorpusSize);
    return c;
}

const Report& find(const std::vector<Report>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.check == name) return r;
    throw std::logic_error("no report " + name);
}

std::vector<Vec2> sorted(std::vector<Vec2> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void c1(Check& c) {
    const std::pair<const char*, const char*> grid[] = {{"1", "1"}, {"1", "2"}, {"2", "3"}, {"1/2", "5"}, {"3", "7"}};
    for (auto [sv, tv] : grid) {
        const Rat s = R(sv), t = R(tv);
        const Body k = make(t_st(s, t));
        const Rat expect = Rat(2) * t * s - s * s / Rat(2);
        c.expect(area(k.polygon()) == expect, "area");
        c.expect(oracle::area(oracle::verts(k.polygon())) == expect, "oracle area");
        c.expect(successive_minima(polar(central_symmetral(k))).lambda == std::vector<Rat>{s, t}, "minima");
        const oracle::Minima m = oracle::minima_of_cs_polar(oracle::verts(k.polygon()), centroid(k.polygon()));
        c.expect(m.l1 == s && m.l2 == t, "oracle minima");
        const Report r = check_planar_main(k);
        c.expect(r.slack.is_zero() && r.equality && r.holds, "slack");
    }
}

void c2(Check& c) {
    const Body cs = central_symmetral(make(t_st(Rat(2), Rat(3))));
    const std::vector<Vec2> expect = sorted({{R("2/5"), R("1/5")}, {R("-1/5"), R("2/5")}, {R("-3/5"), R("1/5")},
                                             {R("-2/5"), R("-1/5")}, {R("1/5"), R("-2/5")}, {R("3/5"), R("-1/5")}});
    c.expect(sorted(oracle::verts(polar(cs).polygon())) == expect, "polar vertices");
    c.expect(oracle::polar_vertex_set(oracle::verts(cs.polygon())) == expect, "oracle polar vertices");
}

void c3(Check& c) {
    for (const auto& p : corpus_bodies()) {
        const auto [lo, up] = check_minkowski(Body(p));
        c.expect(lo.holds && up.holds, "corpus");
    }
    const auto [cl, cu] = check_minkowski(make(cube()));
    c.expect(cu.equality && cu.lhs == Rat(4) && cu.rhs == Rat(4), "cube upper");
    const auto [xl, xu] = check_minkowski(make(families::cross()));
    c.expect(xl.equality && xl.lhs == Rat(2) && xl.rhs == Rat(2), "cross lower");
}

void c4(Check& c) {
    const Report a = check_upper_sym(make(cube()));
    c.expect(a.equality && a.lhs == Rat(4) && a.rhs == Rat(4), "cube");
    const Report b = check_upper_centered(make(simplex_t()));
    c.expect(b.equality && b.lhs == R("9/2") && b.rhs == R("9/2"), "T_2");
    for (const auto& p : corpus_bodies()) {
        c.expect(check_upper_sym(Body(p)).holds, "corpus sym");
        c.expect(check_upper_centered(Body(p)).holds, "corpus centered");
    }
}

void c5(Check& c) {
    const std::vector<Rat> s{Rat(1), Rat(2), Rat(10), Rat(100)};
    const std::vector<Rat> vol{Rat(8), Rat(18), Rat(242), Rat(20402)};
    const auto rows = unbounded_demo(s);
    c.expect(rows.size() == 4, "rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.expect(rows[i].lambda1 == Rat(1) && rows[i].lambda2 == Rat(1), "minima");
        c.expect(rows[i].volume == vol[i], "volume");
        c.expect(rows[i].volume == Rat(2) * (s[i] + Rat(1)) * (s[i] + Rat(1)), "closed form");
        if (i > 0) c.expect(rows[i].volume > rows[i - 1].volume, "increasing");
        const auto v = oracle::verts(make(t_of_s(s[i])).polygon());
        const oracle::Minima m = oracle::minima_of_polar(v);
        c.expect(m.l1 == Rat(1) && m.l2 == Rat(1), "oracle minima");
        if (s[i] <= Rat(10)) c.expect(oracle::area(v) == vol[i], "shoelace");
    }
}

void c6(Check& c) {
    c.expect(find(conjecture_report(make(cube())), "mahler_symmetric").lhs == Rat(8), "M(C2)");
    c.expect(find(conjecture_report(make(simplex_s())), "mahler_general").lhs == R("27/4"), "M(S2)");
    const Report e = find(conjecture_report(make(t_st(Rat(1), Rat(1)))), "eggleston");
    c.expect(e.lhs == Rat(6) && e.equality, "T_11");
    corpus::Rng rng(kCorpusSeed, 1000);
    for (int i = 0; i < 20; ++i) {
        const VPolygon tri = corpus::random_triangle(rng);
        const Report r = find(conjecture_report(Body(tri)), "eggleston");
        c.expect(r.lhs == Rat(6) && r.equality, "triangle");
        // independent: area times the area of the polar of the difference body
        const auto v = oracle::verts(tri);
        const Body cs = central_symmetral(Body(tri));
        c.expect(oracle::area(v) * oracle::area(oracle::polar_vertices(oracle::verts(cs.polygon()))) == Rat(6), "oracle product");
    }
    for (const auto& p : corpus_bodies()) c.expect(find(conjecture_report(Body(p)), "eggleston").lhs >= Rat(6), "corpus");
}

void c7(Check& c) {
    for (const auto& p : corpus_bodies()) {
        const auto [a, b] = check_prop_succ(translate(Body(p), -centroid(p)));
        c.expect(a.holds && b.holds, "corpus");
    }
    const Body k = translate(make(t_st(Rat(1), Rat(1))), {Rat(0), R("1/4")});
    const MinimaCert m = successive_minima(polar(k));
    c.expect(m.lambda[0] <= R("3/4") && m.lambda[0] < Rat(1), "strict");
    const oracle::Minima o = oracle::minima_of_polar(oracle::verts(k.polygon()));
    c.expect(o.l1 == m.lambda[0], "oracle");
    c.expect(check_prop_succ(k).first.rhs == Rat(1), "cs side");
}

void c8(Check& c) {
    for (std::size_t i = 0; i < corpus_bodies().size(); ++i) {
        corpus::Rng rng(kCorpusSeed, 10000 + i);
        for (int k = 0; k < 20; ++k) c.expect(check_grunbaum(Body(corpus_bodies()[i]), corpus::random_vector(rng)).holds, "corpus");
    }
    const Report r = check_grunbaum(make(simplex_t()), V(1, 0));
    c.expect(r.lhs == R("5/2") && r.rhs == Rat(2) && r.holds, "T_2");
}

void c9(Check& c) {
    int additive = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        corpus::Rng rng(kCorpusSeed, 20000 + i);
        const VPolygon p0 = corpus::random_polygon(rng);
        const Body k(translate(p0, -centroid(p0)));
        const auto v = oracle::verts(k.polygon());
        const Vec2 x{Rat(rng.integer(-2, 2)), Rat(rng.integer(-2, 2))};
        Vec2 y{Rat(rng.integer(-2, 2)), Rat(rng.integer(-2, 2))};
        if (y.is_zero()) y = V(1, 0);
        const Body kp = polar(k);
        // the gauge of K° is the support function of K, and vice versa
        c.expect(gauge(kp, x) == support(k, x) && support(k, x) == oracle::support(v, x), "supportgauge");
        c.expect(gauge(k, x) == support(kp, x) && gauge(k, x) == oracle::gauge(v, x), "supportgauge dual");
        // cs identity
        const auto [lhs, rhs] = gauge_cs_identity(k, x);
        c.expect(lhs == rhs && lhs == (oracle::support(v, x) + oracle::support(v, -x)) / Rat(2), "cs");
        // y in lambda K° iff h_K(y) <= lambda
        const Rat lam = oracle::support(v, y);
        if (lam.sign() > 0) {
            c.expect(contains(scale(kp.polygon(), lam), y), "polarsupp at h");
            c.expect(!contains(scale(kp.polygon(), lam * R("999/1000")), y), "polarsupp below h");
            c.expect(contains(scale(kp.polygon(), lam * R("1001/1000")), y), "polarsupp above h");
        }
        // additivity in cs(K)° iff additivity in K° at (x,y) and at (-x,-y)
        const Body csp = polar(central_symmetral(k));
        const bool cs_add = gauge(csp, x + y) == gauge(csp, x) + gauge(csp, y);
        const bool k_add = gauge(kp, x + y) == gauge(kp, x) + gauge(kp, y) && gauge(kp, -x - y) == gauge(kp, -x) + gauge(kp, -y);
        c.expect(cs_add == k_add, "equalitygauge");
        if (cs_add) ++additive;
    }
    c.expect(additive > 50, "equality case exercised");
}

void c10(Check& c) {
    for (const Rat& t : {Rat(1), R("3/2"), Rat(2)}) {
        const Body q = make(q_quad(t));
        c.expect(feasible(q, t).first, "feasible");
        const Rat vol = Rat(4) / t - Rat(2) / (t * t);
        c.expect(area(q.polygon()) == vol && oracle::area(oracle::verts(q.polygon())) == vol, "volume");
        c.expect(vol > search_target(t), "exceeds target");
        const oracle::Minima m = oracle::minima_of_cs_polar(oracle::verts(q.polygon()), centroid(q.polygon()));
        c.expect(m.l1 == Rat(1) / t && m.l2 == Rat(1), "oracle minima");
    }
}

void c11(Check& c) {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 32; ++s) seeds.push_back(s);
    SearchOptions opts;
    opts.iters = 200;
    for (const Rat& t : {Rat(1), R("3/2"), Rat(2)}) {
        const auto start = std::chrono::steady_clock::now();
        const SearchResult r = multi_start(t, seeds, opts);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(secs <= kSearchSecondsPerT, "runtime");
        c.expect(r.best.has_value(), "no best");
        if (!r.best) return;
        c.expect(r.target == Rat(2) / t - Rat(1) / (Rat(2) * t * t), "target");
        for (const auto& s : r.seeds)
            if (s.best) c.expect(s.best->volume >= r.target, "below target");
        const Rat gap = r.best->volume - r.target;
        c.expect(gap <= kGapTolerance, "gap");
        c.expect(std::stod(gap.decimal(12)) <= 1e-6, "gap decimal");
        bool case2 = false;
        for (const auto& s : r.seeds)
            if (s.converged && s.best && is_case2_triangle(*s.best) && s.best->volume - r.target <= kGapTolerance) case2 = true;
        c.expect(case2, "case 2 triangle");
        std::cout << "  t=" << t << " best=" << r.best->volume << " target=" << r.target << " seconds=" << secs << "\n";
    }
}

std::string cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str();
}

void c12(Check& c) {
    const std::vector<std::string> suite{"verify-suite", "--count", "500", "--seed", "7"};
    const std::string a = cli(suite);
    c.expect(a == cli(suite), "verify-suite");
    c.expect(a.rfind("0\n", 0) == 0, "verify-suite exit");
    for (const char* t : {"1", "3/2", "2"}) {
        const std::vector<std::string> search{"search", "--t", t, "--seeds", "32", "--iters", "200", "--trace"};
        c.expect(cli(search) == cli(search), "search");
    }
}

}  // namespace

int main(int argc, char** argv) {
    // optional argument: run a single criterion
    const std::size_t only = argc > 1 ? std::stoul(argv[1]) : 0;
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"equality grid for the main planar inequality", c1},
        {"polar of the difference body of T_{2,3}", c2},
        {"Minkowski bounds on the corpus and their equality cases", c3},
        {"symmetral and centered upper bounds", c4},
        {"unbounded family T(s)", c5},
        {"Mahler products and Eggleston bound", c6},
        {"polar minima below symmetral polar minima", c7},
        {"Gruenbaum halfspace bound with constant 4/9", c8},
        {"gauge identities on 1000 random triples", c9},
        {"quadrilateral volume above the target", c10},
        {"search reaches the target with a case 2 triangle", c11},
        {"determinism of verify-suite and search", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && only != i + 1) continue;
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << ": " << (c.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
        if (!c.ok) std::cout << " (" << c.why.str() << ")";
        std::cout << std::endl;
        if (!c.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
