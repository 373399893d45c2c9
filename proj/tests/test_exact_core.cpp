#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/error.hpp"
#include "polarmin/hpolytope.hpp"
#include "polarmin/polygon.hpp"

using namespace polarmin;

namespace {

Rat R(const char* s) { return Rat::parse(s); }
Vec2 V(long x, long y) { return {Rat(x), Rat(y)}; }

bool throws_kind(ErrorKind kind, auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(R("6/4").str(), "3/2");
    EXPECT_EQ(R("-10/5").str(), "-2");
    EXPECT_EQ(R("+7").str(), "7");
    EXPECT_EQ(R("0/9").str(), "0");
    EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { R("1/0"); }));
    EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { R("1.5"); }));
    EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { R("1/-2"); }));
    EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { R(""); }));
    EXPECT_TRUE(throws_kind(ErrorKind::BadParams, [] { Rat(1, 0); }));
}

TEST(Rational, Decimal) {
    EXPECT_EQ(R("1/3").decimal(4), "0.3333");
    EXPECT_EQ(R("2/3").decimal(4), "0.6667");
    EXPECT_EQ(R("-1/8").decimal(2), "-0.13");
    EXPECT_EQ(R("-1/1000").decimal(2), "0.00");
    EXPECT_EQ(R("157079633/50000000").decimal(6), "3.141593");
    EXPECT_EQ(R("5").decimal(0), "5");
}

TEST(Rational, FieldLaws) {
    corpus::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rat a = rng.rational(50, 9), b = rng.rational(50, 9), c = rng.rational(50, 9);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
        EXPECT_LE(Rat(a.floor(), 1), a);
        EXPECT_GE(Rat(a.ceil(), 1), a);
        EXPECT_LT(a - Rat(a.floor(), 1), Rat(1));
        EXPECT_EQ(Rat::parse(a.str()), a);
    }
    EXPECT_TRUE(throws_kind(ErrorKind::BadParams, [] { Rat(0).inverse(); }));
}

TEST(Polygon, HullMatchesBruteForce) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        corpus::Rng rng(3, i);
        std::vector<Vec2> pts;
        const long n = rng.integer(3, 12);
        for (long k = 0; k < n; ++k) pts.push_back({rng.rational(5, 3), rng.rational(5, 3)});
        std::vector<Vec2> expect = oracle::hull_vertex_set(pts);
        if (expect.size() < 3) {
            EXPECT_TRUE(throws_kind(ErrorKind::DegenerateInput, [&] { convex_hull(pts); }));
            continue;
        }
        const VPolygon h = convex_hull(pts);
        std::vector<Vec2> got = oracle::verts(h);
        // strictly counterclockwise
        for (std::size_t k = 0; k < got.size(); ++k)
            EXPECT_GT(oracle::ocross(got[(k + 1) % got.size()] - got[k], got[(k + 2) % got.size()] - got[(k + 1) % got.size()]).sign(), 0);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expect);
        EXPECT_EQ(area(h), oracle::area(oracle::verts(h)));
        for (const auto& p : pts) EXPECT_TRUE(contains(h, p));
    }
}

TEST(Polygon, DegenerateInput) {
    const std::vector<Vec2> line{V(0, 0), V(1, 1), V(2, 2), V(1, 1)};
    EXPECT_TRUE(throws_kind(ErrorKind::DegenerateInput, [&] { convex_hull(line); }));
    const std::vector<Vec2> point{V(1, 1), V(1, 1), V(1, 1)};
    EXPECT_TRUE(throws_kind(ErrorKind::DegenerateInput, [&] { convex_hull(point); }));
}

TEST(Polygon, CentroidOracle) {
    // centroid of a triangle is the vertex mean; decompose a polygon into a fan
    for (std::uint64_t i = 0; i < 100; ++i) {
        const VPolygon p = corpus::corpus_polygon(5, i);
        const auto v = oracle::verts(p);
        Rat total;
        Vec2 moment;
        for (std::size_t k = 1; k + 1 < v.size(); ++k) {
            const Rat a = oracle::area({v[0], v[k], v[k + 1]});
            total += a;
            moment += a * (Rat(1, 3) * (v[0] + v[k] + v[k + 1]));
        }
        EXPECT_EQ(total, area(p));
        EXPECT_EQ(centroid(p), Rat(1) / total * moment);
    }
}

TEST(Polygon, ContainsAndSupport) {
    const VPolygon sq = convex_hull(std::vector<Vec2>{V(-1, -1), V(1, -1), V(1, 1), V(-1, 1)});
    EXPECT_TRUE(contains(sq, V(1, 0)));
    EXPECT_FALSE(contains(sq, V(1, 0), Containment::Open));
    EXPECT_TRUE(contains(sq, V(0, 0), Containment::Open));
    EXPECT_FALSE(contains(sq, {R("1/1000000") + Rat(1), Rat(0)}));
    EXPECT_EQ(support(sq, V(2, 3)), Rat(5));
    EXPECT_EQ(width(sq, V(1, 1)), Rat(4));
    EXPECT_EQ(support_set(sq, V(1, 0)).size(), 2u);
    EXPECT_TRUE(is_origin_symmetric(sq));
    EXPECT_FALSE(is_origin_symmetric(translate(sq, {R("1/2"), Rat(0)})));
    for (std::uint64_t i = 0; i < 100; ++i) {
        corpus::Rng rng(8, i);
        const VPolygon p = corpus::random_polygon(rng);
        const Vec2 u = corpus::random_vector(rng);
        EXPECT_EQ(support(p, u), oracle::support(oracle::verts(p), u));
    }
}

TEST(Polygon, ClipHalfplane) {
    const VPolygon sq = convex_hull(std::vector<Vec2>{V(-1, -1), V(1, -1), V(1, 1), V(-1, 1)});
    // {x + y >= 1}
    EXPECT_EQ(hull_area(clip_halfplane(sq, V(1, 1), Rat(1))), R("1/2"));
    EXPECT_EQ(hull_area(clip_halfplane(sq, V(1, 0), Rat(0))), Rat(2));
}

TEST(HPolytope, RoundTrip) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const VPolygon p = corpus::corpus_polygon(9, i);
        const HPolytope h = to_hpolytope(p);
        EXPECT_EQ(h.rows().size(), p.size());
        EXPECT_EQ(halfplane_intersect(h), p);
    }
}

TEST(HPolytope, Errors) {
    // a strip
    const HPolytope strip = HPolytope::trusted(2, {{{Rat(1), Rat(0)}, Rat(1)}, {{Rat(-1), Rat(0)}, Rat(1)}});
    EXPECT_TRUE(throws_kind(ErrorKind::Unbounded, [&] { halfplane_intersect(strip); }));
    const HPolytope empty = HPolytope::trusted(2, {{{Rat(1), Rat(0)}, Rat(-1)}, {{Rat(-1), Rat(0)}, Rat(-1)}, {{Rat(0), Rat(1)}, Rat(1)}, {{Rat(0), Rat(-1)}, Rat(1)}});
    EXPECT_TRUE(throws_kind(ErrorKind::Empty, [&] { halfplane_intersect(empty); }));
    const HPolytope flat = HPolytope::trusted(2, {{{Rat(1), Rat(0)}, Rat(0)}, {{Rat(-1), Rat(0)}, Rat(0)}, {{Rat(0), Rat(1)}, Rat(1)}, {{Rat(0), Rat(-1)}, Rat(1)}});
    EXPECT_TRUE(throws_kind(ErrorKind::Empty, [&] { halfplane_intersect(flat); }));
    EXPECT_TRUE(throws_kind(ErrorKind::Empty, [] { HPolytope(2, {{{Rat(1), Rat(0)}, Rat(-1)}, {{Rat(-1), Rat(0)}, Rat(-1)}, {{Rat(0), Rat(1)}, Rat(1)}, {{Rat(0), Rat(-1)}, Rat(1)}}); }));
}
