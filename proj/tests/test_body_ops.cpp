#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polarmin/body_ops.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/error.hpp"
#include "polarmin/families.hpp"

using namespace polarmin;
using namespace polarmin::families;

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

VPolygon centered(const VPolygon& p) { return translate(p, -centroid(p)); }

std::vector<Vec2> sorted(std::vector<Vec2> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(BodyOps, PolarMatchesEdgeOracle) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const VPolygon p = centered(corpus::corpus_polygon(21, i));
        const Body pol = polar(Body(p));
        EXPECT_EQ(sorted(oracle::verts(pol.polygon())), oracle::polar_vertex_set(oracle::verts(p)));
        EXPECT_EQ(polar(pol).polygon(), p);
    }
}

TEST(BodyOps, PolarOfSquareIsCross) {
    const Body sq(make(families::cube()));
    EXPECT_EQ(polar(sq).polygon(), make(families::cross()).polygon());
}

TEST(BodyOps, SymmetralSupport) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        corpus::Rng rng(22, i);
        const VPolygon p = corpus::random_polygon(rng);
        const Body cs = central_symmetral(Body(p));
        EXPECT_TRUE(is_origin_symmetric(cs.polygon()));
        for (int k = 0; k < 5; ++k) {
            const Vec2 u = corpus::random_vector(rng);
            EXPECT_EQ(support(cs, u), oracle::cs_support(oracle::verts(p), u));
        }
    }
}

TEST(BodyOps, GaugeMatchesRowOracle) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        corpus::Rng rng(23, i);
        const VPolygon p = centered(corpus::random_polygon(rng));
        const Body k(p);
        for (int j = 0; j < 5; ++j) {
            const Vec2 x = corpus::random_vector(rng);
            EXPECT_EQ(gauge(k, x), oracle::gauge(oracle::verts(p), x));
            // the gauge of K° is the support function of K
            EXPECT_EQ(gauge(polar(k), x), oracle::support(oracle::verts(p), x));
        }
        EXPECT_EQ(gauge(k, V(0, 0)), Rat(0));
    }
}

TEST(BodyOps, GaugeCsIdentity) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        corpus::Rng rng(24, i);
        const VPolygon p = centered(corpus::random_polygon(rng));
        for (int j = 0; j < 5; ++j) {
            const Vec2 x = corpus::random_vector(rng);
            const auto [lhs, rhs] = gauge_cs_identity(Body(p), x);
            EXPECT_EQ(lhs, rhs);
            const auto v = oracle::verts(p);
            EXPECT_EQ(lhs, (oracle::support(v, x) + oracle::support(v, -x)) / Rat(2));
        }
    }
}

TEST(BodyOps, PolarAndGaugeNeedInteriorOrigin) {
    const Body tri(convex_hull(std::vector<Vec2>{V(0, 0), V(1, 0), V(0, 1)}));
    EXPECT_FALSE(tri.origin_interior());
    EXPECT_TRUE(throws_kind(ErrorKind::OriginNotInterior, [&] { polar(tri); }));
    EXPECT_TRUE(throws_kind(ErrorKind::OriginNotInterior, [&] { gauge(tri, V(1, 1)); }));
}

TEST(BodyOps, ApplyUnimodular) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        corpus::Rng rng(25, i);
        const VPolygon p = corpus::random_polygon(rng);
        const Transform2 t = corpus::random_unimodular(rng);
        EXPECT_TRUE(t.unimodular());
        const Body img = apply(t, Body(p));
        EXPECT_EQ(area(img.polygon()), area(p));
        std::vector<Vec2> mapped;
        for (const auto& v : p.vertices()) mapped.push_back(t(v));
        EXPECT_EQ(sorted(oracle::verts(img.polygon())), sorted(mapped));
        EXPECT_EQ(apply(t.inverse(), img).polygon(), p);
    }
    EXPECT_TRUE(throws_kind(ErrorKind::SingularTransform, [] { Transform2({{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}}); }));
}

TEST(BodyOps, TranslateAndScale) {
    const Body k(convex_hull(std::vector<Vec2>{V(0, 0), V(2, 0), V(0, 2)}));
    const Body moved = translate(k, {R("-2/3"), R("-2/3")});
    EXPECT_EQ(centroid(moved.polygon()), V(0, 0));
    EXPECT_EQ(area(scale(moved.polygon(), R("1/2"))), R("1/2"));
    EXPECT_TRUE(throws_kind(ErrorKind::BadParams, [&] { scale(k.polygon(), Rat(0)); }));
}
