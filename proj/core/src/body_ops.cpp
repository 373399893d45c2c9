#include "polarmin/body_ops.hpp"

#include "polarmin/error.hpp"

namespace polarmin {

Rat support(const Body& k, const Vec2& u) { return support(k.polygon(), u); }

Rat gauge(const Body& k, const Vec2& x) { return support(k.polar_polygon(), x); }

Body polar(const Body& k) { return Body(k.polar_polygon()); }

Body central_symmetral(const Body& k) {
    const VPolygon& p = k.polygon();
    std::vector<Vec2> diffs;
    diffs.reserve(p.size() * p.size());
    const Rat half(1, 2);
    for (const auto& a : p.vertices()) {
        for (const auto& b : p.vertices()) diffs.push_back(half * (a - b));
    }
    return Body(convex_hull(diffs));
}

Body apply(const Transform2& t, const Body& k) {
    const VPolygon& p = k.polygon();
    std::vector<Vec2> image;
    image.reserve(p.size());
    for (const auto& v : p.vertices()) image.push_back(t(v));
    return Body(convex_hull(image));
}

Body translate(const Body& k, const Vec2& v) { return Body(translate(k.polygon(), v)); }

std::pair<Rat, Rat> gauge_cs_identity(const Body& k, const Vec2& x) {
    const Body cs_polar = polar(central_symmetral(k));
    const Rat lhs = gauge(cs_polar, x);
    const Body k_polar = polar(k);
    const Rat rhs = (gauge(k_polar, x) + gauge(k_polar, -x)) / Rat(2);
    return {lhs, rhs};
}

}  // namespace polarmin
