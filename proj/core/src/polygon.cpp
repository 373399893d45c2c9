#include "polarmin/polygon.hpp"

#include <algorithm>
#include <ostream>

#include "polarmin/error.hpp"

namespace polarmin {

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x << ", " << v.y << ')';
}

namespace {

void rotate_to_smallest(std::vector<Vec2>& v) {
    const auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
}

}  // namespace

VPolygon VPolygon::from_ccw(std::vector<Vec2> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) throw Error(ErrorKind::DegenerateInput, "polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        const Vec2& c = vertices[(i + 2) % n];
        if (orientation(a, b, c) <= 0) {
            throw Error(ErrorKind::DegenerateInput, "vertices are not in strictly convex CCW position");
        }
    }
    // Strict left turns everywhere still admit a star polygon; the turning
    // number check rules it out: total angle of a convex polygon wraps once.
    std::size_t ascents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        const bool up0 = e0.y.sign() > 0 || (e0.y.is_zero() && e0.x.sign() < 0);
        const bool up1 = e1.y.sign() > 0 || (e1.y.is_zero() && e1.x.sign() < 0);
        if (!up0 && up1) ++ascents;
    }
    if (ascents != 1) throw Error(ErrorKind::DegenerateInput, "vertex list winds more than once");
    rotate_to_smallest(vertices);
    return VPolygon(std::move(vertices));
}

const Vec2& VPolygon::vertex(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

VPolygon convex_hull(std::span<const Vec2> points) {
    std::vector<Vec2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 distinct points");

    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw Error(ErrorKind::DegenerateInput, "points are collinear");
    // Lower chain starts at the smallest point, so the list is already canonical.
    return VPolygon(std::move(hull));
}

Rat area(const VPolygon& p) {
    Rat twice;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) twice += cross(p[i], p[(i + 1) % n]);
    return twice / Rat(2);
}

Vec2 centroid(const VPolygon& p) {
    Rat a2;
    Rat cx;
    Rat cy;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = p[i];
        const Vec2& v = p[(i + 1) % n];
        const Rat c = cross(u, v);
        a2 += c;
        cx += (u.x + v.x) * c;
        cy += (u.y + v.y) * c;
    }
    const Rat denom = Rat(3) * a2;
    return {cx / denom, cy / denom};
}

Vec2 vertex_average(const VPolygon& p) {
    Vec2 s;
    for (const auto& v : p.vertices()) s += v;
    const Rat n(static_cast<long>(p.size()));
    return {s.x / n, s.y / n};
}

bool contains(const VPolygon& p, const Vec2& q, Containment mode) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int o = orientation(p[i], p[(i + 1) % n], q);
        if (o < 0 || (o == 0 && mode == Containment::Open)) return false;
    }
    return true;
}

Rat support(const VPolygon& p, const Vec2& u) {
    Rat best = dot(p[0], u);
    for (std::size_t i = 1; i < p.size(); ++i) best = max(best, dot(p[i], u));
    return best;
}

std::vector<std::size_t> support_set(const VPolygon& p, const Vec2& u) {
    const Rat h = support(p, u);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (dot(p[i], u) == h) out.push_back(i);
    }
    return out;
}

Rat width(const VPolygon& p, const Vec2& u) { return support(p, u) + support(p, -u); }

VPolygon translate(const VPolygon& p, const Vec2& v) {
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const auto& q : p.vertices()) out.push_back(q + v);
    return VPolygon::from_ccw(std::move(out));
}

VPolygon scale(const VPolygon& p, const Rat& s) {
    if (s.sign() <= 0) throw Error(ErrorKind::BadParams, "scale factor must be positive");
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const auto& q : p.vertices()) out.push_back(s * q);
    return VPolygon::from_ccw(std::move(out));
}

VPolygon negate(const VPolygon& p) {
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const auto& q : p.vertices()) out.push_back(-q);
    return VPolygon::from_ccw(std::move(out));
}

bool is_origin_symmetric(const VPolygon& p) { return negate(p) == p; }

std::vector<Vec2> clip_halfplane(const VPolygon& p, const Vec2& a, const Rat& b) {
    std::vector<Vec2> out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& cur = p[i];
        const Vec2& nxt = p[(i + 1) % n];
        const Rat fc = dot(a, cur) - b;
        const Rat fn = dot(a, nxt) - b;
        if (fc.sign() >= 0) out.push_back(cur);
        if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
            const Rat s = fc / (fc - fn);
            out.push_back(cur + s * (nxt - cur));
        }
    }
    return out;
}

Rat hull_area(std::span<const Vec2> points) {
    try {
        return area(convex_hull(points));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateInput) return Rat(0);
        throw;
    }
}

}  // namespace polarmin
