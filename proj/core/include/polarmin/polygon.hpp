#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polarmin/vec2.hpp"

namespace polarmin {

/// Planar convex polygon: at least three vertices in strictly convex
/// counterclockwise position. The vertex list is stored starting at the
/// lexicographically smallest vertex, so equal polygons compare equal.
class VPolygon {
public:
    /// Validates the vertex list; throws DegenerateInput on violation.
    static VPolygon from_ccw(std::vector<Vec2> vertices);

    std::span<const Vec2> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Vec2& operator[](std::size_t i) const { return vertices_[i]; }
    const Vec2& vertex(std::ptrdiff_t i) const;  // cyclic index

    friend bool operator==(const VPolygon&, const VPolygon&) = default;

private:
    explicit VPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {}
    friend VPolygon convex_hull(std::span<const Vec2> points);

    std::vector<Vec2> vertices_;
};

/// Monotone chain hull; collinear boundary points are dropped.
/// Throws DegenerateInput if the points do not span the plane.
VPolygon convex_hull(std::span<const Vec2> points);

Rat area(const VPolygon& p);
Vec2 centroid(const VPolygon& p);
Vec2 vertex_average(const VPolygon& p);

enum class Containment { Closed, Open };
bool contains(const VPolygon& p, const Vec2& q, Containment mode = Containment::Closed);

Rat support(const VPolygon& p, const Vec2& u);

/// Indices of the vertices attaining the support value in direction u.
std::vector<std::size_t> support_set(const VPolygon& p, const Vec2& u);

/// Width h(u) + h(-u).
Rat width(const VPolygon& p, const Vec2& u);

VPolygon translate(const VPolygon& p, const Vec2& v);
VPolygon scale(const VPolygon& p, const Rat& s);
VPolygon negate(const VPolygon& p);
bool is_origin_symmetric(const VPolygon& p);

/// Vertices of p ∩ {x : <a,x> >= b}; may have fewer than three points.
std::vector<Vec2> clip_halfplane(const VPolygon& p, const Vec2& a, const Rat& b);

/// Area of an arbitrary (possibly degenerate) point set's hull; zero when
/// the points do not span the plane.
Rat hull_area(std::span<const Vec2> points);

}  // namespace polarmin
