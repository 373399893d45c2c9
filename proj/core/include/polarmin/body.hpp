#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "polarmin/hpolytope.hpp"
#include "polarmin/polygon.hpp"

namespace polarmin {

/// A named body from the family catalogue together with its parameters.
struct FamilySpec {
    std::string name;
    std::map<std::string, Rat> params;
    int dim = 2;

    const Rat& param(const std::string& key) const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Affine map x -> A x + b of the plane.
class Transform2 {
public:
    Transform2();  // identity
    Transform2(std::array<std::array<Rat, 2>, 2> matrix, Vec2 translation = {});

    static Transform2 translation(const Vec2& v);
    static Transform2 scaling(const Rat& s);

    const std::array<std::array<Rat, 2>, 2>& matrix() const { return m_; }
    const Vec2& offset() const { return b_; }

    Rat det() const;
    bool unimodular() const;
    Vec2 linear(const Vec2& x) const;
    Vec2 operator()(const Vec2& x) const { return linear(x) + b_; }
    Vec2 transpose_linear(const Vec2& x) const;
    Transform2 inverse() const;
    /// (*this) after `first`.
    Transform2 compose(const Transform2& first) const;

    friend bool operator==(const Transform2&, const Transform2&) = default;

private:
    std::array<std::array<Rat, 2>, 2> m_;
    Vec2 b_;
};

/// Convex body with provenance. Planar bodies always carry a materialized
/// polygon; the polar polygon is computed once on first use and shared by
/// copies.
class Body {
public:
    using Representation = std::variant<VPolygon, HPolytope, FamilySpec>;

    Body(VPolygon p);     // NOLINT(google-explicit-constructor)
    Body(HPolytope h);    // NOLINT(google-explicit-constructor)
    Body(FamilySpec spec, std::optional<VPolygon> planar, std::optional<HPolytope> rows = std::nullopt);

    int dim() const { return dim_; }
    bool planar() const { return polygon_.has_value(); }
    const Representation& representation() const { return rep_; }
    const std::optional<HPolytope>& rows() const { return rows_; }

    /// Throws BadParams for non-planar bodies.
    const VPolygon& polygon() const;
    const FamilySpec* family() const { return std::get_if<FamilySpec>(&rep_); }

    bool origin_interior() const;

    /// Polygon of the polar body; throws OriginNotInterior.
    const VPolygon& polar_polygon() const;

private:
    struct PolarCache;

    Representation rep_;
    int dim_ = 2;
    std::optional<VPolygon> polygon_;
    std::optional<HPolytope> rows_;
    std::shared_ptr<PolarCache> cache_;
};

}  // namespace polarmin
