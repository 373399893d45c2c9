#pragma once

#include <vector>

#include "polarmin/polygon.hpp"

namespace polarmin {

/// One row <normal, x> <= offset.
struct HalfSpace {
    std::vector<Rat> normal;
    Rat offset;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Body given by a (possibly redundant) list of halfspaces in dimension `dim`.
/// In dimension 2 a `solid` polytope is checked to be bounded and
/// full-dimensional on construction; higher-dimensional rows are trusted.
class HPolytope {
public:
    HPolytope(int dim, std::vector<HalfSpace> rows, bool solid = true);

    /// Solid polytope whose boundedness is known by construction; skips the check.
    static HPolytope trusted(int dim, std::vector<HalfSpace> rows);

    int dim() const { return dim_; }
    bool solid() const { return solid_; }
    const std::vector<HalfSpace>& rows() const { return rows_; }

    friend bool operator==(const HPolytope&, const HPolytope&) = default;

private:
    struct TrustTag {};
    HPolytope(TrustTag, int dim, std::vector<HalfSpace> rows)
        : dim_(dim), rows_(std::move(rows)), solid_(true) {}

    int dim_;
    std::vector<HalfSpace> rows_;
    bool solid_;
};

/// Intersection of planar halfplanes. Throws Unbounded or Empty when the
/// intersection is unbounded or not full-dimensional.
VPolygon halfplane_intersect(const HPolytope& h);

/// Edge rows of a polygon: one irredundant row per edge, outward normals.
HPolytope to_hpolytope(const VPolygon& p);

}  // namespace polarmin
