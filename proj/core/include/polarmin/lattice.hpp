#pragma once

#include <vector>

#include "polarmin/body.hpp"

namespace polarmin {

/// Successive minima of a planar body with respect to Z², with witnesses and
/// the data that makes the enumeration complete: every integral z outside the
/// box |z_j| <= search_radius * extents[j] has gauge > search_radius >= lambda.back().
struct MinimaCert {
    std::vector<Rat> lambda;
    std::vector<Vec2> witnesses;
    Rat search_radius;
    std::vector<Rat> extents;

    friend bool operator==(const MinimaCert&, const MinimaCert&) = default;
};

/// Unimodular pair attaining both minima of a symmetric planar body.
struct MinimaBasis {
    Vec2 z1;
    Vec2 z2;
};

struct Normalization {
    Body body;
    Rat t;
    Transform2 map;  // unimodular linear part; translation moves the centroid to 0
    Rat scale;       // body = scale * map(K)
};

struct ContactSet {
    std::vector<Vec2> c0;  // integral, symmetric
    std::vector<Vec2> c;   // radial projections onto the boundary of K°
};

/// Deterministic order on equal-gauge lattice points: smaller |y|, then
/// smaller |x|, then nonnegative coordinates first.
bool witness_order(const Vec2& a, const Vec2& b);

/// Throws OriginNotInterior.
MinimaCert successive_minima(const Body& k);

/// All nonzero lattice points with gauge <= bound, ordered by gauge then
/// witness_order.
std::vector<Vec2> lattice_points_within(const Body& k, const Rat& bound);

/// Throws OriginNotInterior, NotSymmetric, or InternalInvariantViolation.
MinimaBasis minima_basis(const Body& symmetric);

/// Translates K by minus its centroid, maps a minima basis of cs(K)° onto the
/// unit vectors and rescales so that lambda_2(cs(K)°) = 1.
Normalization normalize_to_At(const Body& k);

/// Contact sets of a body in A(t) position. Throws NotNormalized, OriginNotInterior.
ContactSet contact_set(const Body& k);

}  // namespace polarmin
