#pragma once

#include <utility>

#include "polarmin/body.hpp"

namespace polarmin {

Rat support(const Body& k, const Vec2& u);

/// Minkowski functional min{s >= 0 : x in sK}. Throws OriginNotInterior.
Rat gauge(const Body& k, const Vec2& x);

/// {y : <x,y> <= 1 for all x in K}. Throws OriginNotInterior.
Body polar(const Body& k);

/// (K - K) / 2.
Body central_symmetral(const Body& k);

/// Image T(K). Throws SingularTransform.
Body apply(const Transform2& t, const Body& k);

Body translate(const Body& k, const Vec2& v);

/// (gauge of x in cs(K)°, mean of the gauges of x and -x in K°).
std::pair<Rat, Rat> gauge_cs_identity(const Body& k, const Vec2& x);

}  // namespace polarmin
