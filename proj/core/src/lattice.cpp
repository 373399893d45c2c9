#include "polarmin/lattice.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "polarmin/body_ops.hpp"
#include "polarmin/error.hpp"

namespace polarmin {

namespace {

struct Scored {
    Rat gauge;
    Vec2 z;
};

bool scored_less(const Scored& a, const Scored& b) {
    if (a.gauge != b.gauge) return a.gauge < b.gauge;
    return witness_order(a.z, b.z);
}

bool independent(const Vec2& a, const Vec2& b) { return !cross(a, b).is_zero(); }

long box_half_width(const Rat& bound, const Rat& extent) {
    const mpz_class f = (bound * extent).floor();
    if (!f.fits_slong_p() || f > 1000000) {
        throw Error(ErrorKind::InternalInvariantViolation, "lattice search box too large");
    }
    return f.get_si();
}

std::vector<Rat> extents_of(const VPolygon& p) {
    Rat ex;
    Rat ey;
    for (const auto& v : p.vertices()) {
        ex = max(ex, v.x.abs());
        ey = max(ey, v.y.abs());
    }
    return {ex, ey};
}

std::vector<Scored> enumerate(const VPolygon& polar_poly, const std::vector<Rat>& ext, const Rat& bound) {
    const long nx = box_half_width(bound, ext[0]);
    const long ny = box_half_width(bound, ext[1]);
    std::vector<Scored> out;
    for (long x = -nx; x <= nx; ++x) {
        for (long y = -ny; y <= ny; ++y) {
            if (x == 0 && y == 0) continue;
            Vec2 z{Rat(x), Rat(y)};
            Rat g = support(polar_poly, z);
            if (g <= bound) out.push_back({std::move(g), std::move(z)});
        }
    }
    std::sort(out.begin(), out.end(), scored_less);
    return out;
}

Vec2 unit(int i) { return i == 0 ? Vec2{Rat(1), Rat(0)} : Vec2{Rat(0), Rat(1)}; }

}  // namespace

bool witness_order(const Vec2& a, const Vec2& b) {
    const auto key = [](const Vec2& v) {
        return std::make_tuple(v.y.abs(), v.x.abs(), v.y.sign() < 0, v.x.sign() < 0);
    };
    return key(a) < key(b);
}

MinimaCert successive_minima(const Body& k) {
    const VPolygon& q = k.polar_polygon();  // throws OriginNotInterior
    const std::vector<Rat> ext = extents_of(k.polygon());

    // Bound from a small window: any independent pair gives an upper bound on lambda_2.
    Rat bound;
    {
        std::vector<Scored> small;
        for (long x = -2; x <= 2; ++x) {
            for (long y = -2; y <= 2; ++y) {
                if (x == 0 && y == 0) continue;
                Vec2 z{Rat(x), Rat(y)};
                small.push_back({support(q, z), z});
            }
        }
        std::sort(small.begin(), small.end(), scored_less);
        for (std::size_t i = 1; i < small.size(); ++i) {
            if (independent(small[0].z, small[i].z)) {
                bound = small[i].gauge;
                break;
            }
        }
    }

    for (;;) {
        const auto pts = enumerate(q, ext, bound);
        if (!pts.empty()) {
            const Scored& first = pts.front();
            for (const auto& s : pts) {
                if (independent(first.z, s.z)) {
                    return MinimaCert{{first.gauge, s.gauge}, {first.z, s.z}, bound, ext};
                }
            }
        }
        bound *= Rat(2);
    }
}

std::vector<Vec2> lattice_points_within(const Body& k, const Rat& bound) {
    const auto pts = enumerate(k.polar_polygon(), extents_of(k.polygon()), bound);
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const auto& s : pts) out.push_back(s.z);
    return out;
}

MinimaBasis minima_basis(const Body& symmetric) {
    if (!is_origin_symmetric(symmetric.polygon())) {
        throw Error(ErrorKind::NotSymmetric, "minima basis needs an origin-symmetric body");
    }
    const MinimaCert cert = successive_minima(symmetric);
    const Vec2& z1 = cert.witnesses[0];
    const auto pts = enumerate(symmetric.polar_polygon(), cert.extents, cert.lambda[1]);
    for (const auto& s : pts) {
        if (s.gauge != cert.lambda[1]) continue;
        if (cross(z1, s.z).abs() == Rat(1)) return {z1, s.z};
    }
    throw Error(ErrorKind::InternalInvariantViolation, "no unimodular pair attains both minima");
}

Normalization normalize_to_At(const Body& k) {
    const Vec2 c = centroid(k.polygon());
    const Body centered = translate(k, -c);
    if (!centered.origin_interior()) {
        throw Error(ErrorKind::OriginNotInterior, "centroid is not interior");
    }
    const Body cs_polar = polar(central_symmetral(centered));
    const MinimaBasis basis = minima_basis(cs_polar);
    const MinimaCert cert = successive_minima(cs_polar);

    // gauge of e_i in cs(UK)° equals gauge of U^T e_i in cs(K)°, so U has rows z1, z2.
    const Transform2 u({{{basis.z1.x, basis.z1.y}, {basis.z2.x, basis.z2.y}}});
    const Transform2 map = u.compose(Transform2::translation(-c));
    const Rat s = cert.lambda[1].inverse();
    const Body out = apply(Transform2::scaling(s).compose(map), k);
    return Normalization{out, cert.lambda[1] / cert.lambda[0], map, s};
}

ContactSet contact_set(const Body& k) {
    const Body cs_polar = polar(central_symmetral(k));
    const MinimaCert cert = successive_minima(cs_polar);
    if (cert.lambda[1] != Rat(1) || gauge(cs_polar, unit(0)) != cert.lambda[0] ||
        gauge(cs_polar, unit(1)) != Rat(1)) {
        throw Error(ErrorKind::NotNormalized, "body is not in A(t) position");
    }
    if (!k.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "contact set needs 0 in the interior");

    ContactSet out;
    for (const auto& z : lattice_points_within(cs_polar, Rat(1))) {
        if (gauge(cs_polar, z) == Rat(1)) out.c0.push_back(z);
    }
    for (const Vec2& e : {unit(0), -unit(0)}) {
        if (std::find(out.c0.begin(), out.c0.end(), e) == out.c0.end()) out.c0.push_back(e);
    }
    std::sort(out.c0.begin(), out.c0.end(), witness_order);
    for (const auto& z : out.c0) {
        const Vec2 p = support(k, z).inverse() * z;  // multiples of e1 project to the same point
        if (std::find(out.c.begin(), out.c.end(), p) == out.c.end()) out.c.push_back(p);
    }
    return out;
}

}  // namespace polarmin
