#include "polarmin/body.hpp"

#include <mutex>

#include "polarmin/error.hpp"

namespace polarmin {

const Rat& FamilySpec::param(const std::string& key) const {
    const auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorKind::BadParams, name + ": missing parameter '" + key + "'");
    return it->second;
}

Transform2::Transform2() : m_{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}} {}

Transform2::Transform2(std::array<std::array<Rat, 2>, 2> matrix, Vec2 translation)
    : m_(std::move(matrix)), b_(std::move(translation)) {
    if (det().is_zero()) throw Error(ErrorKind::SingularTransform, "matrix is singular");
}

Transform2 Transform2::translation(const Vec2& v) { return Transform2({{{1, 0}, {0, 1}}}, v); }

Transform2 Transform2::scaling(const Rat& s) { return Transform2({{{s, 0}, {0, s}}}); }

Rat Transform2::det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

bool Transform2::unimodular() const {
    for (const auto& row : m_) {
        for (const auto& e : row) {
            if (!e.is_integer()) return false;
        }
    }
    return det().abs() == Rat(1);
}

Vec2 Transform2::linear(const Vec2& x) const {
    return {m_[0][0] * x.x + m_[0][1] * x.y, m_[1][0] * x.x + m_[1][1] * x.y};
}

Vec2 Transform2::transpose_linear(const Vec2& x) const {
    return {m_[0][0] * x.x + m_[1][0] * x.y, m_[0][1] * x.x + m_[1][1] * x.y};
}

Transform2 Transform2::inverse() const {
    const Rat d = det();
    std::array<std::array<Rat, 2>, 2> inv{{{m_[1][1] / d, -m_[0][1] / d}, {-m_[1][0] / d, m_[0][0] / d}}};
    Transform2 out(inv);
    out.b_ = -out.linear(b_);
    return out;
}

Transform2 Transform2::compose(const Transform2& first) const {
    std::array<std::array<Rat, 2>, 2> m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m[i][j] = m_[i][0] * first.m_[0][j] + m_[i][1] * first.m_[1][j];
    }
    return Transform2(m, linear(first.b_) + b_);
}

struct Body::PolarCache {
    std::once_flag once;
    std::optional<VPolygon> polar;
};

Body::Body(VPolygon p) : rep_(p), dim_(2), polygon_(std::move(p)), cache_(std::make_shared<PolarCache>()) {}

Body::Body(HPolytope h) : rep_(h), dim_(h.dim()), rows_(h), cache_(std::make_shared<PolarCache>()) {
    if (dim_ == 2) polygon_ = halfplane_intersect(h);
}

Body::Body(FamilySpec spec, std::optional<VPolygon> planar, std::optional<HPolytope> rows)
    : rep_(spec), dim_(spec.dim), polygon_(std::move(planar)), rows_(std::move(rows)),
      cache_(std::make_shared<PolarCache>()) {
    if (dim_ == 2 && !polygon_) throw Error(ErrorKind::BadParams, "planar family body without polygon");
}

const VPolygon& Body::polygon() const {
    if (!polygon_) throw Error(ErrorKind::BadParams, "body is not planar (dimension " + std::to_string(dim_) + ")");
    return *polygon_;
}

bool Body::origin_interior() const { return contains(polygon(), Vec2{}, Containment::Open); }

const VPolygon& Body::polar_polygon() const {
    const VPolygon& p = polygon();
    if (!origin_interior()) throw Error(ErrorKind::OriginNotInterior, "polar needs the origin in the interior");
    std::call_once(cache_->once, [&] {
        std::vector<HalfSpace> rows;
        rows.reserve(p.size());
        for (const auto& v : p.vertices()) rows.push_back({{v.x, v.y}, Rat(1)});
        cache_->polar = halfplane_intersect(HPolytope::trusted(2, std::move(rows)));
    });
    return *cache_->polar;
}

}  // namespace polarmin
