#include "polarmin/hpolytope.hpp"

#include "polarmin/error.hpp"

namespace polarmin {

HPolytope::HPolytope(int dim, std::vector<HalfSpace> rows, bool solid)
    : dim_(dim), rows_(std::move(rows)), solid_(solid) {
    if (dim_ < 1) throw Error(ErrorKind::BadParams, "dimension must be positive");
    for (const auto& r : rows_) {
        if (static_cast<int>(r.normal.size()) != dim_) {
            throw Error(ErrorKind::BadParams, "row normal has wrong dimension");
        }
    }
    if (dim_ == 2 && solid_) (void)halfplane_intersect(*this);
}

HPolytope HPolytope::trusted(int dim, std::vector<HalfSpace> rows) {
    return HPolytope(TrustTag{}, dim, std::move(rows));
}

namespace {

struct Line {
    Vec2 n;
    Rat c;
};

bool is_unbounded(const std::vector<Line>& lines) {
    // The recession cone {u : <n_i,u> <= 0 for all i} is nontrivial iff one
    // of its extreme rays is perpendicular to some normal.
    for (const auto& l : lines) {
        for (const Vec2& u : {perp(l.n), -perp(l.n)}) {
            bool recedes = true;
            for (const auto& m : lines) {
                if (dot(m.n, u).sign() > 0) {
                    recedes = false;
                    break;
                }
            }
            if (recedes) return true;
        }
    }
    return false;
}

}  // namespace

VPolygon halfplane_intersect(const HPolytope& h) {
    if (h.dim() != 2) throw Error(ErrorKind::BadParams, "halfplane_intersect needs dimension 2");
    std::vector<Line> lines;
    for (const auto& r : h.rows()) {
        Vec2 n{r.normal[0], r.normal[1]};
        if (n.is_zero()) {
            if (r.offset.sign() < 0) throw Error(ErrorKind::Empty, "row 0 <= negative offset");
            continue;
        }
        lines.push_back({std::move(n), r.offset});
    }
    if (lines.empty() || is_unbounded(lines)) {
        throw Error(ErrorKind::Unbounded, "halfplane intersection is unbounded");
    }

    std::vector<Vec2> points;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Rat det = cross(lines[i].n, lines[j].n);
            if (det.is_zero()) continue;
            // Cramer's rule for n_i.x = c_i, n_j.x = c_j.
            const Vec2 p{(lines[i].c * lines[j].n.y - lines[j].c * lines[i].n.y) / det,
                         (lines[i].n.x * lines[j].c - lines[j].n.x * lines[i].c) / det};
            bool inside = true;
            for (const auto& l : lines) {
                if (dot(l.n, p) > l.c) {
                    inside = false;
                    break;
                }
            }
            if (inside) points.push_back(p);
        }
    }
    try {
        return convex_hull(points);
    } catch (const Error&) {
        throw Error(ErrorKind::Empty, "halfplane intersection is empty or lower-dimensional");
    }
}

HPolytope to_hpolytope(const VPolygon& p) {
    std::vector<HalfSpace> rows;
    const std::size_t n = p.size();
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = p[(i + 1) % n] - p[i];
        const Vec2 normal{e.y, -e.x};
        rows.push_back({{normal.x, normal.y}, dot(normal, p[i])});
    }
    return HPolytope::trusted(2, std::move(rows));
}

}  // namespace polarmin
