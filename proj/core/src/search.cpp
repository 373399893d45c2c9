#include "polarmin/search.hpp"

#include <algorithm>

#include "polarmin/body_ops.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/error.hpp"
#include "polarmin/lp.hpp"

namespace polarmin {

namespace {

const Vec2 kE1{Rat(1), Rat(0)};
const Vec2 kE2{Rat(0), Rat(1)};
constexpr int kMaxFlatMoves = 12;

// one representative of +-z
Vec2 upper(const Vec2& z) {
    if (z.y.sign() < 0 || (z.y.is_zero() && z.x.sign() < 0)) return -z;
    return z;
}

Rat width_of(std::span<const Vec2> pts, const Vec2& z) {
    Rat hi = dot(pts[0], z);
    Rat lo = hi;
    for (const auto& p : pts) {
        const Rat v = dot(p, z);
        hi = max(hi, v);
        lo = min(lo, v);
    }
    return hi - lo;
}

bool primitive(const Vec2& z) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), z.x.num().get_mpz_t(), z.y.num().get_mpz_t());
    return g == 1;
}

std::vector<Vec2> vertices_of(const VPolygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

VPolygon recenter(const VPolygon& p) { return translate(p, -centroid(p)); }

// Puts a polygon whose minima are right into A(t) position by a shear that
// maps a lambda_2 witness (m, +-1) onto e2.
std::optional<Candidate> certify(std::span<const Vec2> pts, const Rat& t) {
    if (hull_area(pts).is_zero()) return std::nullopt;
    VPolygon k = convex_hull(pts);
    const Body cs_polar = polar(central_symmetral(Body(k)));
    const MinimaCert cert = successive_minima(cs_polar);
    if (cert.lambda[0] != t.inverse() || cert.lambda[1] != Rat(1)) return std::nullopt;
    if (gauge(cs_polar, kE1) != t.inverse()) return std::nullopt;
    if (gauge(cs_polar, kE2) != Rat(1)) {
        std::optional<Vec2> w;
        for (const auto& z : lattice_points_within(cs_polar, Rat(1))) {
            if (z.y.abs() == Rat(1) && gauge(cs_polar, z) == Rat(1)) {
                w = z;
                break;
            }
        }
        if (!w) return std::nullopt;
        const Transform2 shear({{{1, 0}, {w->x, w->y}}});
        k = apply(shear, Body(k)).polygon();
    }
    Candidate c = make_candidate(recenter(k), t);
    if (!c.feasible) throw Error(ErrorKind::InternalInvariantViolation, "re-based body left A(t)");
    return c;
}

struct Constraint {
    Vec2 z;
    Rat c;
    bool eq;
};

std::vector<Constraint> constraints_for(const Candidate& c, const Vec2& witness) {
    const long nx = (c.cert.search_radius * c.cert.extents[0]).floor().get_si() + 1;
    const long ny = (c.cert.search_radius * c.cert.extents[1]).floor().get_si() + 1;
    const Vec2 w = upper(witness);
    std::vector<Constraint> out{{kE1, Rat(2) / c.t, true}};
    for (long y = 1; y <= ny; ++y) {
        for (long x = -nx; x <= nx; ++x) {
            const Vec2 z{Rat(x), Rat(y)};
            out.push_back({z, Rat(2), z == w});
        }
    }
    return out;
}

struct Path {
    std::vector<Vec2> v;
    std::vector<Vec2> d;

    std::vector<Vec2> at(const Rat& tau) const {
        std::vector<Vec2> out;
        out.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i] + tau * d[i]);
        return out;
    }
};

// Largest tau >= 0 keeping [0, tau] inside the constraint; nullopt means unbounded.
std::optional<Rat> constraint_bound(const Path& p, const Constraint& con) {
    std::optional<Rat> right;  // max over falling lines of their crossing
    std::optional<Rat> left;   // min over rising lines of their crossing
    std::optional<Rat> eq_cap;
    bool flat_ok = false;
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        for (std::size_t j = 0; j < p.v.size(); ++j) {
            if (i == j) continue;
            const Rat a = dot(p.v[i] - p.v[j], con.z);
            const Rat b = dot(p.d[i] - p.d[j], con.z);
            if (b.is_zero()) {
                if (a >= con.c) flat_ok = true;
                continue;
            }
            const Rat cross_at = (con.c - a) / b;
            if (b.sign() < 0) {
                if (!right || *right < cross_at) right = cross_at;
            } else {
                if (!left || cross_at < *left) left = cross_at;
                if (con.eq && (!eq_cap || cross_at < *eq_cap)) eq_cap = cross_at;
            }
        }
    }
    std::optional<Rat> ge;
    const bool unbounded = flat_ok || (left && (left->sign() <= 0 || (right && *left <= *right)));
    if (!unbounded) {
        if (!right || right->sign() < 0) throw Error(ErrorKind::InternalInvariantViolation, "start point violates a width constraint");
        ge = *right;
    }
    if (eq_cap && (!ge || *eq_cap < *ge)) return max(*eq_cap, Rat(0));
    return ge;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    const mpz_class n = r.num();
    const mpz_class d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rat(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

// rational roots of a + b x + c x^2
std::vector<Rat> rational_roots(const Rat& a, const Rat& b, const Rat& c) {
    if (c.is_zero()) {
        if (b.is_zero()) return {};
        return {-a / b};
    }
    const auto s = sqrt_exact(b * b - Rat(4) * a * c);
    if (!s) return {};
    return {(-b + *s) / (Rat(2) * c), (-b - *s) / (Rat(2) * c)};
}

Vec2 area_gradient(const std::vector<Vec2>& v, std::size_t i) {
    const std::size_t m = v.size();
    const Vec2& prev = v[(i + m - 1) % m];
    const Vec2& next = v[(i + 1) % m];
    return {(next.y - prev.y) / Rat(2), (prev.x - next.x) / Rat(2)};
}

MoveResult no_move(const Candidate& c) { return MoveResult{c, false, StopReason::NoImprovement, Rat(0), false}; }

Rat max_abs(const std::vector<Vec2>& d) {
    Rat m;
    for (const auto& v : d) m = max(m, max(v.x.abs(), v.y.abs()));
    return m;
}

// Exact line search along the vertex directions d.
// A flat move goes the fraction `flat` of the way to the first tight
// constraint, without increasing the volume.
MoveResult line_move(const Candidate& c, std::vector<Vec2> d, const Vec2& witness, Rat cap,
                     std::optional<Rat> flat = std::nullopt) {
    const Rat size = max_abs(d);
    if (size.is_zero()) return no_move(c);
    const Path path{vertices_of(c.body), std::move(d)};
    cap = min(cap, Rat(4) / size);

    Rat tau = cap;
    StopReason reason = StopReason::StepCap;
    for (const auto& con : constraints_for(c, witness)) {
        const auto b = constraint_bound(path, con);
        if (b && *b < tau) {
            tau = *b;
            reason = con.eq ? StopReason::WitnessConstraint : StopReason::LatticeConstraint;
        }
    }
    if (tau.sign() <= 0) return no_move(c);
    if (flat) {
        if (reason == StopReason::StepCap && *flat == Rat(1)) return no_move(c);
        const Rat part = tau * *flat;
        const auto pts = path.at(part);
        if (hull_area(pts) > c.volume) return no_move(c);
        if (auto next = certify(pts, c.t)) return MoveResult{std::move(*next), false, reason, part, true};
        return no_move(c);
    }

    std::vector<std::pair<Rat, StopReason>> steps{{tau, reason}};
    const std::size_t m = path.v.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t a = (i + m - 1) % m;
        const std::size_t b = (i + 1) % m;
        const Vec2 u0 = path.v[i] - path.v[a], u1 = path.d[i] - path.d[a];
        const Vec2 w0 = path.v[b] - path.v[a], w1 = path.d[b] - path.d[a];
        for (const Rat& r : rational_roots(cross(u0, w0), cross(u0, w1) + cross(u1, w0), cross(u1, w1))) {
            if (r.sign() > 0 && r < tau) steps.emplace_back(r, StopReason::VertexCollision);
        }
    }
    Rat slope;
    Rat curve;
    for (std::size_t i = 0; i < m; ++i) {
        slope += dot(area_gradient(path.v, i), path.d[i]);
        curve += cross(path.d[i], path.d[(i + 1) % m]) / Rat(2);
    }
    if (curve.sign() > 0 && slope.sign() < 0) {
        const Rat s = -slope / (Rat(2) * curve);
        if (s < tau) steps.emplace_back(s, StopReason::StationaryPoint);
    }

    std::optional<std::pair<Rat, StopReason>> chosen;
    Rat best_area = c.volume;
    for (const auto& [s, why] : steps) {
        const Rat a = hull_area(path.at(s));
        if (a < best_area || (chosen && a == best_area && s < chosen->first)) {
            best_area = a;
            chosen = {s, why};
        }
    }
    if (!chosen) return no_move(c);

    Rat s = chosen->first;
    StopReason why = chosen->second;
    for (int k = 0; k < 40; ++k, s /= Rat(2), why = StopReason::LatticeConstraint) {
        const auto pts = path.at(s);
        if (!(hull_area(pts) < c.volume)) continue;
        if (auto next = certify(pts, c.t)) return MoveResult{std::move(*next), true, why, s, true};
    }
    return no_move(c);
}

std::vector<Vec2> active_contacts(const Candidate& c) {
    std::vector<Vec2> out;
    for (const auto& z : contact_set(Body(c.body)).c0) {
        const Vec2 u = upper(z);
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
    return out;
}

}  // namespace

std::pair<bool, MinimaCert> feasible(const Body& k, const Rat& t) {
    const Body cs_polar = polar(central_symmetral(k));
    MinimaCert cert = successive_minima(cs_polar);
    const bool ok = t.sign() > 0 && cert.lambda[0] == t.inverse() && cert.lambda[1] == Rat(1) &&
                    gauge(cs_polar, kE1) == t.inverse() && gauge(cs_polar, kE2) == Rat(1);
    return {ok, std::move(cert)};
}

Candidate make_candidate(const VPolygon& k, const Rat& t) {
    auto [ok, cert] = feasible(Body(k), t);
    return Candidate{k, t, ok, std::move(cert), area(k)};
}

Rat search_target(const Rat& t) { return Rat(2) / t - Rat(1) / (Rat(2) * t * t); }

std::string_view to_string(StopReason r) {
    switch (r) {
        case StopReason::LatticeConstraint: return "lattice-constraint";
        case StopReason::WitnessConstraint: return "witness-constraint";
        case StopReason::VertexCollision: return "vertex-collision";
        case StopReason::StationaryPoint: return "stationary-point";
        case StopReason::StepCap: return "step-cap";
        case StopReason::NoImprovement: return "no-improvement";
    }
    return "unknown";
}

ContactStructure contact_structure(const Candidate& c) {
    ContactStructure out;
    out.c0 = contact_set(Body(c.body)).c0;
    out.per_vertex.resize(c.body.size());
    for (const auto& z : out.c0) {
        if (!primitive(z)) continue;  // same contact point as a shorter multiple
        const auto s = support_set(c.body, z);
        if (s.size() == 1) out.per_vertex[s[0]].push_back(z);
        else ++out.at_dual_vertices;
    }
    return out;
}

bool is_case2_triangle(const Candidate& c) {
    if (!c.feasible || c.body.size() != 3) return false;
    const auto cs = contact_structure(c);
    return std::all_of(cs.per_vertex.begin(), cs.per_vertex.end(), [](const auto& v) { return v.size() == 2; });
}

MoveResult edge_push(const Candidate& c, std::size_t vertex) {
    const auto cs = contact_structure(c);
    if (vertex >= c.body.size()) throw Error(ErrorKind::BadParams, "vertex index out of range");
    if (!cs.per_vertex[vertex].empty()) throw Error(ErrorKind::NoSlackEdge, "dual edge carries a contact point");
    std::vector<Vec2> d(c.body.size());
    d[vertex] = centroid(c.body) - c.body[vertex];
    return line_move(c, std::move(d), kE2, Rat(1));
}

MoveResult edge_push(const Candidate& c) {
    const auto cs = contact_structure(c);
    bool any = false;
    for (std::size_t i = 0; i < c.body.size(); ++i) {
        if (!cs.per_vertex[i].empty()) continue;
        any = true;
        std::vector<Vec2> d(c.body.size());
        d[i] = centroid(c.body) - c.body[i];
        MoveResult r = line_move(c, std::move(d), kE2, Rat(1));
        if (r.improved) return r;
    }
    if (!any) throw Error(ErrorKind::NoSlackEdge, "every dual edge carries a contact point");
    return no_move(c);
}

MoveResult edge_rotate(const Candidate& c, std::size_t vertex, RotateDirection dir) {
    if (vertex >= c.body.size()) throw Error(ErrorKind::BadParams, "vertex index out of range");
    const auto cs = contact_structure(c);
    if (cs.per_vertex[vertex].size() != 1) {
        throw Error(ErrorKind::NotRotatable, "dual edge needs exactly one contact point in its relative interior");
    }
    const Vec2 along = perp(cs.per_vertex[vertex][0]);
    const Rat slope = dot(area_gradient(vertices_of(c.body), vertex), along);
    Vec2 step = along;
    if (dir == RotateDirection::Negative || (dir == RotateDirection::Auto && slope.sign() > 0)) step = -along;
    if (dir == RotateDirection::Auto && slope.is_zero()) return no_move(c);
    std::vector<Vec2> d(c.body.size());
    d[vertex] = step;
    return line_move(c, std::move(d), kE2, Rat(4));
}

MoveResult flat_slide(const Candidate& c, std::size_t vertex, RotateDirection dir, const Rat& fraction) {
    if (vertex >= c.body.size()) throw Error(ErrorKind::BadParams, "vertex index out of range");
    const std::ptrdiff_t i = static_cast<std::ptrdiff_t>(vertex);
    Vec2 chord = c.body.vertex(i + 1) - c.body.vertex(i - 1);
    if (dir == RotateDirection::Negative) chord = -chord;
    std::vector<Vec2> d(c.body.size());
    d[vertex] = chord;
    return line_move(c, std::move(d), kE2, Rat(4), fraction);
}

MoveResult coupled_move(const Candidate& c) {
    const std::size_t m = c.body.size();
    const auto v = vertices_of(c.body);
    const auto contacts = active_contacts(c);
    const int nv = static_cast<int>(2 * (m - 1));
    auto var = [](std::size_t i, int comp) { return static_cast<std::size_t>(2 * (i - 1) + comp); };

    // <d_i - d_j, z> as a row over u = d + 1, with the constant moved to the right side
    auto pair_row = [&](std::size_t i, std::size_t j, const Vec2& z) {
        std::vector<Rat> row(static_cast<std::size_t>(nv));
        if (i != 0) { row[var(i, 0)] += z.x; row[var(i, 1)] += z.y; }
        if (j != 0) { row[var(j, 0)] -= z.x; row[var(j, 1)] -= z.y; }
        Rat shift;
        for (const auto& a : row) shift += a;
        return std::pair{row, shift};
    };

    std::optional<std::pair<Rat, std::vector<Vec2>>> best;
    Vec2 best_witness;
    for (const auto& witness : contacts) {
        if (witness.y != Rat(1)) continue;
        lp::Program p;
        p.vars = nv;
        p.cost.assign(static_cast<std::size_t>(nv), Rat(0));
        for (std::size_t i = 1; i < m; ++i) {
            const Vec2 g = area_gradient(v, i);
            p.cost[var(i, 0)] = g.x;
            p.cost[var(i, 1)] = g.y;
        }
        for (int k = 0; k < nv; ++k) {
            std::vector<Rat> row(static_cast<std::size_t>(nv));
            row[static_cast<std::size_t>(k)] = Rat(1);
            p.add(std::move(row), lp::Sense::Le, Rat(2));
        }
        for (const auto& z : contacts) {
            const auto hi = support_set(c.body, z);
            const auto lo = support_set(c.body, -z);
            if (z == kE1 || z == witness) {
                for (auto i : hi) {
                    for (auto j : lo) {
                        auto [row, shift] = pair_row(i, j, z);
                        p.add(std::move(row), lp::Sense::Le, shift);
                    }
                }
            }
            auto [row, shift] = pair_row(hi[0], lo[0], z);
            p.add(std::move(row), lp::Sense::Ge, shift);
        }
        const lp::Solution s = lp::solve(p);
        if (s.status != lp::Status::Optimal) continue;
        Rat value = s.value;
        for (const auto& cst : p.cost) value -= cst;
        if (value.sign() >= 0) continue;
        if (!best || value < best->first) {
            std::vector<Vec2> d(m);
            for (std::size_t i = 1; i < m; ++i) d[i] = {s.x[var(i, 0)] - Rat(1), s.x[var(i, 1)] - Rat(1)};
            best = {value, std::move(d)};
            best_witness = witness;
        }
    }
    if (!best) return no_move(c);
    return line_move(c, std::move(best->second), best_witness, Rat(4));
}

Candidate random_start(const Rat& t, std::uint64_t seed, int budget) {
    if (t < Rat(1)) throw Error(ErrorKind::BadParams, "search needs t >= 1");
    corpus::Rng rng(seed, 0);
    const Rat half = t.inverse();
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Vec2> pts;
        const long k = rng.integer(3, 6);
        for (long i = 0; i < k; ++i) {
            const long q = rng.integer(1, 16);
            pts.push_back({half * Rat(rng.integer(-q, q), q), Rat(rng.integer(-q, q), q)});
        }
        if (hull_area(pts).is_zero()) continue;
        const Rat sx = Rat(2) / (t * width_of(pts, kE1));
        const Rat sy = Rat(2) / width_of(pts, kE2);
        for (auto& p : pts) p = {sx * p.x, sy * p.y};
        if (auto c = certify(pts, t)) return *c;
    }
    throw Error(ErrorKind::NoFeasibleStart, "no feasible start within the attempt budget");
}

SeedResult run_seed(const Rat& t, std::uint64_t seed, const SearchOptions& opts) {
    SeedResult out;
    out.seed = seed;
    try {
        out.start = random_start(t, seed, opts.start_budget);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoFeasibleStart) throw;
        return out;
    }
    out.started = true;
    const Rat target = search_target(t);
    Candidate cur = *out.start;
    int flat_moves = 0;
    std::vector<VPolygon> visited{cur.body};
    if (opts.keep_trace) out.trace.push_back({0, cur.volume});
    for (int it = 1; it <= opts.iters; ++it) {
        std::optional<MoveResult> move;
        try {
            MoveResult r = edge_push(cur);
            if (r.improved) move = std::move(r);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoSlackEdge) throw;
        }
        if (!move) {
            const auto cs = contact_structure(cur);
            for (std::size_t i = 0; i < cur.body.size() && !move; ++i) {
                if (cs.per_vertex[i].size() != 1) continue;
                MoveResult r = edge_rotate(cur, i);
                if (r.improved) move = std::move(r);
            }
        }
        if (!move) {
            MoveResult r = coupled_move(cur);
            if (r.improved) move = std::move(r);
        }
        if (move) {
            flat_moves = 0;
        } else if (flat_moves < kMaxFlatMoves) {
            // a saddle: slide without changing the volume to a state not seen before
            // whole way first, then halfway when the far end was seen already
            for (const Rat& fraction : {Rat(1), Rat(1, 2)}) {
                for (std::size_t i = 0; i < cur.body.size() && !move; ++i) {
                    for (auto dir : {RotateDirection::Positive, RotateDirection::Negative}) {
                        MoveResult r = flat_slide(cur, i, dir, fraction);
                        if (r.moved && std::find(visited.begin(), visited.end(), r.next.body) == visited.end()) {
                            move = std::move(r);
                            ++flat_moves;
                            break;
                        }
                    }
                }
                if (move) break;
            }
        }
        if (!move) {
            out.converged = true;
            break;
        }
        if (move->next.volume < target) throw Error(ErrorKind::InternalInvariantViolation, "volume fell below the lower bound");
        cur = std::move(move->next);
        visited.push_back(cur.body);
        out.iterations = it;
        if (opts.keep_trace) out.trace.push_back({it, cur.volume});
    }
    out.best = cur;
    return out;
}

SearchResult multi_start(const Rat& t, std::span<const std::uint64_t> seeds, const SearchOptions& opts) {
    SearchResult out;
    out.t = t;
    out.target = search_target(t);
    for (auto seed : seeds) out.seeds.push_back(run_seed(t, seed, opts));
    for (const auto& s : out.seeds) {
        if (!s.best) continue;
        if (!out.best || s.best->volume < out.best->volume) {
            out.best = s.best;
            out.best_seed = s.seed;
        }
    }
    if (!out.best) throw Error(ErrorKind::NoFeasibleStart, "no seed produced a feasible start");
    return out;
}

}  // namespace polarmin
