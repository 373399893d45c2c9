#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "polarmin/body.hpp"
#include "polarmin/lattice.hpp"

namespace polarmin {

/// A polygon together with its A(t) membership verdict.
struct Candidate {
    VPolygon body;
    Rat t;
    bool feasible = false;
    MinimaCert cert;  // minima of cs(K)°
    Rat volume;
};

/// Exact membership in A(t) via the certified minima of cs(K)°.
std::pair<bool, MinimaCert> feasible(const Body& k, const Rat& t);

Candidate make_candidate(const VPolygon& k, const Rat& t);

/// 2/t - 1/(2t^2).
Rat search_target(const Rat& t);

enum class StopReason { LatticeConstraint, WitnessConstraint, VertexCollision, StationaryPoint, StepCap, NoImprovement };
std::string_view to_string(StopReason r);

struct MoveResult {
    Candidate next;
    bool improved = false;
    StopReason stop = StopReason::NoImprovement;
    Rat step;
    bool moved = false;
};

/// Contacts of a feasible candidate, split by the vertex that is their unique
/// maximizer (the dual edge carrying them in its relative interior).
struct ContactStructure {
    std::vector<Vec2> c0;
    std::vector<std::vector<Vec2>> per_vertex;
    std::size_t at_dual_vertices = 0;
};
ContactStructure contact_structure(const Candidate& c);

/// Triangle whose every dual edge carries exactly two contact points.
bool is_case2_triangle(const Candidate& c);

/// Moves one contact-free vertex toward the centroid (the dual edge outward).
/// Without an index the first improving vertex is used. Throws NoSlackEdge.
MoveResult edge_push(const Candidate& c);
MoveResult edge_push(const Candidate& c, std::size_t vertex);

enum class RotateDirection { Auto, Positive, Negative };

/// Slides a vertex with exactly one contact z along its supporting line
/// {<x,z> = h(z)}, i.e. rotates the dual edge about the contact point. Throws NotRotatable.
MoveResult edge_rotate(const Candidate& c, std::size_t vertex, RotateDirection dir = RotateDirection::Auto);

/// Slides a vertex parallel to the chord of its neighbours, which leaves the
/// volume unchanged, the given fraction of the way to the first tight
/// constraint. Used to leave saddles.
MoveResult flat_slide(const Candidate& c, std::size_t vertex, RotateDirection dir, const Rat& fraction = Rat(1));

/// Moves all vertices at once along a direction from a small exact LP that
/// keeps every active width constraint to first order.
MoveResult coupled_move(const Candidate& c);

struct TracePoint {
    int iteration;
    Rat volume;
};

struct SeedResult {
    std::uint64_t seed = 0;
    bool started = false;
    bool converged = false;
    int iterations = 0;
    std::optional<Candidate> start;
    std::optional<Candidate> best;
    std::vector<TracePoint> trace;
};

struct SearchOptions {
    int iters = 200;
    int start_budget = 1000;
    bool keep_trace = true;
};

struct SearchResult {
    Rat t;
    Rat target;
    std::optional<Candidate> best;
    std::optional<std::uint64_t> best_seed;
    std::vector<SeedResult> seeds;
};

/// Random polygon in [-1/t,1/t] x [-1,1], stretched to the exact widths and certified.
/// Throws NoFeasibleStart after `budget` attempts.
Candidate random_start(const Rat& t, std::uint64_t seed, int budget = 1000);

SeedResult run_seed(const Rat& t, std::uint64_t seed, const SearchOptions& opts = {});

/// Throws NoFeasibleStart when no seed produced a start.
SearchResult multi_start(const Rat& t, std::span<const std::uint64_t> seeds, const SearchOptions& opts = {});

}  // namespace polarmin
