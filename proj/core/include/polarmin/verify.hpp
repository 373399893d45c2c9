#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarmin/body.hpp"
#include "polarmin/lattice.hpp"

namespace polarmin {

enum class Relation { Ge, Le };

/// Verdict for one inequality lhs (relation) rhs.
struct Report {
    std::string check;
    Rat lhs;
    Rat rhs;
    Relation relation = Relation::Ge;
    bool holds = false;
    bool equality = false;  // only set for exact checks
    Rat slack;              // lhs - rhs
    bool exact = true;
    bool conjecture = false;  // open in general dimension; informational for exit codes
    std::string note;
};

Report make_report(std::string check, Rat lhs, Relation rel, Rat rhs, bool exact = true);

/// Minima of the bodies the checks are phrased in, computed once.
struct Analysis {
    Body body;
    Body centered;  // translated by minus the centroid
    Vec2 centroid;
    Rat volume;
    bool symmetric;  // about the centroid
    MinimaCert cs;         // minima of cs(K)
    MinimaCert cs_polar;   // minima of cs(K)°
    MinimaCert polar;      // minima of (K - centroid)°
    Rat cs_polar_volume;
    Rat polar_volume;      // volume of (K - centroid)°
};

Analysis analyze(const Body& k);

std::pair<Report, Report> check_minkowski(const Body& k);
Report check_planar_main(const Body& k);
Report check_upper_sym(const Body& k);
/// Translates K so its centroid is at the origin first.
Report check_upper_centered(const Body& k);
std::vector<Report> conjecture_report(const Body& k);
/// Uses K as given; throws OriginNotInterior.
std::pair<Report, Report> check_prop_succ(const Body& k);
/// vol(K ∩ {<a,x> >= 0}) >= 4/9 vol(K) after moving the centroid to 0. Throws ZeroNormal.
Report check_grunbaum(const Body& k, const Vec2& a);

/// Every check above except Grünbaum; the polar-minima comparison uses the centered body.
std::vector<Report> all_checks(const Body& k);
std::vector<Report> all_checks(const Analysis& a);

struct UnboundedRow {
    Rat s;
    Rat lambda1;
    Rat lambda2;
    Rat volume;
};

/// Rows for T(s): minima of T(s)° computed, volume closed form checked against the shoelace area.
std::vector<UnboundedRow> unbounded_demo(std::span<const Rat> s_values);

/// Named bodies used for equality detection.
struct GridEntry {
    std::string label;
    FamilySpec spec;
};
std::vector<GridEntry> family_grid();

/// Upper bound for pi used by the approximate check.
Rat pi_upper();

}  // namespace polarmin
