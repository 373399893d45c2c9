#include "polarmin/families.hpp"

#include <algorithm>

#include "polarmin/error.hpp"

namespace polarmin::families {

namespace {

constexpr int kMaxDim = 12;

Rat factorial(int n) {
    Rat f(1);
    for (int i = 2; i <= n; ++i) f *= Rat(i);
    return f;
}

Rat power(const Rat& base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::vector<Rat> ones(int n, const Rat& v) { return std::vector<Rat>(static_cast<std::size_t>(n), v); }

std::vector<Rat> unit_row(int n, int i, const Rat& v) {
    std::vector<Rat> r(static_cast<std::size_t>(n));
    r[static_cast<std::size_t>(i)] = v;
    return r;
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why) {
    throw Error(ErrorKind::BadParams, spec.name + ": " + why);
}

void require_keys(const FamilySpec& spec, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : spec.params) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* key) { return k == key; }) == keys.end()) {
            bad(spec, "unknown parameter '" + k + "'");
        }
    }
    for (const char* k : keys) {
        if (!spec.params.count(k)) bad(spec, std::string("missing parameter '") + k + "'");
    }
}

void require_planar(const FamilySpec& spec) {
    if (spec.dim != 2) bad(spec, "only defined in the plane");
}

void validate_a_t(const FamilySpec& spec) {
    require_planar(spec);
    require_keys(spec, {"t", "t1", "t2"});
    const Rat& t = spec.param("t");
    const Rat& t1 = spec.param("t1");
    const Rat& t2 = spec.param("t2");
    if (t < Rat(1)) bad(spec, "needs t >= 1");
    if (t1.sign() <= 0 || t2.sign() <= 0) bad(spec, "needs t1, t2 > 0");
    if (t1 + t2 != Rat(2) / t) bad(spec, "needs t1 + t2 = 2/t");
}

std::vector<Vec2> planar_vertices(const FamilySpec& spec) {
    const std::string& n = spec.name;
    if (n == "T_st") {
        const Rat& s = spec.param("s");
        const Rat& t = spec.param("t");
        return {{-s, t - s}, {s, t}, {Rat(0), -t}};
    }
    if (n == "cube") return {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    if (n == "cross") return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    if (n == "S_n") return {{1, 0}, {0, 1}, {-1, -1}};
    if (n == "T_n") return {{1, 1}, {1, -2}, {-2, 1}};
    if (n == "T_of_s") {
        const Rat low = Rat(1) - Rat(2) * (spec.param("s") + Rat(1));
        return {{1, 1}, {Rat(1), low}, {low, Rat(1)}};
    }
    if (n == "Q_quad") {
        const Rat& t1 = spec.param("t1");
        const Rat& t2 = spec.param("t2");
        return {{t1, Rat(1) - t1}, {-t2, Rat(1)}, {-t2, t2 - Rat(1)}, {t1, Rat(-1)}};
    }
    if (n == "Tri_case2") {
        const Rat& t1 = spec.param("t1");
        const Rat& t2 = spec.param("t2");
        return {{t1, Rat(1)}, {-t2, Rat(1) - t2}, {Rat(0), Rat(-1)}};
    }
    throw Error(ErrorKind::BadParams, "unknown family '" + n + "'");
}

std::optional<HPolytope> rows_of(const FamilySpec& spec) {
    const int d = spec.dim;
    const std::string& n = spec.name;
    std::vector<HalfSpace> rows;
    if (n == "cube") {
        for (int i = 0; i < d; ++i) {
            rows.push_back({unit_row(d, i, 1), 1});
            rows.push_back({unit_row(d, i, -1), 1});
        }
    } else if (n == "cross") {
        const unsigned long count = 1UL << d;
        for (unsigned long mask = 0; mask < count; ++mask) {
            std::vector<Rat> normal;
            for (int i = 0; i < d; ++i) normal.emplace_back((mask >> i) & 1UL ? -1 : 1);
            rows.push_back({std::move(normal), 1});
        }
    } else if (n == "S_n") {
        rows.push_back({ones(d, 1), 1});
        for (int i = 0; i < d; ++i) {
            auto normal = ones(d, 1);
            normal[static_cast<std::size_t>(i)] = Rat(1) - Rat(d + 1);
            rows.push_back({std::move(normal), 1});
        }
    } else if (n == "T_n" || n == "T_of_s") {
        for (int i = 0; i < d; ++i) rows.push_back({unit_row(d, i, 1), 1});
        const Rat offset = n == "T_n" ? Rat(1) : Rat(d) * spec.param("s");
        rows.push_back({ones(d, -1), offset});
    } else {
        return std::nullopt;
    }
    return HPolytope::trusted(d, std::move(rows));
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> kNames{"T_st", "cube", "cross", "S_n", "T_n", "T_of_s", "Q_quad", "Tri_case2"};
    return kNames;
}

void validate(const FamilySpec& spec) {
    const std::string& n = spec.name;
    if (std::find(names().begin(), names().end(), n) == names().end()) {
        throw Error(ErrorKind::BadParams, "unknown family '" + n + "'");
    }
    if (spec.dim < 1 || spec.dim > kMaxDim) bad(spec, "dimension out of range");
    if (n == "T_st") {
        require_planar(spec);
        require_keys(spec, {"s", "t"});
        if (spec.param("s").sign() <= 0 || spec.param("t") < spec.param("s")) bad(spec, "needs t >= s > 0");
    } else if (n == "T_of_s") {
        require_keys(spec, {"s"});
        if (spec.param("s") < Rat(1)) bad(spec, "needs s >= 1");
    } else if (n == "Q_quad" || n == "Tri_case2") {
        validate_a_t(spec);
    } else {
        require_keys(spec, {});
    }
    if (spec.dim < 2) bad(spec, "dimension must be at least 2");
}

FamilySpec t_st(const Rat& s, const Rat& t) { return complete({"T_st", {{"s", s}, {"t", t}}, 2}); }
FamilySpec cube(int dim) { return complete({"cube", {}, dim}); }
FamilySpec cross(int dim) { return complete({"cross", {}, dim}); }
FamilySpec simplex_s(int dim) { return complete({"S_n", {}, dim}); }
FamilySpec simplex_t(int dim) { return complete({"T_n", {}, dim}); }
FamilySpec t_of_s(const Rat& s, int dim) { return complete({"T_of_s", {{"s", s}}, dim}); }

FamilySpec q_quad(const Rat& t, const Rat& t1, const Rat& t2) {
    return complete({"Q_quad", {{"t", t}, {"t1", t1}, {"t2", t2}}, 2});
}
FamilySpec q_quad(const Rat& t) { return complete({"Q_quad", {{"t", t}}, 2}); }

FamilySpec tri_case2(const Rat& t, const Rat& t1, const Rat& t2) {
    return complete({"Tri_case2", {{"t", t}, {"t1", t1}, {"t2", t2}}, 2});
}
FamilySpec tri_case2(const Rat& t) { return complete({"Tri_case2", {{"t", t}}, 2}); }

FamilySpec complete(FamilySpec spec) {
    if ((spec.name == "Q_quad" || spec.name == "Tri_case2") && spec.params.count("t")) {
        const Rat& t = spec.params.at("t");
        if (t.sign() <= 0) bad(spec, "needs t >= 1");
        const bool has1 = spec.params.count("t1") > 0;
        const bool has2 = spec.params.count("t2") > 0;
        if (!has1 && !has2) {
            spec.params["t1"] = t.inverse();
            spec.params["t2"] = t.inverse();
        } else if (has1 && !has2) {
            spec.params["t2"] = Rat(2) / t - spec.params.at("t1");
        } else if (!has1 && has2) {
            spec.params["t1"] = Rat(2) / t - spec.params.at("t2");
        }
    }
    validate(spec);
    return spec;
}

Body make(const FamilySpec& spec) {
    validate(spec);
    auto rows = rows_of(spec);
    if (spec.dim == 2) {
        const auto verts = planar_vertices(spec);
        return Body(spec, convex_hull(verts), std::move(rows));
    }
    return Body(spec, std::nullopt, std::move(rows));
}

Rat closed_form_volume(const FamilySpec& spec) {
    validate(spec);
    const int d = spec.dim;
    const std::string& n = spec.name;
    if (n == "T_st") {
        const Rat& s = spec.param("s");
        return Rat(2) * spec.param("t") * s - s * s / Rat(2);
    }
    if (n == "cube") return power(Rat(2), d);
    if (n == "cross") return power(Rat(2), d) / factorial(d);
    if (n == "S_n") return Rat(d + 1) / factorial(d);
    if (n == "T_n") return power(Rat(d + 1), d) / factorial(d);
    if (n == "T_of_s") return power(Rat(d) * (spec.param("s") + Rat(1)), d) / factorial(d);
    const Rat& t = spec.param("t");
    if (n == "Q_quad") return Rat(4) / t - Rat(2) / (t * t);
    // Tri_case2
    return Rat(2) / t - spec.param("t1") * spec.param("t2") / Rat(2);
}

ClosedFormMinima closed_form_minima(const FamilySpec& spec) {
    validate(spec);
    const std::string& n = spec.name;
    if (n == "T_st") return {MinimaOf::PolarOfSymmetral, {spec.param("s"), spec.param("t")}};
    if (n == "Q_quad" || n == "Tri_case2") {
        return {MinimaOf::PolarOfSymmetral, {spec.param("t").inverse(), Rat(1)}};
    }
    if (n == "cube" || n == "cross" || n == "S_n" || n == "T_n" || n == "T_of_s") {
        return {MinimaOf::Polar, ones(spec.dim, 1)};
    }
    throw Error(ErrorKind::NoClosedForm, "no closed-form minima for " + n);
}

}  // namespace polarmin::families
