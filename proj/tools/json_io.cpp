#include "json_io.hpp"

#include "polarmin/error.hpp"
#include "polarmin/families.hpp"

namespace polarmin::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

json family_json(const FamilySpec& f) {
    json params = json::object();
    for (const auto& [k, v] : f.params) params[k] = v.str();
    return {{"name", f.name}, {"params", params}, {"dim", f.dim}};
}

}  // namespace

void Writer::put(json& obj, const std::string& key, const Rat& r) const {
    obj[key] = r.str();
    if (decimal) obj[key + "_decimal"] = r.decimal(*decimal);
}

json Writer::vec(const Vec2& v) const { return json::array({v.x.str(), v.y.str()}); }

json Writer::body(const Body& k) const {
    json out;
    if (k.planar()) {
        out["type"] = "vpoly";
        json verts = json::array();
        for (const auto& v : k.polygon().vertices()) verts.push_back(vec(v));
        out["vertices"] = verts;
    } else {
        out["type"] = "hpoly";
        out["dim"] = k.dim();
        json rows = json::array();
        for (const auto& h : k.rows()->rows()) {
            json normal = json::array();
            for (const auto& a : h.normal) normal.push_back(a.str());
            rows.push_back({{"normal", normal}, {"offset", h.offset.str()}});
        }
        out["rows"] = rows;
    }
    if (const FamilySpec* f = k.family()) out["provenance"] = family_json(*f);
    return out;
}

json Writer::cert(const MinimaCert& c) const {
    json out;
    json lambda = json::array();
    json witnesses = json::array();
    for (const auto& l : c.lambda) lambda.push_back(l.str());
    for (const auto& w : c.witnesses) witnesses.push_back(vec(w));
    out["lambda"] = lambda;
    if (decimal) {
        json dec = json::array();
        for (const auto& l : c.lambda) dec.push_back(l.decimal(*decimal));
        out["lambda_decimal"] = dec;
    }
    out["witnesses"] = witnesses;
    out["radius"] = c.search_radius.str();
    return out;
}

json Writer::report(const Report& r) const {
    json out;
    out["check"] = r.check;
    put(out, "lhs", r.lhs);
    put(out, "rhs", r.rhs);
    put(out, "slack", r.slack);
    out["relation"] = r.relation == Relation::Ge ? ">=" : "<=";
    out["holds"] = r.holds;
    out["equality"] = r.equality;
    out["exact"] = r.exact;
    if (r.conjecture) out["conjecture"] = true;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

json Writer::candidate(const Candidate& c) const {
    json out;
    json verts = json::array();
    for (const auto& v : c.body.vertices()) verts.push_back(vec(v));
    out["vertices"] = verts;
    put(out, "volume", c.volume);
    out["feasible"] = c.feasible;
    out["minima"] = cert(c.cert);
    return out;
}

json Writer::search(const SearchResult& r, bool trace) const {
    json out;
    put(out, "t", r.t);
    put(out, "target", r.target);
    if (r.best) {
        json best = candidate(*r.best);
        const Rat gap = r.best->volume - r.target;
        best["gap"] = gap.str();
        best["gap_decimal"] = gap.decimal(12);
        best["case2_triangle"] = is_case2_triangle(*r.best);
        out["best"] = best;
        out["best_seed"] = *r.best_seed;
    }
    json seeds = json::array();
    for (const auto& s : r.seeds) {
        json e;
        e["seed"] = s.seed;
        e["started"] = s.started;
        if (s.started) {
            e["converged"] = s.converged;
            e["iterations"] = s.iterations;
            put(e, "start_volume", s.start->volume);
            put(e, "volume", s.best->volume);
            e["vertices"] = candidate(*s.best)["vertices"];
            e["case2_triangle"] = is_case2_triangle(*s.best);
            if (trace) {
                json tr = json::array();
                for (const auto& p : s.trace) tr.push_back(json::array({p.iteration, p.volume.str()}));
                e["trace"] = tr;
            }
        }
        seeds.push_back(e);
    }
    out["seeds"] = seeds;
    return out;
}

Rat parse_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) fail("rational must be a string \"p/q\"");
    return Rat::parse(j.get<std::string>());
}

Vec2 parse_vec(const json& j) {
    if (!j.is_array() || j.size() != 2) fail("point must be an array of two rationals");
    return {parse_rat(j[0]), parse_rat(j[1])};
}

Body parse_body(const json& j) {
    const json& type = field(j, "type");
    if (!type.is_string()) fail("'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "vpoly") {
        const json& verts = field(j, "vertices");
        if (!verts.is_array()) fail("'vertices' must be an array");
        std::vector<Vec2> pts;
        for (const auto& v : verts) pts.push_back(parse_vec(v));
        return Body(convex_hull(pts));
    }
    if (t == "hpoly") {
        const json& dim = field(j, "dim");
        if (!dim.is_number_integer()) fail("'dim' must be an integer");
        const json& rows = field(j, "rows");
        if (!rows.is_array()) fail("'rows' must be an array");
        std::vector<HalfSpace> hs;
        for (const auto& r : rows) {
            const json& normal = field(r, "normal");
            if (!normal.is_array()) fail("'normal' must be an array");
            HalfSpace h;
            for (const auto& a : normal) h.normal.push_back(parse_rat(a));
            h.offset = parse_rat(field(r, "offset"));
            hs.push_back(std::move(h));
        }
        const int d = dim.get<int>();
        if (d != 2) fail("only planar hpoly bodies can be analyzed");
        return Body(HPolytope(d, std::move(hs)));
    }
    if (t == "family") {
        const json& name = field(j, "name");
        if (!name.is_string()) fail("'name' must be a string");
        FamilySpec spec{name.get<std::string>(), {}, 2};
        if (j.contains("params")) {
            const json& params = j.at("params");
            if (!params.is_object()) fail("'params' must be an object");
            for (const auto& [k, v] : params.items()) spec.params[k] = parse_rat(v);
        }
        if (j.contains("dim")) {
            if (!j.at("dim").is_number_integer()) fail("'dim' must be an integer");
            spec.dim = j.at("dim").get<int>();
        }
        return families::make(families::complete(spec));
    }
    fail("unknown body type '" + t + "'");
}

Body parse_body_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    return parse_body(j);
}

}  // namespace polarmin::io
