#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "polarmin/body_ops.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/error.hpp"
#include "polarmin/families.hpp"
#include "polarmin/search.hpp"
#include "polarmin/verify.hpp"

namespace polarmin::cli {

namespace {

using io::json;

int exit_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::BadParams: return Parse;
        case ErrorKind::NoFeasibleStart: return NoStart;
        default: return Geometry;
    }
}

const Vec2 kGrunbaumNormals[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {-1, 0}, {0, -1}};

json analyze(const Body& k, const io::Writer& w, bool& theorems_hold) {
    const Analysis a = polarmin::analyze(k);
    json out;
    out["body"] = w.body(k);
    w.put(out, "area", a.volume);
    out["centroid"] = w.vec(a.centroid);
    out["symmetric"] = a.symmetric;
    out["minima"] = {{"cs", w.cert(a.cs)}, {"cs_polar", w.cert(a.cs_polar)}, {"polar_centered", w.cert(a.polar)}};
    json reports = json::array();
    theorems_hold = true;
    auto add = [&](const Report& r) {
        if (!r.holds && !r.conjecture) theorems_hold = false;
        reports.push_back(w.report(r));
    };
    for (const auto& r : all_checks(a)) add(r);
    if (k.origin_interior()) {
        auto [p1, p2] = check_prop_succ(k);
        p1.check += "_as_given";
        p2.check += "_as_given";
        add(p1);
        add(p2);
    }
    for (const auto& n : kGrunbaumNormals) {
        Report r = check_grunbaum(k, n);
        r.note = "normal (" + n.x.str() + ", " + n.y.str() + ")";
        add(r);
    }
    out["reports"] = reports;
    return out;
}

int emit(const json& doc, const std::string& path, std::ostream& out, std::ostream& err) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return Ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot write " << path << "\n";
        return Parse;
    }
    f << text;
    return Ok;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json verify_suite(std::uint64_t seed, std::size_t count, const io::Writer& w, bool& violated) {
    violated = false;
    json violations = json::array();
    std::map<std::string, long> corpus_equalities;
    std::size_t checked = 0;
    auto record = [&](const Body& k, const Report& r, const std::string& label) {
        ++checked;
        if (!r.holds) {
            violated = true;
            violations.push_back({{"label", label}, {"body", w.body(k)}, {"report", w.report(r)}});
        }
    };
    for (std::size_t i = 0; i < count; ++i) {
        corpus::Rng rng(seed, i);
        const Body k(corpus::random_polygon(rng));
        const std::string label = "corpus[" + std::to_string(i) + "]";
        for (const auto& r : all_checks(k)) {
            record(k, r, label);
            if (r.equality) ++corpus_equalities[r.check];
        }
        for (int j = 0; j < 20; ++j) {
            const Report r = check_grunbaum(k, corpus::random_vector(rng));
            record(k, r, label);
            if (r.equality) ++corpus_equalities[r.check];
        }
    }
    std::map<std::string, std::vector<std::string>> grid_hits;
    for (const auto& g : family_grid()) {
        const Body k = families::make(g.spec);
        for (const auto& r : all_checks(k)) {
            record(k, r, g.label);
            if (r.equality) grid_hits[r.check].push_back(g.label);
        }
    }
    json out;
    out["seed"] = seed;
    out["count"] = count;
    out["checked"] = checked;
    out["violations"] = violations;
    out["corpus_equality_counts"] = corpus_equalities;
    out["grid_equality_hits"] = grid_hits;
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact polar bodies, successive minima and volume bounds for planar convex bodies", "polarmin"};
    app.require_subcommand(1, 1);

    std::optional<int> decimal;
    std::string output;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--decimal", decimal, "also render rationals with this many decimal digits")->check(CLI::Range(0, 200));
        sub->add_option("--output", output, "write the JSON document to this path");
    };

    std::string body_file;
    auto* an = app.add_subcommand("analyze", "minima and every inequality check for one body");
    an->add_option("file", body_file, "Body JSON file")->required();
    common(an);

    std::string fam_name;
    std::map<std::string, std::string> fam_params;
    int fam_dim = 2;
    auto* fa = app.add_subcommand("family", "emit a named body as JSON");
    fa->add_option("name", fam_name, "family name")->required();
    for (const char* p : {"s", "t", "t1", "t2"}) {
        fa->add_option_function<std::string>(std::string("--") + p, [&fam_params, p](const std::string& v) { fam_params[p] = v; },
                                             std::string("parameter ") + p);
    }
    fa->add_option("--dim", fam_dim, "dimension")->capture_default_str();
    common(fa);

    std::string t_text;
    int seeds = 32;
    int iters = 200;
    bool trace = false;
    auto* se = app.add_subcommand("search", "volume minimization over A(t)");
    se->add_option("--t", t_text, "t >= 1 as p/q")->required();
    se->add_option("--seeds", seeds, "number of seeds, run as 1..N")->capture_default_str()->check(CLI::Range(0, 100000));
    se->add_option("--iters", iters, "move budget per seed")->capture_default_str()->check(CLI::Range(0, 100000));
    se->add_flag("--trace", trace, "keep the per-seed volume trace");
    common(se);

    std::size_t count = 500;
    std::uint64_t suite_seed = 7;
    auto* vs = app.add_subcommand("verify-suite", "all checks over a seeded random corpus and the family grid");
    vs->add_option("--count", count, "corpus size")->capture_default_str()->check(CLI::Range(1, 1000000));
    vs->add_option("--seed", suite_seed, "corpus seed")->capture_default_str();
    common(vs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Parse;
    }

    const io::Writer w{decimal};
    try {
        if (*an) {
            const Body k = io::parse_body_text(read_file(body_file));
            bool ok = true;
            const json doc = analyze(k, w, ok);
            const int code = emit(doc, output, out, err);
            if (code != Ok) return code;
            if (!ok) err << "an inequality that is a theorem in the plane failed\n";
            return ok ? Ok : Violation;
        }
        if (*fa) {
            FamilySpec spec{fam_name, {}, fam_dim};
            for (const auto& [k, v] : fam_params) spec.params[k] = Rat::parse(v);
            spec = families::complete(spec);
            const Body k = families::make(spec);
            json doc = w.body(k);
            w.put(doc, "volume", families::closed_form_volume(spec));
            return emit(doc, output, out, err);
        }
        if (*se) {
            const Rat t = Rat::parse(t_text);
            if (t < Rat(1)) throw Error(ErrorKind::BadParams, "search needs t >= 1");
            std::vector<std::uint64_t> list;
            for (int i = 1; i <= seeds; ++i) list.push_back(static_cast<std::uint64_t>(i));
            SearchOptions opts;
            opts.iters = iters;
            opts.keep_trace = trace;
            const SearchResult r = multi_start(t, list, opts);
            const int code = emit(w.search(r, trace), output, out, err);
            if (code != Ok) return code;
            if (r.best->volume < r.target) return Violation;
            bool any = false;
            for (const auto& s : r.seeds) any = any || s.converged;
            if (!any) {
                err << "no seed converged within " << iters << " iterations\n";
                return Geometry;
            }
            return Ok;
        }
        if (*vs) {
            bool violated = false;
            const json doc = verify_suite(suite_seed, count, w, violated);
            const int code = emit(doc, output, out, err);
            if (code != Ok) return code;
            if (violated) err << "inequality violations found\n";
            return violated ? Violation : Ok;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_for(e);
    }
    return Parse;
}

}  // namespace polarmin::cli
