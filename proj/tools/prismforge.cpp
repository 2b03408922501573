#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prismforge/records.hpp"
#include "prismforge/search.hpp"
#include "prismforge/tables.hpp"
#include "prismforge/transforms.hpp"

namespace pf = prismforge;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::optional<std::vector<pf::Rat>> parse_rats(const std::string& csv) {
    std::vector<pf::Rat> out;
    for (const auto& tok : split_csv(csv)) {
        auto r = pf::Rat::parse(tok);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

unsigned default_workers() {
    if (const char* env = std::getenv("PRISMFORGE_WORKERS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return 1;
}

void print_report(const pf::PrismCandidate& cand,
                  const pf::DiagonalReport& rep) {
    std::cout << "shape: " << pf::shape_name(cand.base.kind)
              << "  h: " << cand.h.str() << "  status: "
              << pf::geometry_status_name(cand.base.geometry_status) << "\n";
    for (const auto& cond : rep.conditions)
        std::cout << "  " << cond.length_name << " = " << cond.value.str()
                  << "  " << cond.length_name << "^2 + h^2 "
                  << (cond.square ? "square" : "not square") << "\n";
    std::cout << "squares: " << rep.square_count << "/" << rep.required_count
              << "  integral: " << (rep.integral ? "yes" : "no")
              << "  perfect: " << (rep.perfect ? "yes" : "no") << "\n";
}

/// Builds a candidate from per-shape side lists:
/// general/cyclic x,y,z,w,u,v; parallelogram/kite x,y,z,w;
/// trapezium x,y,z (v derived); rhombus x,z,w.
std::optional<pf::PrismCandidate> candidate_from_cli(
    pf::ShapeKind kind, const std::vector<pf::Rat>& sides, const pf::Rat& h,
    std::string& err) {
    pf::PrismCandidate cand;
    cand.h = h;
    pf::PrismBase& b = cand.base;
    b.kind = kind;
    switch (kind) {
        case pf::ShapeKind::GENERAL:
        case pf::ShapeKind::CYCLIC:
            if (sides.size() != 6) { err = "need 6 lengths x,y,z,w,u,v"; return std::nullopt; }
            b.x = sides[0]; b.y = sides[1]; b.z = sides[2];
            b.w = sides[3]; b.u = sides[4]; b.v = sides[5];
            break;
        case pf::ShapeKind::PARALLELOGRAM:
        case pf::ShapeKind::KITE:
            if (sides.size() != 4) { err = "need 4 lengths x,y,z,w"; return std::nullopt; }
            b.x = sides[0]; b.y = sides[1]; b.z = sides[2]; b.w = sides[3];
            b.u = b.z; b.v = b.w;
            break;
        case pf::ShapeKind::TRAPEZIUM: {
            if (sides.size() != 3) { err = "need 3 lengths x,y,z"; return std::nullopt; }
            b.x = sides[0]; b.y = sides[1]; b.z = sides[2]; b.w = b.z;
            auto v = pf::rat_sqrt(b.z * b.z + b.x * b.y);
            if (!v) { err = "base diagonal v = sqrt(z^2 + xy) is irrational"; return std::nullopt; }
            b.u = *v; b.v = *v;
            break;
        }
        case pf::ShapeKind::RHOMBUS:
            if (sides.size() != 3) { err = "need 3 lengths x,z,w"; return std::nullopt; }
            b.x = sides[0]; b.y = b.x; b.z = sides[1]; b.w = sides[2];
            b.u = b.z; b.v = b.w;
            break;
    }
    return cand;
}

int cmd_verify(const std::string& shape, const std::string& sides_csv,
               const std::string& h_str) {
    auto kind = pf::shape_from_name(shape);
    if (!kind) { std::cerr << "unknown shape: " << shape << "\n"; return kExitUsage; }
    auto sides = parse_rats(sides_csv);
    auto h = pf::Rat::parse(h_str);
    if (!sides || !h || h->sign() <= 0) {
        std::cerr << "malformed lengths or height\n";
        return kExitUsage;
    }
    for (const auto& s : *sides)
        if (s.sign() <= 0) { std::cerr << "lengths must be positive\n"; return kExitUsage; }

    std::string err;
    auto cand = candidate_from_cli(*kind, *sides, *h, err);
    if (!cand) {
        if (err.rfind("need ", 0) == 0) { std::cerr << err << "\n"; return kExitUsage; }
        std::cout << err << "\n";
        return kExitNone;
    }
    auto rep = pf::classify(*cand);
    print_report(*cand, rep);
    return rep.perfect ? kExitFound : kExitNone;
}

struct SearchArgs {
    std::string shape;
    std::string strategy;
    pf::SearchBounds bounds;
    std::string out_path;
    std::string checkpoint_path;
    std::uint64_t checkpoint_every = 10000;
    bool resume = false;
    unsigned parts = 0;  // 0 = workers
    unsigned workers = default_workers();
};

std::optional<pf::Sweep> sweep_for(const SearchArgs& a, std::string& err) {
    const pf::SearchBounds& b = a.bounds;
    if (a.shape == "trapezium") return pf::trapezium_sweep(b);
    if (a.shape == "general") return pf::general_sweep(b);
    if (a.shape == "cyclic") return pf::cyclic_sweep(b);
    if (a.shape == "parallelogram") return pf::parallelogram_sweep(b);
    if (a.shape == "special-parallelogram")
        return pf::special_parallelogram_sweep(b);
    if (a.shape == "kite") {
        auto s = pf::kite_strategy_from_name(
            a.strategy.empty() ? "direct" : a.strategy);
        if (!s) { err = "unknown kite strategy: " + a.strategy; return std::nullopt; }
        return pf::kite_sweep(b, *s);
    }
    if (a.shape == "rhombus") {
        auto s = pf::rhombus_strategy_from_name(
            a.strategy.empty() ? "direct" : a.strategy);
        if (!s) { err = "unknown rhombus strategy: " + a.strategy; return std::nullopt; }
        return pf::rhombus_sweep(b, *s);
    }
    err = "unknown shape: " + a.shape;
    return std::nullopt;
}

int cmd_search(const SearchArgs& args) {
    std::string err;
    auto sweep = sweep_for(args, err);
    if (!sweep) { std::cerr << err << "\n"; return kExitUsage; }

    std::uint64_t start = 0, emitted = 0;
    if (args.resume) {
        if (args.checkpoint_path.empty()) {
            std::cerr << "--resume needs --checkpoint\n";
            return kExitUsage;
        }
        try {
            pf::Checkpoint cp = pf::load_checkpoint(args.checkpoint_path);
            if (cp.strategy != sweep->strategy) {
                std::cerr << "checkpoint strategy mismatch: " << cp.strategy
                          << " vs " << sweep->strategy << "\n";
                return kExitUsage;
            }
            start = cp.cursor;
            emitted = cp.emitted_count;
        } catch (const std::exception& e) {
            std::cerr << "cannot resume: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    std::vector<pf::SearchRecord> all;
    std::uint64_t pos = start;
    while (pos < sweep->size) {
        std::uint64_t chunk_end =
            std::min<std::uint64_t>(pos + args.checkpoint_every, sweep->size);
        unsigned parts = args.parts ? args.parts : args.workers;
        auto ranges = pf::partition(chunk_end - pos, parts);
        std::vector<pf::SearchRecord> chunk;
        for (auto& r : ranges) {
            auto part = pf::collect(*sweep, {pos + r.begin, pos + r.end});
            chunk.insert(chunk.end(), part.begin(), part.end());
        }
        if (!args.out_path.empty() && !chunk.empty())
            pf::append_records(args.out_path, chunk, args.bounds);
        emitted += chunk.size();
        all.insert(all.end(), chunk.begin(), chunk.end());
        pos = chunk_end;
        if (!args.checkpoint_path.empty())
            pf::save_checkpoint(args.checkpoint_path,
                                {sweep->strategy, args.bounds, pos, emitted});
    }

    auto final = pf::finalize_records(std::move(all));
    for (const auto& r : final)
        std::cout << pf::record_to_line(r, args.bounds) << "\n";
    std::cout << "# strategy=" << sweep->strategy << " cells=" << sweep->size
              << " emitted=" << emitted << " distinct=" << final.size() << "\n";
    return final.empty() ? kExitNone : kExitFound;
}

int cmd_tables(const std::string& id) {
    std::vector<std::string> ids =
        id == "all" ? pf::table_ids() : std::vector<std::string>{id};
    bool all_pass = true;
    for (const auto& t : ids) {
        std::vector<pf::TableCheck> checks;
        try {
            checks = pf::check_table(t);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        int passed = 0;
        for (const auto& c : checks) {
            std::cout << "table " << t << " " << c.label << ": "
                      << (c.pass ? "PASS" : "FAIL");
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
            if (c.pass) ++passed; else all_pass = false;
        }
        std::cout << "table " << t << ": " << passed << "/" << checks.size()
                  << " PASS\n";
    }
    return all_pass ? kExitFound : kExitNone;
}

struct CurveArgs {
    std::string transform;
    std::string params_csv;
    std::string raw_csv;
    std::string action = "torsion";
    long numerator_bound = 10000;
    long denominator_bound = 4;
};

int cmd_curve(const CurveArgs& a) {
    pf::Curve curve;
    std::optional<pf::NamedTransform> tr;
    if (!a.transform.empty()) {
        auto id = pf::transform_from_name(a.transform);
        if (!id) { std::cerr << "unknown transform: " << a.transform << "\n"; return kExitUsage; }
        std::vector<pf::Int> params;
        if (!a.params_csv.empty())
            for (const auto& tok : split_csv(a.params_csv))
                params.emplace_back(tok);
        try {
            tr = pf::NamedTransform::make(*id, params);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        curve = pf::curve_of(*tr);
    } else if (!a.raw_csv.empty()) {
        auto coeffs = parse_rats(a.raw_csv);
        if (!coeffs || (coeffs->size() != 3 && coeffs->size() != 4) ||
            (coeffs->size() == 4 && (*coeffs)[0] != pf::Rat(1))) {
            std::cerr << "--raw wants a2,a4,a6 or 1,a2,a4,a6\n";
            return kExitUsage;
        }
        std::size_t off = coeffs->size() == 4 ? 1 : 0;
        curve = {(*coeffs)[off], (*coeffs)[off + 1], (*coeffs)[off + 2]};
    } else {
        std::cerr << "need --transform or --raw\n";
        return kExitUsage;
    }

    std::cout << "curve: V^2 = U^3 + (" << curve.a2.str() << ") U^2 + ("
              << curve.a4.str() << ") U + (" << curve.a6.str() << ")\n";
    if (curve.singular()) {
        std::cerr << "curve is singular\n";
        return kExitNone;
    }

    if (a.action == "torsion") {
        auto t = pf::torsion(curve);
        std::cout << "torsion: " << t.structure_label << " ("
                  << t.points.size() << " points)\n";
        for (const auto& [p, order] : t.points)
            std::cout << "  " << p.str() << " order " << order << "\n";
        return kExitFound;
    }
    if (a.action == "points") {
        auto pts = pf::find_points(curve, a.numerator_bound,
                                   a.denominator_bound);
        for (const auto& p : pts) std::cout << "  " << p.str() << "\n";
        std::cout << pts.size() << " points within bounds\n";
        return pts.empty() ? kExitNone : kExitFound;
    }
    if (a.action == "map") {
        if (!tr) { std::cerr << "map needs --transform\n"; return kExitUsage; }
        auto pts = pf::find_points(curve, a.numerator_bound,
                                   a.denominator_bound);
        int mapped = 0;
        for (const auto& p : pts) {
            auto t = pf::param_of_point(*tr, p);
            if (!t) continue;
            std::cout << "  " << p.str() << " -> " << t->str() << " ("
                      << (pf::verify_square(*tr, *t) ? "square"
                                                     : "not square")
                      << ")\n";
            ++mapped;
        }
        return mapped ? kExitFound : kExitNone;
    }
    std::cerr << "unknown action: " << a.action << "\n";
    return kExitUsage;
}

int cmd_fsck(const std::string& path) {
    try {
        pf::FsckResult res = pf::fsck_records(path);
        for (const auto& e : res.errors) std::cout << e << "\n";
        std::cout << res.total << " records, " << res.bad << " bad\n";
        return res.bad == 0 ? kExitFound : kExitNone;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search and verification for perfect quadrilateral "
                 "right prisms"};
    app.require_subcommand(1);

    // verify
    std::string v_shape, v_sides, v_h;
    auto* verify = app.add_subcommand("verify", "classify one candidate");
    // free the short -h so the height option can use the bare name
    verify->set_help_flag("--help", "print help and exit");
    verify->add_option("--shape", v_shape, "shape name")->required();
    verify->add_option("--sides", v_sides, "comma-separated lengths")->required();
    verify->add_option("--h", v_h, "prism height")->required();

    // search
    SearchArgs s;
    std::string s_hm = "10", s_npb = "10000", s_dpb = "4", s_scale = "1000",
                s_lcap = "0";
    auto* search = app.add_subcommand("search", "run a bounded sweep");
    search->add_option("--shape", s.shape, "shape / sweep name")->required();
    search->add_option("--strategy", s.strategy, "kite/rhombus strategy");
    search->add_option("--height-max", s_hm, "parameter height bound");
    search->add_option("--numerator-bound", s_npb, "point scan numerator bound");
    search->add_option("--denominator-bound", s_dpb,
                       "point scan denominator bound");
    search->add_option("--L", s.bounds.coefficient_bound,
                       "generator coefficient bound");
    search->add_option("--min-squares", s.bounds.min_square_count,
                       "0 = perfect only");
    search->add_option("--scale-cap", s_scale, "max integralizing multiplier");
    search->add_option("--length-cap", s_lcap, "0 = no primitive length cap");
    search->add_option("--multiples", s.bounds.point_multiple_max,
                       "n*P walk depth");
    search->add_flag("--distinct", s.bounds.require_distinct,
                     "require all six lengths distinct");
    search->add_option("--out", s.out_path, "record file (JSON lines)");
    search->add_option("--checkpoint", s.checkpoint_path, "checkpoint file");
    search->add_option("--checkpoint-every", s.checkpoint_every,
                       "cursor cells per checkpoint");
    search->add_flag("--resume", s.resume, "resume from checkpoint");
    search->add_option("--parts", s.parts, "partitions per chunk");
    search->add_option("--workers", s.workers,
                       "worker threads (default $PRISMFORGE_WORKERS)");

    // tables
    std::string t_id;
    auto* tables = app.add_subcommand("tables", "verify stored fixtures");
    tables->add_option("id", t_id, "1,2,3,4,S5,S6,S7,S8 or all")->required();

    // curve
    CurveArgs c;
    auto* curve = app.add_subcommand("curve", "inspect a curve");
    curve->add_option("--transform", c.transform, "catalog transform name");
    curve->add_option("--params", c.params_csv, "transform parameters");
    curve->add_option("--xy", c.params_csv, "alias for --params");
    curve->add_option("--raw", c.raw_csv, "a2,a4,a6 or 1,a2,a4,a6");
    curve->add_option("--action", c.action, "torsion | points | map");
    curve->add_option("--numerator-bound", c.numerator_bound, "");
    curve->add_option("--denominator-bound", c.denominator_bound, "");

    // fsck
    std::string f_path;
    auto* fsck = app.add_subcommand("fsck", "re-verify a record file");
    fsck->add_option("file", f_path, "record file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(v_shape, v_sides, v_h);
        if (*search) {
            auto hm = pf::Rat::parse(s_hm), npb = pf::Rat::parse(s_npb),
                 dpb = pf::Rat::parse(s_dpb), sc = pf::Rat::parse(s_scale),
                 lc = pf::Rat::parse(s_lcap);
            if (!hm || !npb || !dpb || !sc || !lc || !hm->is_integer() ||
                !npb->is_integer() || !dpb->is_integer() || !sc->is_integer() ||
                !lc->is_integer()) {
                std::cerr << "bounds must be integers\n";
                return kExitUsage;
            }
            s.bounds.param_height_max = hm->num();
            s.bounds.point_numerator_bound = npb->num();
            s.bounds.point_denominator_bound = dpb->num();
            s.bounds.scale_cap = sc->num();
            s.bounds.length_cap = lc->num();
            return cmd_search(s);
        }
        if (*tables) return cmd_tables(t_id);
        if (*curve) return cmd_curve(c);
        if (*fsck) return cmd_fsck(f_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
