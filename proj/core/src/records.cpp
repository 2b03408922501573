#include "prismforge/records.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace prismforge {

namespace {

using nlohmann::json;

std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    auto r = Rat::parse(j.get<std::string>());
    if (!r) throw std::runtime_error("bad rational: " + j.dump());
    return *r;
}

json bounds_to_json(const SearchBounds& b) {
    return json{{"param_height_max", b.param_height_max.get_str()},
                {"point_numerator_bound", b.point_numerator_bound.get_str()},
                {"point_denominator_bound",
                 b.point_denominator_bound.get_str()},
                {"coefficient_bound", b.coefficient_bound},
                {"min_square_count", b.min_square_count},
                {"scale_cap", b.scale_cap.get_str()},
                {"length_cap", b.length_cap.get_str()},
                {"point_multiple_max", b.point_multiple_max},
                {"require_distinct", b.require_distinct}};
}

SearchBounds bounds_from_json(const json& j) {
    SearchBounds b;
    b.param_height_max = Int(j.at("param_height_max").get<std::string>());
    b.point_numerator_bound =
        Int(j.at("point_numerator_bound").get<std::string>());
    b.point_denominator_bound =
        Int(j.at("point_denominator_bound").get<std::string>());
    b.coefficient_bound = j.at("coefficient_bound").get<int>();
    b.min_square_count = j.at("min_square_count").get<int>();
    b.scale_cap = Int(j.at("scale_cap").get<std::string>());
    b.length_cap = Int(j.at("length_cap").get<std::string>());
    b.point_multiple_max = j.at("point_multiple_max").get<int>();
    b.require_distinct = j.at("require_distinct").get<bool>();
    return b;
}

}  // namespace

std::string record_to_line(const SearchRecord& record,
                           const SearchBounds& bounds) {
    const PrismBase& base = record.candidate.base;
    json lengths{{"x", rat_str(base.x)}, {"y", rat_str(base.y)},
                 {"z", rat_str(base.z)}, {"w", rat_str(base.w)},
                 {"u", rat_str(base.u)}, {"v", rat_str(base.v)}};
    json conditions = json::array();
    for (const auto& cond : record.report.conditions)
        conditions.push_back(json{{"name", cond.length_name},
                                  {"value", rat_str(cond.value)},
                                  {"square", cond.square}});
    json params = json::array();
    for (const Rat& p : record.params) params.push_back(rat_str(p));

    json j{{"shape", shape_name(base.kind)},
           {"lengths", lengths},
           {"h", rat_str(record.candidate.h)},
           {"params", params},
           {"square_conditions", conditions},
           {"square_count", record.report.square_count},
           {"required_count", record.report.required_count},
           {"perfect", record.report.perfect},
           {"integral", record.report.integral},
           {"geometry_status", geometry_status_name(base.geometry_status)},
           {"measure", record.measure.get_str()},
           {"strategy", record.strategy},
           {"bounds", bounds_to_json(bounds)},
           {"tool_version", kToolVersion}};
    return j.dump();
}

SearchRecord record_from_line(const std::string& line) {
    json j = json::parse(line);
    SearchRecord rec;
    auto kind = shape_from_name(j.at("shape").get<std::string>());
    if (!kind) throw std::runtime_error("unknown shape in record");
    PrismBase& base = rec.candidate.base;
    base.kind = *kind;
    const json& lengths = j.at("lengths");
    base.x = rat_parse(lengths.at("x"));
    base.y = rat_parse(lengths.at("y"));
    base.z = rat_parse(lengths.at("z"));
    base.w = rat_parse(lengths.at("w"));
    base.u = rat_parse(lengths.at("u"));
    base.v = rat_parse(lengths.at("v"));
    std::string status = j.at("geometry_status").get<std::string>();
    if (status == "convex") base.geometry_status = GeometryStatus::CONVEX;
    else if (status == "degenerate")
        base.geometry_status = GeometryStatus::DEGENERATE;
    else if (status == "invalid")
        base.geometry_status = GeometryStatus::INVALID;
    else throw std::runtime_error("unknown geometry_status in record");
    for (const json& p : j.at("params")) base.params.push_back(rat_parse(p));
    rec.params = base.params;
    rec.candidate.h = rat_parse(j.at("h"));
    rec.strategy = j.at("strategy").get<std::string>();
    rec.measure = Int(j.at("measure").get<std::string>());

    DiagonalReport& rep = rec.report;
    for (const json& c : j.at("square_conditions"))
        rep.conditions.push_back({c.at("name").get<std::string>(),
                                  rat_parse(c.at("value")),
                                  c.at("square").get<bool>()});
    rep.square_count = j.at("square_count").get<int>();
    rep.required_count = j.at("required_count").get<int>();
    rep.perfect = j.at("perfect").get<bool>();
    rep.integral = j.at("integral").get<bool>();
    return rec;
}

void append_records(const std::string& path,
                    const std::vector<SearchRecord>& records,
                    const SearchBounds& bounds) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& r : records) out << record_to_line(r, bounds) << '\n';
}

std::vector<SearchRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SearchRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_line(line));
    }
    return out;
}

FsckResult fsck_records(const std::string& path) {
    FsckResult res;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++res.total;
        std::string err;
        try {
            SearchRecord rec = record_from_line(line);
            DiagonalReport fresh = classify(rec.candidate);
            if (fresh.square_count != rec.report.square_count ||
                fresh.required_count != rec.report.required_count ||
                fresh.perfect != rec.report.perfect ||
                fresh.integral != rec.report.integral)
                err = "report does not re-verify";
            else {
                Rat sum = rec.candidate.h;
                for (const auto& [name, value] :
                     rec.candidate.base.condition_lengths())
                    sum += value;
                if (!sum.is_integer() || sum.num() != rec.measure)
                    err = "measure mismatch";
                for (std::size_t i = 0; i < fresh.conditions.size(); ++i)
                    if (fresh.conditions[i].square !=
                        rec.report.conditions.at(i).square)
                        err = "square flag mismatch";
            }
        } catch (const std::exception& e) {
            err = e.what();
        }
        if (!err.empty()) {
            ++res.bad;
            res.errors.push_back("line " + std::to_string(lineno) + ": " + err);
        }
    }
    return res;
}

std::string checkpoint_to_json(const Checkpoint& cp) {
    json j{{"strategy", cp.strategy},
           {"bounds", bounds_to_json(cp.bounds)},
           {"cursor", cp.cursor},
           {"emitted_count", cp.emitted_count}};
    return j.dump();
}

Checkpoint checkpoint_from_json(const std::string& text) {
    json j = json::parse(text);
    Checkpoint cp;
    cp.strategy = j.at("strategy").get<std::string>();
    cp.bounds = bounds_from_json(j.at("bounds"));
    cp.cursor = j.at("cursor").get<std::uint64_t>();
    cp.emitted_count = j.at("emitted_count").get<std::uint64_t>();
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << checkpoint_to_json(cp) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return checkpoint_from_json(ss.str());
}

}  // namespace prismforge
