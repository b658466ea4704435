#pragma once

// Text and JSON interchange. Polygon files are either one "x y" vertex per
// line (blank lines and '#' comments allowed) or {"vertices": [[x,y],...]}.
// Probabilities and areas are always serialized as exact fraction strings in
// lowest terms; floats appear only in explicitly numeric series output.

#include "latshift/montecarlo.hpp"
#include "latshift/pmf.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace latshift {

using Json = nlohmann::json;

inline IntPolygon parse_polygon_text(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::vector<IntVec> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs)) continue; // blank
        if (!(ls >> ys) || (ls >> extra)) {
            fail(Errc::ParseError, source + ":" + std::to_string(lineno) +
                                       ": expected 'x y' integers");
        }
        try {
            pts.emplace_back(Int(xs), Int(ys));
        } catch (const std::runtime_error&) {
            fail(Errc::ParseError, source + ":" + std::to_string(lineno) +
                                       ": not an integer pair: '" + line + "'");
        }
    }
    return IntPolygon::validate(pts);
}

inline IntPolygon parse_polygon_json(const std::string& text, const std::string& source) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        fail(Errc::ParseError, source + ": expected {\"vertices\": [[x,y],...]}");
    }
    std::vector<IntVec> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            fail(Errc::ParseError, source + ": vertex entries must be integer pairs");
        }
        pts.emplace_back(Int(v[0].get<long long>()), Int(v[1].get<long long>()));
    }
    return IntPolygon::validate(pts);
}

inline IntPolygon parse_polygon(const std::string& text, const std::string& source) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return parse_polygon_json(text, source);
        break;
    }
    return parse_polygon_text(text, source);
}

inline IntPolygon load_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon(buf.str(), path);
}

inline Json pmf_to_json(const Pmf& pmf) {
    Json support = Json::array();
    for (const auto& [v, p] : pmf.entries()) {
        support.push_back(Json::array({v, rat_str(p)}));
    }
    return Json{{"support", support},
                {"mean", rat_str(pmf.mean())},
                {"variance", rat_str(pmf.variance())}};
}

inline Json polygon_to_json(const IntPolygon& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        verts.push_back(Json::array({to_i64(v.x), to_i64(v.y)}));
    }
    return Json{{"vertices", verts}};
}

inline Json report_to_json(const EmpiricalReport& rep) {
    Json tallies = Json::array();
    for (const auto& [v, c] : rep.tallies) tallies.push_back(Json::array({v, c}));
    return Json{{"samples", rep.config.samples},
                {"seed", rep.config.seed},
                {"shards", rep.config.shards},
                {"tallies", tallies},
                {"empirical_mean", rat_str(rep.mean)},
                {"empirical_variance", rat_str(rep.variance)},
                {"resampled", rep.resampled},
                {"spot_checks", rep.spot_checks}};
}

inline Json comparison_to_json(const ComparisonResult& cmp) {
    Json z = Json::array();
    for (const auto& vz : cmp.z_scores) z.push_back(Json::array({vz.value, vz.z}));
    return Json{{"z_scores", z},
                {"max_abs_z", cmp.max_abs_z},
                {"tv_distance", cmp.tv_distance},
                {"tv_limit", cmp.tv_limit},
                {"outside_support", cmp.outside_support},
                {"pass", cmp.pass}};
}

inline Json error_to_json(const Error& e) {
    return Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

} // namespace latshift
