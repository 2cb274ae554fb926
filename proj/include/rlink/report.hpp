#pragma once

// JSON views of results and reports. Points are printed in input units
// (internal coordinates halved); timings always live under "timings".

#include <nlohmann/json.hpp>

#include "rlink/instance.hpp"
#include "rlink/metrics.hpp"
#include "rlink/verify.hpp"

namespace rlink {

inline nlohmann::json point_json(Point p) {
  auto c = [](Coord v) -> nlohmann::json {
    if (v % 2 == 0) return v / 2;
    return static_cast<double>(v) / 2.0;
  };
  return nlohmann::json::array({c(p.x), c(p.y)});
}

inline nlohmann::json rect_json(const Rect& r) {
  return {{"id", r.id},
          {"orientation", to_string(r.orientation)},
          {"x", point_json({r.xmin, r.xmax})},
          {"y", point_json({r.ymin, r.ymax})}};
}

inline nlohmann::json to_json(const DiameterResult& r) {
  nlohmann::json pts = nlohmann::json::array({point_json(r.p), point_json(r.q)});
  return {{"measure", "diameter"},
          {"value", r.value},
          {"engine", to_string(r.engine)},
          {"routed_to_fallback", r.routed_to_fallback},
          {"witness", {{"points", pts}, {"rects", r.witness_rects}}}};
}

inline nlohmann::json to_json(const RadiusResult& r) {
  return {{"measure", "radius"},
          {"value", r.value},
          {"engine", to_string(r.engine)},
          {"routed_to_fallback", r.routed_to_fallback},
          {"witness", {{"center", point_json(r.center)}, {"rects", r.witness}}}};
}

inline nlohmann::json stats_json(const Instance& inst) {
  return {{"n", inst.domain.vertex_count()},
          {"h", inst.domain.hole_count()},
          {"m", inst.graph.size()},
          {"chi", inst.graph.chi()},
          {"ordiam", inst.summary.ordiam},
          {"orrad", inst.summary.orrad}};
}

/// Rectangles, adjacency and the oriented summary.
inline nlohmann::json decomposition_json(const Instance& inst) {
  nlohmann::json rects = nlohmann::json::array();
  for (const auto& r : inst.graph.rects()) {
    auto j = rect_json(r);
    const auto nb = inst.graph.neighbors(r.id);
    j["adjacent"] = std::vector<RectId>(nb.begin(), nb.end());
    rects.push_back(std::move(j));
  }
  auto out = stats_json(inst);
  out["horizontal_count"] = inst.horizontal.size();
  out["vertical_count"] = inst.vertical.size();
  out["rects"] = std::move(rects);
  out["ordiam_pair"] = {inst.summary.far_a, inst.summary.far_b};
  out["orrad_center"] = inst.summary.center;
  return out;
}

inline nlohmann::json to_json(const RunReport& rep, bool timings = true) {
  nlohmann::json runs = nlohmann::json::array();
  nlohmann::json times = nlohmann::json::object();
  for (const auto& r : rep.runs) {
    const std::string key =
        std::string(r.measure == Measure::diameter ? "diameter/" : "radius/") + to_string(r.engine);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) pts.push_back(point_json(p));
    nlohmann::json j = {{"measure", r.measure == Measure::diameter ? "diameter" : "radius"},
                        {"engine", to_string(r.engine)},
                        {"value", r.value},
                        {"routed_to_fallback", r.routed_to_fallback},
                        {"points", pts},
                        {"rects", r.witness_rects}};
    if (r.witness_checked) j["witness_ok"] = r.witness_ok;
    runs.push_back(std::move(j));
    times[key] = r.seconds;
  }
  nlohmann::json out = {{"n", rep.n},           {"h", rep.h},
                        {"m", rep.m},           {"chi", rep.chi},
                        {"ordiam", rep.ordiam}, {"orrad", rep.orrad},
                        {"runs", runs},         {"verdict", rep.verdict()}};
  if (timings) out["timings"] = times;
  return out;
}

}  // namespace rlink
