#pragma once

// Runs every engine on an instance, optionally against the oracle, and
// collects values, witnesses and timings into a report.

#include <chrono>
#include <string>
#include <vector>

#include "rlink/instance.hpp"
#include "rlink/metrics.hpp"
#include "rlink/oracle.hpp"

namespace rlink {

struct EngineRun {
  Measure             measure = Measure::diameter;
  Engine              engine = Engine::edge_scan;
  int                 value = 0;
  bool                routed_to_fallback = false;
  std::vector<Point>  points;  // diametral pair, or the center
  std::vector<RectId> witness_rects;
  bool                witness_checked = false;
  bool                witness_ok = false;
  double              seconds = 0;
};

struct RunReport {
  std::size_t            n = 0;
  std::size_t            h = 0;
  std::size_t            m = 0;
  std::size_t            chi = 0;
  int                    ordiam = 0;
  int                    orrad = 0;
  std::vector<EngineRun> runs;
  bool                   agree = true;
  bool                   witnesses_ok = true;

  [[nodiscard]] const char* verdict() const { return agree && witnesses_ok ? "ok" : "mismatch"; }
};

namespace detail {

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline EngineRun to_run(const DiameterResult& r, double secs) {
  return {Measure::diameter, r.engine, r.value, r.routed_to_fallback, {r.p, r.q}, r.witness_rects,
          false, false, secs};
}

inline EngineRun to_run(const RadiusResult& r, double secs) {
  return {Measure::radius, r.engine, r.value, r.routed_to_fallback, {r.center}, r.witness,
          false, false, secs};
}

}  // namespace detail

inline void check_witness(const Domain& d, EngineRun& run) {
  run.witness_checked = true;
  if (run.measure == Measure::diameter) {
    run.witness_ok = oracle_distance(d, run.points[0], run.points[1]) == run.value;
  } else {
    run.witness_ok = oracle_eccentricity(d, run.points[0]) == run.value;
  }
}

/// All diameter engines (edge-scan, matmul, fast) and radius engines
/// (edge-scan, matmul), with fallback routing; plus the oracle and witness
/// checks when `with_oracle`.
inline RunReport run_verify(const Instance& inst, bool with_oracle = true) {
  RunReport rep;
  rep.n = inst.domain.vertex_count();
  rep.h = inst.domain.hole_count();
  rep.m = inst.graph.size();
  rep.chi = inst.graph.chi();
  rep.ordiam = inst.summary.ordiam;
  rep.orrad = inst.summary.orrad;

  for (Engine e : {Engine::edge_scan, Engine::matmul, Engine::fast}) {
    DiameterResult r;
    const double   t = detail::timed([&] { r = compute_diameter(inst.graph, inst.dm, inst.summary, e); });
    rep.runs.push_back(detail::to_run(r, t));
  }
  for (Engine e : {Engine::edge_scan, Engine::matmul}) {
    RadiusResult r;
    const double t = detail::timed([&] { r = compute_radius(inst.graph, inst.dm, inst.summary, e); });
    rep.runs.push_back(detail::to_run(r, t));
  }
  if (with_oracle) {
    OracleTable  table;
    const double t = detail::timed([&] { table = oracle_table(build_grid(inst.domain)); });
    rep.runs.push_back(detail::to_run(oracle_diameter(table), t));
    rep.runs.push_back(detail::to_run(oracle_radius(table), 0.0));
  }

  for (auto& run : rep.runs) {
    for (const auto& other : rep.runs) {
      if (other.measure == run.measure && other.value != run.value) rep.agree = false;
    }
    if (with_oracle) {
      check_witness(inst.domain, run);
      rep.witnesses_ok = rep.witnesses_ok && run.witness_ok;
    }
  }
  return rep;
}

}  // namespace rlink
