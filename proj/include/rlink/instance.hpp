#pragma once

// A validated domain together with everything derived from it once: both
// decompositions, the graph of oriented distances, all oriented distances and
// their summary.

#include <string>
#include <utility>

#include "rlink/decomposition.hpp"
#include "rlink/domain.hpp"
#include "rlink/graph.hpp"

namespace rlink {

class invalid_domain : public input_error {
 public:
  explicit invalid_domain(ValidationReport report)
      : input_error(describe(report)), report_(std::move(report)) {}

  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    std::string s = "invalid domain:";
    for (const auto& i : r.issues) s += "\n  " + std::string(to_string(i.kind)) + ": " + i.message;
    return s;
  }

  ValidationReport report_;
};

struct Instance {
  Domain         domain;
  Decomposition  horizontal;
  Decomposition  vertical;
  OrientedGraph  graph;
  DistanceMatrix dm;
  GraphSummary   summary;
};

/// Validates d (throwing invalid_domain) and builds the full instance.
inline Instance analyze(Domain d) {
  auto report = validate(d);
  if (!report.ok()) throw invalid_domain(std::move(report));
  Instance inst;
  inst.horizontal = horizontal_decomposition(d);
  inst.vertical = vertical_decomposition(d);
  inst.graph = build_graph(inst.horizontal, inst.vertical);
  inst.dm = all_pairs(inst.graph);
  inst.summary = summarize(inst.dm);
  inst.domain = std::move(d);
  return inst;
}

}  // namespace rlink
