#pragma once

// Small named instances, in input units.

#include <optional>
#include <string>

namespace rlink::samples {

inline constexpr const char* kSquare = R"({"outer": [[0,0],[10,0],[10,10],[0,10]], "holes": []})";
inline constexpr const char* kLShape =
    R"({"outer": [[0,0],[10,0],[10,4],[4,4],[4,10],[0,10]], "holes": []})";
inline constexpr const char* kDonut =
    R"({"outer": [[0,0],[14,0],[14,14],[0,14]], "holes": [[[6,6],[8,6],[8,8],[6,8]]]})";

inline std::optional<std::string> by_name(const std::string& name) {
  if (name == "square") return kSquare;
  if (name == "lshape") return kLShape;
  if (name == "donut") return kDonut;
  return std::nullopt;
}

}  // namespace rlink::samples
