#pragma once

#include <string>

#include "json.hpp"

#include "qsm/qcore/depth.hpp"

namespace qsm::app {

/// Keys: c_1q, c_2q, c_3q, c_rot (positive integers) and rotate
/// ("constant" | "logarithmic"). Missing keys keep their defaults; unknown
/// keys and bad values throw DomainError.
DepthModel depth_model_from_json(const nlohmann::json& j);
DepthModel load_depth_model(const std::string& path);
nlohmann::json to_json(const DepthModel& model);

}  // namespace qsm::app
