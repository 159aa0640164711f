#include "qsm/app/depth_model_io.hpp"
#include "qsm/app/text_source.hpp"
#include "qsm/errors.hpp"

namespace qsm::app {

namespace {

std::size_t positive(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw DomainError("depth model: " + key + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

DepthModel depth_model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("depth model must be a JSON object");
  DepthModel model;
  for (const auto& [key, value] : j.items()) {
    if (key == "c_1q") {
      model.c_1q = positive(value, key);
    } else if (key == "c_2q") {
      model.c_2q = positive(value, key);
    } else if (key == "c_3q") {
      model.c_3q = positive(value, key);
    } else if (key == "c_rot") {
      model.c_rot = positive(value, key);
    } else if (key == "rotate") {
      const std::string mode = value.is_string() ? value.get<std::string>() : "";
      if (mode == "constant") {
        model.rotate = RotateCost::constant;
      } else if (mode == "logarithmic") {
        model.rotate = RotateCost::logarithmic;
      } else {
        throw DomainError("depth model: rotate must be \"constant\" or \"logarithmic\"");
      }
    } else {
      throw DomainError("depth model: unknown key " + key);
    }
  }
  return model;
}

DepthModel load_depth_model(const std::string& path) {
  const std::string body = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("depth model " + path + ": " + e.what());
  }
  return depth_model_from_json(j);
}

nlohmann::json to_json(const DepthModel& model) {
  return {
      {"c_1q", model.c_1q},
      {"c_2q", model.c_2q},
      {"c_3q", model.c_3q},
      {"c_rot", model.c_rot},
      {"rotate", model.rotate == RotateCost::constant ? "constant" : "logarithmic"},
  };
}

}  // namespace qsm::app
