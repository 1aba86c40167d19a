// Copyright 2026 The teleosched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teleosched/io.hpp"

#include <cmath>
#include <cstdint>

#include "json.hpp"
#include "teleosched/errors.hpp"

namespace teleosched {
namespace {

using nlohmann::json;

// nlohmann reports parse errors as byte offsets; tests and users want
// line/column.
std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Time duration_from_json(const json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return Time::parse(value.get<std::string>());
    } catch (const ParseError&) {
      throw ValidationError(field + " is not a valid 2-decimal duration",
                            field);
    }
  }
  if (value.is_number_integer()) {
    return Time::from_units(value.get<std::int64_t>());
  }
  if (value.is_number_float()) {
    const double units = value.get<double>();
    const double centi = units * 100.0;
    const double rounded = std::llround(centi);
    if (std::fabs(centi - rounded) > 1e-4) {
      throw ValidationError(field + " has more than two decimal places",
                            field);
    }
    return Time::from_centi(static_cast<std::int64_t>(rounded));
  }
  throw ValidationError(field + " must be a number or a decimal string",
                        field);
}

}  // namespace

Instance load_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    const auto [line, column] = line_column(text, err.byte);
    throw ParseError(err.what(), line, column);
  }

  if (!doc.is_object()) {
    throw ValidationError("top level must be an object", "");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "operators" && key != "robots") {
      throw ValidationError("unknown key '" + key + "'", key);
    }
  }

  Instance instance;
  if (doc.contains("operators")) {
    const json& ops = doc["operators"];
    if (!ops.is_number_integer()) {
      throw ValidationError("operators must be an integer", "operators");
    }
    instance.operators = ops.get<int>();
  }

  if (!doc.contains("robots") || !doc["robots"].is_array()) {
    throw ValidationError("robots must be an array", "robots");
  }
  int k = 0;
  for (const json& mission_json : doc["robots"]) {
    const std::string robot_field = "robots[" + std::to_string(k) + "]";
    if (!mission_json.is_array()) {
      throw ValidationError(robot_field + " must be an array", robot_field);
    }
    Mission mission;
    int j = 0;
    for (const json& task_json : mission_json) {
      const std::string task_field =
          robot_field + "[" + std::to_string(j) + "]";
      if (!task_json.is_object() || !task_json.contains("alpha") ||
          !task_json.contains("beta")) {
        throw ValidationError(
            task_field + " must be an object with alpha and beta", task_field);
      }
      Task task;
      task.autonomous =
          duration_from_json(task_json["alpha"], task_field + ".alpha");
      task.teleoperated =
          duration_from_json(task_json["beta"], task_field + ".beta");
      mission.tasks.push_back(task);
      ++j;
    }
    instance.missions.push_back(std::move(mission));
    ++k;
  }

  instance.validate();
  return instance;
}

std::string save_instance(const Instance& instance) {
  json robots = json::array();
  for (const Mission& mission : instance.missions) {
    json tasks = json::array();
    for (const Task& task : mission.tasks) {
      tasks.push_back(json{{"alpha", task.autonomous.str()},
                           {"beta", task.teleoperated.str()}});
    }
    robots.push_back(std::move(tasks));
  }
  const json doc{{"operators", instance.operators},
                 {"robots", std::move(robots)}};
  return doc.dump(2) + "\n";
}

}  // namespace teleosched
