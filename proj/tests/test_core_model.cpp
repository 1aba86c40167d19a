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

#include <set>
#include <string>

#include "doctest.h"
#include "support/builders.hpp"
#include "teleosched/errors.hpp"
#include "teleosched/generate.hpp"
#include "teleosched/io.hpp"
#include "teleosched/types.hpp"

using namespace teleosched;
using teleosched::testing::instance_of;
using teleosched::testing::schedule_of;

TEST_CASE("time formatting and parsing") {
  CHECK(Time::from_centi(1230).str() == "12.30");
  CHECK(Time::from_centi(5).str() == "0.05");
  CHECK(Time::from_units(100).str() == "100.00");
  CHECK(Time::parse("12.34").centi == 1234);
  CHECK(Time::parse("12.3").centi == 1230);
  CHECK(Time::parse("12").centi == 1200);
  CHECK_THROWS_AS(Time::parse("12.345"), ParseError);
  CHECK_THROWS_AS(Time::parse("abc"), ParseError);
  CHECK_THROWS_AS(Time::parse("12."), ParseError);
  CHECK_THROWS_AS(Time::parse(""), ParseError);
}

TEST_CASE("generated tasks stay on the sampled grid") {
  const Instance instance = generate_instance(3, 5, 42);
  CHECK(instance.robots() == 3);
  CHECK(instance.total_tasks() == 15);
  for (const Mission& mission : instance.missions) {
    for (const Task& task : mission.tasks) {
      CHECK(task.teleoperated >= Time::from_units(10));
      CHECK(task.teleoperated <= Time::from_units(20));
      CHECK(task.autonomous >= task.teleoperated);
      CHECK(task.autonomous - task.teleoperated <= Time::from_units(10));
    }
  }
}

TEST_CASE("generation bounds hold across many samples") {
  // >= 10^4 tasks across seeds.
  int count = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance instance = generate_instance(4, 30, seed);
    for (const Mission& mission : instance.missions) {
      for (const Task& task : mission.tasks) {
        ++count;
        REQUIRE(task.teleoperated.centi >= 1000);
        REQUIRE(task.teleoperated.centi <= 2000);
        REQUIRE(task.autonomous.centi - task.teleoperated.centi >= 0);
        REQUIRE(task.autonomous.centi - task.teleoperated.centi <= 1000);
      }
    }
  }
  CHECK(count >= 10000);
}

TEST_CASE("single-task instance satisfies the same bounds") {
  const Instance instance = generate_instance(1, 1, 7);
  CHECK(instance.total_tasks() == 1);
  const Task& task = instance.missions[0].tasks[0];
  CHECK(task.teleoperated >= Time::from_units(10));
  CHECK(task.teleoperated <= Time::from_units(20));
  CHECK(task.autonomous - task.teleoperated <= Time::from_units(10));
}

TEST_CASE("equal seeds generate byte-identical instances") {
  CHECK(save_instance(generate_instance(3, 5, 99)) ==
        save_instance(generate_instance(3, 5, 99)));
}

TEST_CASE("different seeds generate different instances") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    seen.insert(save_instance(generate_instance(2, 5, seed)));
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("generation rejects empty dimensions") {
  CHECK_THROWS_AS(generate_instance(0, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(generate_instance(2, 0, 1), InvalidArgument);
}

TEST_CASE("save renders canonical two-decimal strings") {
  const Instance instance = instance_of({{{15, 12}}});
  const std::string text = save_instance(instance);
  CHECK(text.find("\"alpha\": \"15.00\"") != std::string::npos);
  CHECK(text.find("\"beta\": \"12.00\"") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(text == save_instance(instance));
}

TEST_CASE("load accepts numbers and strings") {
  const Instance instance = load_instance(
      R"({"operators": 2,
          "robots": [[{"alpha": 15, "beta": "12.5"}],
                     [{"alpha": "20.25", "beta": 11.75}]]})");
  CHECK(instance.operators == 2);
  CHECK(instance.robots() == 2);
  CHECK(instance.task({0, 0}).autonomous.centi == 1500);
  CHECK(instance.task({0, 0}).teleoperated.centi == 1250);
  CHECK(instance.task({1, 0}).autonomous.centi == 2025);
  CHECK(instance.task({1, 0}).teleoperated.centi == 1175);
}

TEST_CASE("operators defaults to one") {
  const Instance instance =
      load_instance(R"({"robots": [[{"alpha": 5, "beta": 4}]]})");
  CHECK(instance.operators == 1);
}

TEST_CASE("load round-trips saved instances bit-exactly") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Instance instance = generate_instance(3, 4, seed);
    const std::string text = save_instance(instance);
    CHECK(save_instance(load_instance(text)) == text);
  }
}

TEST_CASE("parse errors carry the position") {
  try {
    load_instance("{\n  \"robots\": [[\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line >= 2);
  }
}

TEST_CASE("validation errors name the field") {
  try {
    load_instance(
        R"({"robots": [[{"alpha": "0.00", "beta": "12.00"}]]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& err) {
    CHECK(err.field == "robots[0][0].alpha");
  }

  CHECK_THROWS_AS(load_instance(R"({"robots": [[]]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"robots": []})"), ValidationError);
  CHECK_THROWS_AS(
      load_instance(R"({"operators": 0, "robots": [[{"alpha": 1, "beta": 1}]]})"),
      ValidationError);
  CHECK_THROWS_AS(
      load_instance(R"({"robots": [[{"alpha": "1.005", "beta": 1}]]})"),
      ValidationError);
  CHECK_THROWS_AS(
      load_instance(R"({"extra": 1, "robots": [[{"alpha": 1, "beta": 1}]]})"),
      ValidationError);
}

TEST_CASE("schedule validation catches bad references") {
  const Instance instance = instance_of({{{4, 2}, {4, 2}}, {{3, 1}}});
  CHECK_NOTHROW(validate_schedule(instance, schedule_of({{0, 0}, {1, 0}})));
  // out of range
  CHECK_THROWS_AS(validate_schedule(instance, schedule_of({{2, 0}})),
                  ValidationError);
  CHECK_THROWS_AS(validate_schedule(instance, schedule_of({{1, 1}})),
                  ValidationError);
  // duplicate
  CHECK_THROWS_AS(validate_schedule(instance, schedule_of({{0, 0}, {0, 0}})),
                  ValidationError);
  // mission order violated
  CHECK_THROWS_AS(validate_schedule(instance, schedule_of({{0, 1}, {0, 0}})),
                  ValidationError);
}
