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

#include "teleosched/generate.hpp"

#include "teleosched/errors.hpp"
#include "teleosched/rng.hpp"

namespace teleosched {

Instance generate_instance(int robots, int tasks_per_robot,
                           std::uint64_t seed) {
  if (robots < 1) throw InvalidArgument("robots must be >= 1");
  if (tasks_per_robot < 1) throw InvalidArgument("tasks_per_robot must be >= 1");

  SplitMix64 rng(seed);
  Instance instance;
  instance.operators = 1;
  instance.missions.resize(robots);
  for (Mission& mission : instance.missions) {
    mission.tasks.reserve(tasks_per_robot);
    for (int j = 0; j < tasks_per_robot; ++j) {
      // Sampling directly on the hundredths grid keeps both draws exact
      // two-decimal values, with alpha - beta equal to the sampled delta.
      const Time teleoperated = Time::from_centi(
          1000 + static_cast<std::int64_t>(rng.below(1001)));
      const Time delta =
          Time::from_centi(static_cast<std::int64_t>(rng.below(1001)));
      mission.tasks.push_back(Task{teleoperated + delta, teleoperated});
    }
  }
  return instance;
}

}  // namespace teleosched
