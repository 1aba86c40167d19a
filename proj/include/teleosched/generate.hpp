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

#ifndef TELEOSCHED_GENERATE_HPP
#define TELEOSCHED_GENERATE_HPP

#include <cstdint>

#include "teleosched/types.hpp"

namespace teleosched {

// Random instance: per task, teleoperated time is uniform on the
// two-decimal grid [10.00, 20.00] (endpoints included) and autonomous
// time adds an independent uniform draw from [0.00, 10.00]. Deterministic
// for a fixed seed. Throws InvalidArgument when robots or tasks_per_robot
// is not positive.
Instance generate_instance(int robots, int tasks_per_robot,
                           std::uint64_t seed);

}  // namespace teleosched

#endif  // TELEOSCHED_GENERATE_HPP
