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

#include "teleosched/lp.hpp"

#include <cstdlib>
#include <vector>

namespace teleosched {
namespace {

std::string tvar(int k, int j) {
  return "t_" + std::to_string(k + 1) + '_' + std::to_string(j + 1);
}

std::string xvar(int k, int j, int m, bool multi) {
  std::string name = "x_" + std::to_string(k + 1) + '_' + std::to_string(j + 1);
  if (multi) name += '_' + std::to_string(m + 1);
  return name;
}

std::string yvar(int k, int j, int l, int i, int m, bool multi) {
  std::string name = "y_" + std::to_string(k + 1) + '_' +
                     std::to_string(j + 1) + '_' + std::to_string(l + 1) +
                     '_' + std::to_string(i + 1);
  if (multi) name += '_' + std::to_string(m + 1);
  return name;
}

// One constraint row; terms with a zero coefficient are dropped and the
// unit coefficient is left implicit.
class Row {
 public:
  explicit Row(std::string name) : text_(' ' + std::move(name) + ':') {}

  Row& add(Time coeff, const std::string& var) {
    if (coeff.centi == 0) return *this;
    text_ += coeff.centi > 0 ? (first_ ? " " : " + ") : " - ";
    const Time magnitude = Time::from_centi(std::abs(coeff.centi));
    if (magnitude.centi != 100) {
      text_ += magnitude.str();
      text_ += ' ';
    }
    text_ += var;
    first_ = false;
    return *this;
  }

  std::string finish(const char* relation, Time rhs) const {
    return text_ + ' ' + relation + ' ' + rhs.str() + '\n';
  }

 private:
  std::string text_;
  bool first_ = true;
};

constexpr Time kUnit = Time::from_centi(100);

}  // namespace

std::string emit_lp(const Instance& instance) {
  instance.validate();
  const bool multi = instance.operators >= 2;
  const int num_ops = instance.operators;
  const int K = instance.robots();

  Time big_m = Time::zero();
  for (const Mission& mission : instance.missions) {
    for (const Task& task : mission.tasks) big_m += task.autonomous;
  }

  const auto saving = [&](int k, int j) {
    const Task& t = instance.missions[k].tasks[j];
    return t.autonomous - t.teleoperated;
  };
  const auto autonomous = [&](int k, int j) {
    return instance.missions[k].tasks[j].autonomous;
  };

  std::string out;
  out += "\\ teleoperation scheduling model: robots=" + std::to_string(K) +
         ", operators=" + std::to_string(num_ops) +
         ", tasks=" + std::to_string(instance.total_tasks()) + "\n";
  out += "Minimize\n obj: mu\nSubject To\n";

  // Mission completion: mu >= finish of each robot's last task.
  for (int k = 0; k < K; ++k) {
    const int last = instance.tasks(k) - 1;
    Row row("c1_" + std::to_string(k + 1));
    row.add(kUnit, "mu").add(-kUnit, tvar(k, last));
    for (int m = 0; m < num_ops; ++m) {
      row.add(saving(k, last), xvar(k, last, m, multi));
    }
    out += row.finish(">=", autonomous(k, last));
  }

  // Earliest start of each mission.
  for (int k = 0; k < K; ++k) {
    out += Row("c2_" + std::to_string(k + 1))
               .add(kUnit, tvar(k, 0))
               .finish(">=", Time::zero());
  }

  // Mission order: a task starts after its predecessor finishes.
  for (int k = 0; k < K; ++k) {
    for (int j = 1; j < instance.tasks(k); ++j) {
      Row row("c3_" + std::to_string(k + 1) + '_' + std::to_string(j + 1));
      row.add(kUnit, tvar(k, j)).add(-kUnit, tvar(k, j - 1));
      for (int m = 0; m < num_ops; ++m) {
        row.add(saving(k, j - 1), xvar(k, j - 1, m, multi));
      }
      out += row.finish(">=", autonomous(k, j - 1));
    }
  }

  // Operator exclusivity: when one operator teleoperates both tasks of a
  // cross-robot pair, one must finish before the other starts. y selects
  // the branch; either x at zero relaxes both rows.
  std::vector<std::string> y_names;
  for (int k = 0; k < K - 1; ++k) {
    for (int l = k + 1; l < K; ++l) {
      for (int j = 0; j < instance.tasks(k); ++j) {
        for (int i = 0; i < instance.tasks(l); ++i) {
          for (int m = 0; m < num_ops; ++m) {
            const std::string y = yvar(k, j, l, i, m, multi);
            y_names.push_back(y);
            const std::string suffix =
                std::to_string(k + 1) + '_' + std::to_string(j + 1) + '_' +
                std::to_string(l + 1) + '_' + std::to_string(i + 1) +
                (multi ? '_' + std::to_string(m + 1) : std::string());

            Row row_a("c4a_" + suffix);
            row_a.add(kUnit, tvar(k, j)).add(-kUnit, tvar(l, i));
            row_a.add(-big_m, xvar(k, j, m, multi));
            for (int mm = 0; mm < num_ops; ++mm) {
              const Time coeff =
                  saving(l, i) - (mm == m ? big_m : Time::zero());
              row_a.add(coeff, xvar(l, i, mm, multi));
            }
            row_a.add(-big_m, y);
            out += row_a.finish(
                ">=", autonomous(l, i) - big_m - big_m - big_m);

            Row row_b("c4b_" + suffix);
            row_b.add(kUnit, tvar(l, i)).add(-kUnit, tvar(k, j));
            for (int mm = 0; mm < num_ops; ++mm) {
              const Time coeff =
                  saving(k, j) - (mm == m ? big_m : Time::zero());
              row_b.add(coeff, xvar(k, j, mm, multi));
            }
            row_b.add(-big_m, xvar(l, i, m, multi));
            row_b.add(big_m, y);
            out += row_b.finish(">=",
                                           autonomous(k, j) - big_m - big_m);
          }
        }
      }
    }
  }

  // Each task is teleoperated by at most one operator.
  if (multi) {
    for (int k = 0; k < K; ++k) {
      for (int j = 0; j < instance.tasks(k); ++j) {
        Row row("c6_" + std::to_string(k + 1) + '_' + std::to_string(j + 1));
        for (int m = 0; m < num_ops; ++m) {
          row.add(kUnit, xvar(k, j, m, multi));
        }
        out += row.finish("<=", kUnit);
      }
    }
  }

  // Start times never exceed the all-autonomous horizon.
  out += "Bounds\n";
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < instance.tasks(k); ++j) {
      out += ' ' + tvar(k, j) + " <= " + big_m.str() + '\n';
    }
  }

  out += "Binary\n";
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < instance.tasks(k); ++j) {
      for (int m = 0; m < num_ops; ++m) {
        out += ' ' + xvar(k, j, m, multi) + '\n';
      }
    }
  }
  for (const std::string& y : y_names) out += ' ' + y + '\n';
  out += "End\n";
  return out;
}

}  // namespace teleosched
