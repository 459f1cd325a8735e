/* Copyright 2026 The stringcone Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stringcone::cli {

struct Check {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime bound
  nlohmann::json data;
};

struct BatteryOptions {
  int max_n = 3;  // largest B/C rank used by the exhaustive checks
};

inline constexpr int kCriteria = 10;

Check run_check(int id, const BatteryOptions& opt);
std::vector<Check> run_battery(const BatteryOptions& opt,
                               const std::function<void(const Check&)>& on_done = {});
std::string format_check(const Check& c);

}  // namespace stringcone::cli
