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

// Runs the ten acceptance criteria and prints one line per criterion.
// Usage: acceptance [max_n]   (max_n in {2, 3}, default 3)

#include <cstdlib>
#include <iostream>
#include <string>

#include "battery.hpp"

int main(int argc, char** argv) {
  stringcone::cli::BatteryOptions opt;
  if (argc > 1) opt.max_n = std::atoi(argv[1]);
  if (opt.max_n < 2 || opt.max_n > 3) {
    std::cerr << "max_n must be 2 or 3\n";
    return 2;
  }
  int passed = 0;
  stringcone::cli::run_battery(opt, [&](const stringcone::cli::Check& c) {
    passed += c.pass;
    std::cout << stringcone::cli::format_check(c) << std::endl;
  });
  std::cout << passed << "/" << stringcone::cli::kCriteria << " criteria pass\n";
  return passed == stringcone::cli::kCriteria ? 0 : 1;
}
