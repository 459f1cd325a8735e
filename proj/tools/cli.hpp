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

#include <string>
#include <vector>

#include <json.hpp>

#include "stringcone/paths.hpp"

namespace stringcone::cli {

struct CommandResult {
  std::string name;
  nlohmann::json json;
  std::string text;
  int status = 0;  // 0 ok, 1 check failed, 2 usage or input error
};

// args excludes the program name
CommandResult run(const std::vector<std::string>& args);

struct SvgOptions {
  const SympWiringDiagram* symp = nullptr;  // labels and wall for symplectic diagrams
};

std::string render_svg(const WiringDiagram& d, const std::vector<RigorousPath>& highlights,
                       const SvgOptions& opt = {});

}  // namespace stringcone::cli
