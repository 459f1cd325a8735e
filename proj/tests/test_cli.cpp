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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "battery.hpp"
#include "cli.hpp"

using stringcone::cli::run;

TEST_SUITE("cli") {
  TEST_CASE("cone facets") {
    const auto r = run({"cone", "C", "2,1,2,1", "--irredundant"});
    CHECK(r.status == 0);
    CHECK(r.json["facet_count"] == 4);
    CHECK(r.json["simplicial"] == true);
    for (const char* key : {"type", "word", "dim", "constraints", "forms", "facets", "conflicts"})
      CHECK(r.json.contains(key));
    CHECK(r.text.find("4 facets") != std::string::npos);
    CHECK(r.json["type"] == "C2");
    CHECK(run({"cone", "C2", "2,1,2,1"}).json == r.json);
  }

  TEST_CASE("json output") {
    const auto r = run({"--json", "words", "C2"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.text);
    CHECK(j["count"] == 2);
    CHECK(j["command"] == "words");
  }

  TEST_CASE("paths") {
    const auto r = run({"paths", "C2", "2,1,2,1", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.json["paths"].size() == 5);
    const auto a = run({"paths", "A3", "1,2,1,3,2,1"});
    CHECK(a.json["paths"].size() == 6);
  }

  TEST_CASE("polytopes") {
    const auto r = run({"polytope", "C2", "2,1,2,1", "--lambda", "rho", "--irredundant"});
    CHECK(r.status == 0);
    CHECK(r.json["facets"] == 8);
    CHECK(r.json["integral"] == true);
    for (const char* key : {"dim", "hrep", "vrep", "fvector"}) CHECK(r.json.contains(key));
    const auto g = run({"gt", "--n", "2", "--lambda", "1,0"});
    CHECK(g.status == 0);
    CHECK(g.json["labels"].size() == 4);
    CHECK(run({"fvector", "gt:2"}).json["fvector"].front() == 1);
    CHECK(run({"fvector", "string:C:2,1,2,1"}).json["fvector"] == run({"fvector", "gt:2"}).json["fvector"]);
  }

  TEST_CASE("polytope files") {
    const std::string path = "cli_square.json";
    {
      std::ofstream f(path);
      f << R"({"dim": 2, "hrep": [{"a": [-1, 0], "b": 0}, {"a": [1, 0], "b": "3/2"},
                                   {"a": [0, -1], "b": 0}, {"a": [0, 1], "b": 1}]})";
    }
    const auto r = run({"fvector", path});
    CHECK(r.status == 0);
    CHECK(r.json["fvector"] == nlohmann::json({1, 4, 4, 1}));
    const std::string unit = "cli_unit.json";
    {
      std::ofstream f(unit);
      f << R"({"dim": 2, "hrep": [{"a": [-1, 0], "b": 0}, {"a": [1, 0], "b": 1},
                                   {"a": [0, -1], "b": 0}, {"a": [0, 1], "b": 1}]})";
    }
    const auto e = run({"equiv", path, unit});
    CHECK(e.status == 0);
    CHECK(e.json["verdict"] == "inequivalent");
    CHECK(run({"equiv", path, "gt:2"}).status == 2);
    std::remove(path.c_str());
    std::remove(unit.c_str());
  }

  TEST_CASE("equivalence of the GT polytope and i_C") {
    const auto r = run({"equiv", "gt:2", "string:C2:2,1,2,1"});
    CHECK(r.status == 0);
    CHECK(r.json["verdict"] == "equivalent");
    CHECK(r.json.contains("U"));
  }

  TEST_CASE("render") {
    const auto r = run({"render", "A", "1,2,1,3,2,1", "--highlight", "1:1"});
    CHECK(r.status == 0);
    CHECK(r.json["nodes"] == 6);
    std::size_t circles = 0;
    for (auto at = r.text.find("<circle"); at != std::string::npos; at = r.text.find("<circle", at + 1)) ++circles;
    CHECK(circles == 6);
    CHECK(r.text.find("class=\"path\"") != std::string::npos);
    const auto s = run({"render", "C2", "2,1,2,1"});
    CHECK(s.text.find("class=\"wall\"") != std::string::npos);
    CHECK(run({"render", "A3", "1,2,1,3,2,1", "--highlight", "1:1,2"}).status == 2);
  }

  TEST_CASE("diagram") {
    const auto r = run({"diagram", "C2", "2,1,2,1"});
    CHECK(r.status == 0);
    CHECK(r.json["nodes"].size() == 6);
    CHECK(r.json["chambers"].size() == 6);
  }

  TEST_CASE("errors") {
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"cone", "D4", "1"}).status == 2);
    CHECK(run({"cone", "A2", "1,2"}).status == 2);
    CHECK(run({"polytope", "A2", "1,2,1"}).status == 2);
    CHECK(run({"polytope", "A2", "1,2,1", "--lambda", "1,-1"}).status == 2);
    CHECK(run({"words", "A4", "--cap", "5"}).status == 2);
    CHECK(run({"fvector", "no-such-file.json"}).status == 2);
    CHECK(run({"verify-paper", "--n", "4"}).status == 2);
    CHECK(run({"--help"}).status == 0);
  }

  TEST_CASE("battery") {
    const auto r = run({"verify-paper", "--n", "2", "--only", "1", "--only", "3", "--only", "7"});
    CHECK(r.status == 0);
    CHECK(r.json["checks"].size() == 3);
    const auto c = stringcone::cli::run_check(1, {});
    CHECK(stringcone::cli::format_check(c).rfind("PASS  [1]", 0) == 0);
  }
}
