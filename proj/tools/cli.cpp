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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "battery.hpp"
#include "stringcone/polytopes.hpp"

namespace stringcone::cli {

using nlohmann::json;

namespace {

json rat_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw InputError("rational entries must be integers or \"p/q\" strings");
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_json(x));
  return out;
}

json hrep_json(const HRep& h) {
  json rows = json::array();
  for (const auto& r : h.rows) rows.push_back({{"a", vec_json(r.a)}, {"b", rat_json(r.b)}});
  return rows;
}

HRep hrep_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("hrep")) throw InputError("polytope JSON needs \"dim\" and \"hrep\"");
  HRep h(j.at("dim").get<int>());
  for (const auto& row : j.at("hrep")) {
    Vec a;
    for (const auto& x : row.at("a")) a.push_back(rat_from_json(x));
    h.add_le(a, rat_from_json(row.at("b")));
  }
  return h;
}

json polytope_json(const HRep& h) {
  json out;
  out["dim"] = h.dim;
  out["hrep"] = hrep_json(h);
  const FaceLattice fl = face_lattice(h);
  json verts = json::array();
  for (const auto& v : fl.vertices) verts.push_back(vec_json(v));
  out["vrep"] = {{"vertices", verts}, {"rays", json::array()}};
  out["fvector"] = fl.f_vector();
  out["facets"] = fl.facets.size();
  out["integral"] = integrality(VRep{fl.vertices, {}}).integral;
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string fvec_text(const std::vector<long>& f) {
  std::vector<std::string> parts;
  for (long x : f) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string hrep_text(const HRep& h) {
  std::ostringstream os;
  for (const auto& r : h.rows) {
    std::vector<std::string> terms;
    for (std::size_t j = 0; j < r.a.size(); ++j) {
      if (r.a[j] == 0) continue;
      std::string c = r.a[j] == 1 ? "" : r.a[j] == -1 ? "-" : r.a[j].get_str();
      terms.push_back(c + "x" + std::to_string(j + 1));
    }
    os << "  " << (terms.empty() ? "0" : join(terms, " + ")) << " <= " << r.b.get_str() << "\n";
  }
  return os.str();
}

// "C2" or a bare family letter, whose rank is then the largest letter of the word
LieType word_type(const std::string& type, const Word& w) {
  if (type.size() != 1) return LieType::parse(type);
  const int rank = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  return LieType::parse(type + std::to_string(rank));
}

// "gt:3", "gt:3@1,2,1", "string:C:2,1,2,1", "string:C:2,1,2,1@rho" or a polytope JSON file
HRep polytope_source(const std::string& src) {
  std::string body = src, weight = "rho";
  if (auto at = src.find('@'); at != std::string::npos) {
    body = src.substr(0, at);
    weight = src.substr(at + 1);
  }
  if (body.rfind("gt:", 0) == 0) {
    const int n = std::stoi(body.substr(3));
    return gt_polytope_C(Weight::parse(LieType{Family::C, n}, weight), n);
  }
  if (body.rfind("string:", 0) == 0) {
    const auto rest = body.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("string source must be string:<type>:<word>");
    const Word w = parse_word(rest.substr(colon + 1));
    const LieType t = word_type(rest.substr(0, colon), w);
    return string_polytope(t, w, Weight::parse(t, weight));
  }
  std::ifstream in(src);
  if (!in) throw InputError("cannot read polytope source " + src);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(src + ": " + e.what());
  }
  return hrep_from_json(j);
}

json path_json(const RigorousPath& p) {
  json nodes = json::array();
  for (int x : p.nodes()) nodes.push_back(x + 1);
  return {{"k", p.k}, {"wires", p.wires()}, {"nodes", nodes}};
}

std::vector<std::string> symp_wires(const SympWiringDiagram& d, const RigorousPath& p) {
  std::vector<std::string> out;
  for (int w : p.wires()) out.push_back("ℓ" + symp_wire_name(d.rank(), w));
  return out;
}

// "<k>:<n1>,<n2>,..." with 1-based switching nodes; "<k>:" for no switches
RigorousPath parse_highlight(const WiringDiagram& g, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("highlight must be <k>:<node>,<node>,...");
  const int k = std::stoi(spec.substr(0, colon));
  std::vector<int> nodes;
  if (colon + 1 < spec.size())
    for (int x : parse_word(spec.substr(colon + 1))) nodes.push_back(x - 1);
  auto p = path_from_nodes(g, k, nodes);
  if (!p) throw InputError("highlight " + spec + " is not a rigorous path on this diagram");
  return *p;
}

// ---------------------------------------------------------------- commands

CommandResult cmd_words(const std::string& type, std::size_t cap) {
  const LieType t = LieType::parse(type);
  CommandResult r{"words", {}, "", 0};
  json words = json::array();
  std::ostringstream os;
  std::size_t count = 0;
  for_each_reduced_word(
      t,
      [&](const Word& w) {
        ++count;
        words.push_back(w);
        os << format_word(w) << "\n";
        return true;
      },
      cap);
  r.json = {{"type", t.str()}, {"count", count}, {"words", words}};
  r.text = os.str() + std::to_string(count) + " reduced words of w0 in " + t.str() + "\n";
  return r;
}

CommandResult cmd_paths(const std::string& type, const std::string& word, int k) {
  const Word w = parse_word(word);
  const LieType t = word_type(type, w);
  CommandResult r{"paths", {}, "", 0};
  json paths = json::array();
  std::ostringstream os;
  if (t.family == Family::A) {
    if (!is_reduced(t, w) || static_cast<int>(w.size()) != longest_length(t))
      throw InputError(word + " is not a reduced word of w0 in " + t.str());
    const WiringDiagram d(w);
    for (int kk = 1; kk < d.wire_count(); ++kk) {
      if (k && kk != k) continue;
      for (const auto& p : enumerate_paths(d, kk)) {
        json j = path_json(p);
        const LinForm f = functional_A(d, p);
        j["functional"] = f.coeffs;
        j["form"] = format_form(f);
        paths.push_back(j);
        std::vector<std::string> ws;
        for (int x : p.wires()) ws.push_back("ℓ" + std::to_string(x));
        os << "k=" << kk << "  " << join(ws, " -> ") << "   " << format_form(f) << " >= 0\n";
      }
    }
  } else {
    const SympWiringDiagram d(t, w);
    const int top = t.family == Family::C ? t.rank : d.lift().wire_count() - 1;
    for (int kk = 1; kk <= top; ++kk) {
      if (k && kk != k) continue;
      for (const auto& p : enumerate_paths(d.lift(), kk)) {
        json j = path_json(p);
        j["symp_wires"] = symp_wires(d, p);
        j["t_form"] = format_form(d, functional_T(d, p));
        std::string shown;
        if (t.family == Family::C) {
          const bool sym = is_symmetric(d, p);
          const LinForm f = functional_C(d, p);
          j["symmetric"] = sym;
          j["hat_C"] = format_form(functional_hat_C(d, p));
          j["functional"] = f.coeffs;
          j["form"] = shown = format_form(f);
          os << "k=" << kk << "  " << join(symp_wires(d, p), " -> ") << (sym ? "  [symmetric]" : "") << "   "
             << format_form(d, functional_T(d, p)) << "  =>  " << shown << " >= 0\n";
        } else {
          const LinForm f = functional_B(d, p);
          j["functional"] = f.coeffs;
          j["form"] = shown = format_form(f);
          os << "k=" << kk << "  " << join(symp_wires(d, p), " -> ") << "   " << shown << " >= 0\n";
        }
        paths.push_back(j);
      }
    }
  }
  r.json = {{"type", t.str()}, {"word", w}, {"paths", paths}};
  r.text = os.str() + std::to_string(paths.size()) + " rigorous paths\n";
  return r;
}

CommandResult cmd_cone(const std::string& type, const std::string& word, bool irredundant) {
  const Word w = parse_word(word);
  const LieType t = word_type(type, w);
  const FacetSystem fs = irredundant_facets(t, w);
  CommandResult r{"cone", {}, "", 0};
  json constraints = json::array(), forms = json::array(), facets = json::array();
  for (const auto& c : fs.cone.constraints) {
    constraints.push_back(c.coeffs);
    forms.push_back(format_form(c));
  }
  for (const auto& f : fs.forms) facets.push_back(f.coeffs);
  const bool simplicial = fs.facet_count() == fs.cone.dim;
  r.json = {{"type", t.str()},        {"word", w},
            {"dim", fs.cone.dim},     {"constraints", constraints},
            {"forms", forms},         {"facets", facets},
            {"facet_count", fs.facet_count()}, {"simplicial", simplicial},
            {"conflicts", fs.conflicts}};
  std::ostringstream os;
  if (irredundant) {
    for (const auto& f : fs.forms) os << "  " << format_form(f) << " >= 0\n";
  } else {
    for (const auto& c : fs.cone.constraints) os << "  " << format_form(c) << " >= 0\n";
  }
  os << fs.cone.constraints.size() << " path constraints, " << fs.facet_count() << " facets"
     << (simplicial ? " (simplicial)" : "") << "\n";
  for (const auto& c : fs.conflicts) os << "warning: " << c << "\n";
  r.text = os.str();
  return r;
}

CommandResult polytope_result(const std::string& name, const HRep& h, bool irredundant, json extra) {
  const HRep shown = irredundant ? remove_redundant(h) : h;
  CommandResult r{name, polytope_json(shown), "", 0};
  for (auto& [key, val] : extra.items()) r.json[key] = val;
  std::ostringstream os;
  os << hrep_text(shown);
  os << "dim " << shown.dim << ", " << r.json["facets"].get<std::size_t>() << " facets, "
     << r.json["vrep"]["vertices"].size() << " vertices, f-vector "
     << fvec_text(r.json["fvector"].get<std::vector<long>>()) << ", "
     << (r.json["integral"].get<bool>() ? "integral" : "not integral") << "\n";
  r.text = os.str();
  return r;
}

CommandResult cmd_polytope(const std::string& type, const std::string& word, const std::string& lambda,
                           bool irredundant) {
  const Word w = parse_word(word);
  const LieType t = word_type(type, w);
  const Weight l = Weight::parse(t, lambda);
  return polytope_result("polytope", string_polytope(t, w, l), irredundant,
                         {{"type", t.str()}, {"word", w}, {"lambda", l.coeffs}});
}

CommandResult cmd_gt(int n, const std::string& lambda) {
  const Weight l = Weight::parse(LieType{Family::C, n}, lambda);
  return polytope_result("gt", gt_polytope_C(l, n), false,
                         {{"n", n}, {"lambda", l.coeffs}, {"labels", gt_shape(n).labels()}});
}

CommandResult cmd_fvector(const std::string& src) {
  const auto f = f_vector(polytope_source(src));
  return {"fvector", {{"source", src}, {"fvector", f}}, fvec_text(f) + "\n", 0};
}

json invariants_json(const Invariants& inv) {
  json j = {{"fvector", inv.f_vector},
            {"integral", inv.integral},
            {"lattice_points_t1", inv.lattice_t1},
            {"lattice_points_t2", inv.lattice_t2},
            {"normalized_volume", inv.volume.get_str()}};
  if (inv.non_integral_vertex) j["non_integral_vertex"] = vec_json(*inv.non_integral_vertex);
  return j;
}

CommandResult cmd_equiv(const std::string& a, const std::string& b, long budget, bool full) {
  EquivalenceOptions opt;
  opt.budget = budget;
  opt.full_battery = full;
  const auto res = search_unimodular_equivalence(polytope_source(a), polytope_source(b), opt);
  CommandResult r{"equiv", {}, "", 0};
  r.json = {{"verdict", to_string(res.verdict)},
            {"witness", res.witness},
            {"candidates_tested", res.candidates_tested},
            {"p", invariants_json(res.p_inv)},
            {"q", invariants_json(res.q_inv)}};
  std::ostringstream os;
  os << to_string(res.verdict) << " (" << res.witness << ")\n";
  if (res.verdict == Verdict::Equivalent) {
    r.json["U"] = res.U;
    r.json["shift"] = res.shift;
    os << "x -> U x + v with\n";
    for (std::size_t i = 0; i < res.U.size(); ++i) {
      os << "  [";
      for (std::size_t j = 0; j < res.U[i].size(); ++j) os << std::setw(3) << res.U[i][j];
      os << " ]  " << std::setw(3) << res.shift[i] << "\n";
    }
  }
  r.text = os.str();
  return r;
}

CommandResult cmd_render(const std::string& type, const std::string& word,
                         const std::vector<std::string>& highlights, const std::string& out) {
  const Word w = parse_word(word);
  const LieType t = word_type(type, w);
  std::string svg;
  int wires = 0, nodes = 0;
  auto draw = [&](const WiringDiagram& g, const SvgOptions& opt) {
    std::vector<RigorousPath> paths;
    for (const auto& h : highlights) paths.push_back(parse_highlight(g, h));
    svg = render_svg(g, paths, opt);
    wires = g.wire_count();
    nodes = g.length();
  };
  if (t.family == Family::A) {
    if (!is_reduced(t, w) || static_cast<int>(w.size()) != longest_length(t))
      throw InputError(word + " is not a reduced word of w0 in " + t.str());
    draw(WiringDiagram(w), {});
  } else {
    const SympWiringDiagram d(t, w);
    draw(d.lift(), {&d});
  }
  CommandResult r{"render",
                  {{"wires", wires}, {"nodes", nodes}, {"letters", w.size()}, {"highlights", highlights.size()}},
                  "",
                  0};
  if (out.empty() || out == "-") {
    r.text = svg;
  } else {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << svg;
    r.json["output"] = out;
    r.text = "wrote " + out + " (" + std::to_string(wires) + " wires, " + std::to_string(nodes) + " nodes)\n";
  }
  return r;
}

CommandResult cmd_diagram(const std::string& type, const std::string& word) {
  const Word w = parse_word(word);
  const LieType t = word_type(type, w);
  std::optional<SympWiringDiagram> sd;
  WiringDiagram g;
  if (t.family == Family::A) {
    if (!is_reduced(t, w) || static_cast<int>(w.size()) != longest_length(t))
      throw InputError(word + " is not a reduced word of w0 in " + t.str());
    g = WiringDiagram(w);
  } else {
    sd.emplace(t, w);
    g = sd->lift();
  }
  json wires = json::array(), nodes = json::array(), chambers = json::array();
  for (int x = 1; x <= g.wire_count(); ++x) {
    json nd = json::array();
    for (int j : g.wire_nodes(x)) nd.push_back(j + 1);
    wires.push_back({{"wire", x}, {"name", sd ? "ℓ" + symp_wire_name(t.rank, x) : "ℓ" + std::to_string(x)},
                     {"nodes", nd}});
  }
  for (const auto& n : g.nodes())
    nodes.push_back({{"index", n.index + 1},
                     {"column", n.column},
                     {"wires", {n.lo, n.hi}},
                     {"label", sd ? symp_node_name(*sd, n.index) : "a" + std::to_string(n.index + 1)}});
  const ChamberStructure cs = chamber_structure(g);
  for (const auto& c : cs.chambers) {
    auto one = [](std::vector<int> v) {
      for (auto& x : v) ++x;
      return v;
    };
    chambers.push_back({{"top", c.top + 1},
                        {"bottom", c.bottom < 0 ? json(nullptr) : json(c.bottom + 1)},
                        {"plus", one(c.plus)},
                        {"minus", one(c.minus)}});
  }
  CommandResult r{"diagram", {}, "", 0};
  r.json = {{"type", t.str()}, {"word", w},         {"lift", g.word()},
            {"wires", wires},  {"nodes", nodes},     {"chambers", chambers},
            {"phi", cs.phi}};
  std::ostringstream os;
  os << g.wire_count() << " wires, " << g.length() << " nodes\n";
  for (const auto& n : g.nodes())
    os << "  " << (sd ? symp_node_name(*sd, n.index) : "a" + std::to_string(n.index + 1)) << "  column "
       << n.column << "  wires " << n.lo << "x" << n.hi << "\n";
  r.text = os.str();
  return r;
}

CommandResult cmd_verify(int n, const std::vector<int>& only) {
  BatteryOptions opt;
  opt.max_n = n;
  CommandResult r{"verify-paper", {{"n", n}, {"checks", json::array()}}, "", 0};
  std::ostringstream os;
  bool all = true;
  for (int id = 1; id <= kCriteria; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const Check c = run_check(id, opt);
    all = all && c.pass;
    r.json["checks"].push_back({{"id", c.id},
                                {"title", c.title},
                                {"pass", c.pass},
                                {"detail", c.detail},
                                {"seconds", c.seconds},
                                {"data", c.data}});
    os << format_check(c) << "\n";
  }
  r.json["pass"] = all;
  r.status = all ? 0 : 1;
  r.text = os.str();
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"String cones and string polytopes in types A, B and C", "stringcone"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print JSON instead of tables")->configurable(false);
  app.fallthrough();

  std::string type, word, lambda = "rho", out, src1, src2;
  int k = 0, n = 3;
  std::size_t cap = kDefaultWordCap;
  bool irredundant = false, full = false;
  long budget = EquivalenceOptions{}.budget;
  std::vector<std::string> highlights;
  std::vector<int> only;

  auto* words = app.add_subcommand("words", "enumerate the reduced words of w0");
  words->add_option("type", type, "A3, B2, C3, ...")->required();
  words->add_option("--cap", cap, "stop with an error after this many words");

  auto* paths = app.add_subcommand("paths", "rigorous paths and their string inequalities");
  paths->add_option("type", type)->required();
  paths->add_option("word", word, "comma-separated letters")->required();
  paths->add_option("--k", k, "only this orientation");

  auto* cone = app.add_subcommand("cone", "string cone inequalities and facets");
  cone->add_option("type", type)->required();
  cone->add_option("word", word)->required();
  cone->add_flag("--irredundant", irredundant, "list only the facet inequalities");

  auto* poly = app.add_subcommand("polytope", "string polytope for a weight");
  poly->add_option("type", type)->required();
  poly->add_option("word", word)->required();
  poly->add_option("--lambda", lambda, "rho, 0 or comma-separated coefficients")->required();
  poly->add_flag("--irredundant", irredundant, "drop redundant inequalities");

  auto* gt = app.add_subcommand("gt", "type-C Gelfand-Tsetlin polytope");
  gt->add_option("--n", n, "rank")->required();
  gt->add_option("--lambda", lambda, "rho, 0 or comma-separated coefficients")->required();

  auto* fvec = app.add_subcommand("fvector", "f-vector of a polytope source");
  fvec->add_option("source", src1, "gt:<n>[@weight], string:<type>:<word>[@weight] or a polytope JSON file")
      ->required();

  auto* equiv = app.add_subcommand("equiv", "search for a unimodular equivalence");
  equiv->add_option("source1", src1)->required();
  equiv->add_option("source2", src2)->required();
  equiv->add_option("--budget", budget, "candidate maps tried before answering unknown");
  equiv->add_flag("--full", full, "compute every invariant even after a mismatch");

  auto* render = app.add_subcommand("render", "SVG wiring diagram");
  render->add_option("type", type)->required();
  render->add_option("word", word)->required();
  render->add_option("--highlight", highlights, "<k>:<node>,<node>,... switching nodes of a path");
  render->add_option("-o,--output", out, "output file, default stdout");

  auto* diagram = app.add_subcommand("diagram", "wires, nodes and chambers of a wiring diagram");
  diagram->add_option("type", type)->required();
  diagram->add_option("word", word)->required();

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance battery");
  verify->add_option("--n", n, "largest rank for exhaustive checks")->check(CLI::Range(2, 3));
  verify->add_option("--only", only, "run only these criteria")->check(CLI::Range(1, kCriteria));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {"help", {}, app.help(), 0};
  } catch (const CLI::CallForAllHelp&) {
    return {"help", {}, app.help("", CLI::AppFormatMode::All), 0};
  } catch (const CLI::ParseError& e) {
    return {"usage", {{"error", e.what()}}, std::string("error: ") + e.what() + "\n" + app.help(), 2};
  }

  CommandResult r;
  try {
    if (*words) r = cmd_words(type, cap);
    else if (*paths) r = cmd_paths(type, word, k);
    else if (*cone) r = cmd_cone(type, word, irredundant);
    else if (*poly) r = cmd_polytope(type, word, lambda, irredundant);
    else if (*gt) r = cmd_gt(n, lambda);
    else if (*fvec) r = cmd_fvector(src1);
    else if (*equiv) r = cmd_equiv(src1, src2, budget, full);
    else if (*render) r = cmd_render(type, word, highlights, out);
    else if (*diagram) r = cmd_diagram(type, word);
    else if (*verify) r = cmd_verify(n, only);
  } catch (const std::invalid_argument& e) {
    return {"error", {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", 2};
  } catch (const std::domain_error& e) {
    return {"error", {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", 2};
  } catch (const ResourceError& e) {
    return {"error", {{"error", e.what()}}, std::string("error: ") + e.what() + "\n", 2};
  }
  r.json["command"] = r.name;
  if (as_json) r.text = r.json.dump(2) + "\n";
  return r;
}

}  // namespace stringcone::cli
