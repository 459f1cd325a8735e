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

#include <sstream>

#include "cli.hpp"

namespace stringcone::cli {

namespace {

constexpr double kDx = 60, kDy = 50, kMargin = 50;
const char* const kColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Pt {
  double x, y;
};

Pt wire_point(const WiringDiagram& d, int wire, int level) {
  return {kMargin + (d.position(wire, level) - 1) * kDx, kMargin + level * kDy};
}

Pt node_point(const WiringDiagram& d, int j) {
  const Node& n = d.node(j);
  return {kMargin + (n.column - 0.5) * kDx, kMargin + (j + 0.5) * kDy};
}

void polyline(std::ostringstream& os, const std::vector<Pt>& pts, const std::string& style) {
  os << "  <polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i].x << ',' << pts[i].y;
  os << "\"/>\n";
}

// wire points strictly between the crossing at `from` and the one at `to` (-1: diagram end)
void run_along(const WiringDiagram& d, int wire, int from, int to, bool up, std::vector<Pt>& pts) {
  const int l = d.length();
  if (up) {
    const int hi = from < 0 ? l : from;
    const int lo = to < 0 ? 0 : to + 1;
    for (int t = hi; t >= lo; --t) pts.push_back(wire_point(d, wire, t));
  } else {
    const int lo = from < 0 ? 0 : from + 1;
    const int hi = to < 0 ? l : to;
    for (int t = lo; t <= hi; ++t) pts.push_back(wire_point(d, wire, t));
  }
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const WiringDiagram& d, const std::vector<RigorousPath>& highlights,
                       const SvgOptions& opt) {
  for (const auto& p : highlights)
    if (!is_rigorous(d, p)) throw InputError("highlighted path is not a rigorous path of this diagram");
  const int m = d.wire_count(), l = d.length();
  const double width = 2 * kMargin + (m - 1) * kDx;
  const double height = 2 * kMargin + l * kDy;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (opt.symp) {
    const double x = kMargin + (m - 1) * kDx / 2;
    os << "  <line class=\"wall\" x1=\"" << x << "\" y1=\"" << kMargin / 2 << "\" x2=\"" << x << "\" y2=\""
       << height - kMargin / 2 << "\" stroke=\"#888\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (int w = 1; w <= m; ++w) {
    std::vector<Pt> pts;
    for (int t = 0; t <= l; ++t) pts.push_back(wire_point(d, w, t));
    polyline(os, pts, "class=\"wire\" stroke=\"black\" stroke-width=\"1.5\"");
    const std::string name = opt.symp ? "ℓ" + symp_wire_name(opt.symp->rank(), w) : "ℓ" + std::to_string(w);
    const Pt top = wire_point(d, w, 0);
    os << "  <text x=\"" << top.x << "\" y=\"" << top.y - 10 << "\" text-anchor=\"middle\" font-size=\"14\">"
       << xml_escape(name) << "</text>\n";
  }
  for (std::size_t i = 0; i < highlights.size(); ++i) {
    const auto& p = highlights[i];
    const int k = p.k;
    std::vector<Pt> pts;
    int wire = k, from = -1;
    for (const auto& s : p.steps) {
      run_along(d, wire, from, s.node, wire <= k, pts);
      pts.push_back(node_point(d, s.node));
      wire = s.out;
      from = s.node;
    }
    run_along(d, wire, from, -1, wire <= k, pts);
    polyline(os, pts,
             "class=\"path\" stroke=\"" + std::string(kColors[i % 6]) +
                 "\" stroke-width=\"4\" stroke-opacity=\"0.6\"" +
                 (i % 2 ? " stroke-dasharray=\"8,4\"" : ""));
  }
  for (int j = 0; j < l; ++j) {
    const Pt c = node_point(d, j);
    const std::string label = opt.symp ? symp_node_name(*opt.symp, j) : "a" + std::to_string(j + 1);
    os << "  <circle class=\"node\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"4\" fill=\"black\"/>\n"
       << "  <text x=\"" << c.x + 8 << "\" y=\"" << c.y + 4 << "\" font-size=\"12\">" << xml_escape(label)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace stringcone::cli
