// Copyright 2026 The qftkron Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <sstream>

#include "qftkron/circuit.hpp"

namespace qftkron {

namespace {

std::string box_label(const Gate& g, std::size_t d) {
  std::string name;
  switch (g.kind) {
    case GateKind::kHadamard: name = "H"; break;
    case GateKind::kFourier: name = "F" + std::to_string(d); break;
    case GateKind::kPhaseR:
    case GateKind::kControlledR: name = "R" + std::to_string(g.level); break;
    case GateKind::kNotX: name = "X"; break;
    case GateKind::kControlledNot: return g.adjoint ? "(-)" : "(+)";
    case GateKind::kSwap: return "x";
  }
  if (g.adjoint) name += "^-1";
  return "[" + name + "]";
}

std::string centered(const std::string& s, std::size_t width, char pad) {
  const std::size_t left = (width - s.size()) / 2;
  return std::string(left, pad) + s + std::string(width - s.size() - left, pad);
}

}  // namespace

std::string render_text(const Circuit& c) {
  c.validate();
  if (c.n > 16) throw std::invalid_argument("render_text supports at most 16 wires");

  // wire_cells[w][col], link_cells[w][col] is the connector below wire w.
  std::vector<std::vector<std::string>> wire_cells(c.n);
  std::vector<std::vector<bool>> links(c.n);
  std::vector<std::size_t> widths;
  for (const auto& g : c.gates) {
    std::size_t lo = g.target;
    std::size_t hi = g.target;
    if (g.control) {
      lo = std::min(lo, *g.control);
      hi = std::max(hi, *g.control);
    }
    std::size_t width = 1;
    for (std::size_t w = 0; w < c.n; ++w) {
      std::string cell;
      if (w == g.target) {
        cell = box_label(g, c.d);
      } else if (g.control && w == *g.control) {
        cell = g.kind == GateKind::kSwap ? "x" : "*";
      } else if (w > lo && w < hi) {
        cell = "|";
      }
      width = std::max(width, cell.size());
      wire_cells[w].push_back(cell);
      links[w].push_back(w >= lo && w < hi);
    }
    widths.push_back(width);
  }

  std::size_t label_width = 0;
  for (std::size_t w = 0; w < c.n; ++w)
    label_width = std::max(label_width, ("q" + std::to_string(w + 1) + ":").size());

  std::ostringstream out;
  for (std::size_t w = 0; w < c.n; ++w) {
    const std::string label = "q" + std::to_string(w + 1) + ":";
    out << label << std::string(label_width - label.size() + 1, ' ') << '-';
    for (std::size_t col = 0; col < widths.size(); ++col)
      out << '-' << centered(wire_cells[w][col], widths[col], '-') << '-';
    out << "-\n";
    if (w + 1 == c.n) break;
    std::string row = std::string(label_width + 2, ' ');
    for (std::size_t col = 0; col < widths.size(); ++col)
      row += ' ' + centered(links[w][col] ? "|" : "", widths[col], ' ') + ' ';
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  return out.str();
}

}  // namespace qftkron
