#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "seaweed/algebra.hpp"
#include "seaweed/composition.hpp"
#include "seaweed/decomposition.hpp"
#include "seaweed/forms.hpp"
#include "seaweed/meander.hpp"

namespace seaweed {

// Figure emission. The meander renders as vertices on a line with arcs bent
// above (top) or below (bottom); the matrix view shades admissible cells,
// outlines the two staircases, colors core (solid) and peak (outlined)
// blocks, and draws a black dot per form summand.

inline std::string meander_dot(const Meander& m, const std::string& name = "meander") {
  std::ostringstream os;
  os << "graph " << name << " {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (int v = 1; v <= m.vertex_count; ++v) {
    os << "  v" << v;
    if (m.tail.count(v))
      os << " [style=filled, fillcolor=\"#9999ff\"]";
    else if (m.aftertail.count(v))
      os << " [style=filled, fillcolor=\"#ff9999\"]";
    os << ";\n";
  }
  for (const Arc& a : m.arcs)
    os << "  v" << a.u << " -- v" << a.v << " [label=\""
       << (a.side == ArcSide::top ? "t" : "b") << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string meander_svg(const Meander& m) {
  const int step = 36, r = 6;
  const int w = step * (m.vertex_count + 1), h0 = 150, height = 300;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << height
     << "\">\n";
  auto x = [&](int v) { return step * v; };
  for (const Arc& a : m.arcs) {
    const int cx = (x(a.u) + x(a.v)) / 2, rad = (x(a.v) - x(a.u)) / 2;
    const int sweep = a.side == ArcSide::top ? 1 : 0;
    os << "  <path d=\"M " << x(a.u) << " " << h0 << " A " << rad << " " << rad << " 0 0 "
       << sweep << " " << x(a.v) << " " << h0 << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int v = 1; v <= m.vertex_count; ++v) {
    std::string fill = "black";
    if (m.tail.count(v)) fill = "#5555ff";
    if (m.aftertail.count(v)) fill = "#ff5555";
    os << "  <circle cx=\"" << x(v) << "\" cy=\"" << h0 << "\" r=\"" << r << "\" fill=\"" << fill
       << "\"/>\n  <text x=\"" << x(v) << "\" y=\"" << h0 + 22
       << "\" text-anchor=\"middle\" font-size=\"11\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string matrix_svg(const SeaweedDescriptor& d, const OneForm* form = nullptr) {
  const int n2 = 2 * d.n;
  const int cell = std::max(6, 360 / n2);
  const int size = cell * n2;
  const AdmissibleSet adm(d);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 << "\" height=\""
     << size + 2 << "\">\n";
  auto px = [&](int col) { return 1 + (col - 1) * cell; };
  auto py = [&](int row) { return 1 + (row - 1) * cell; };
  for (int i = 1; i <= n2; ++i)
    for (int j = 1; j <= n2; ++j)
      if (adm.contains({i, j}))
        os << "  <rect x=\"" << px(j) << "\" y=\"" << py(i) << "\" width=\"" << cell
           << "\" height=\"" << cell << "\" fill=\"#eeeeee\"/>\n";

  const auto comps = decompose(d);
  const char* palette[] = {"#cfe2ff", "#ffe0b3", "#d3f3d3", "#f3d3f3", "#fff3b3", "#d3f0f3"};
  const Meander full = build_full_meander(d);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const DecompComponent& comp = comps[ci];
    const char* color =
        comp.kind == ComponentKind::aftertail ? "#ffb3b3" : palette[ci % 6];
    for (const auto& block : comp.blocks)
      os << "  <rect x=\"" << px(block.front()) << "\" y=\"" << py(block.front()) << "\" width=\""
         << cell * comp.size << "\" height=\"" << cell * comp.size << "\" fill=\"" << color
         << "\" fill-opacity=\"0.8\"/>\n";
    for (const PeakEdge& e : peak_set(comp, full)) {
      const auto& src = comp.blocks[static_cast<std::size_t>(e.source)];
      const auto& dst = comp.blocks[static_cast<std::size_t>(e.target)];
      os << "  <rect x=\"" << px(dst.front()) << "\" y=\"" << py(src.front()) << "\" width=\""
         << cell * comp.size << "\" height=\"" << cell * comp.size
         << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
  }

  // dotted diagonals and the midlines
  os << "  <line x1=\"1\" y1=\"1\" x2=\"" << size << "\" y2=\"" << size
     << "\" stroke=\"black\" stroke-dasharray=\"3,3\"/>\n";
  os << "  <line x1=\"" << size << "\" y1=\"1\" x2=\"1\" y2=\"" << size
     << "\" stroke=\"black\" stroke-dasharray=\"3,3\"/>\n";
  os << "  <line x1=\"" << size / 2 << "\" y1=\"1\" x2=\"" << size / 2 << "\" y2=\"" << size
     << "\" stroke=\"black\" stroke-dasharray=\"3,3\"/>\n";
  os << "  <line x1=\"1\" y1=\"" << size / 2 << "\" x2=\"" << size << "\" y2=\"" << size / 2
     << "\" stroke=\"black\" stroke-dasharray=\"3,3\"/>\n";

  // bold staircase outlines: borders where block membership changes
  auto [ft, fb] = full_compositions(d);
  auto emit_stairs = [&](const std::vector<int>& parts, bool lower) {
    int v = 0;
    for (int p : parts) {
      const int lo = v + 1, hi = v + p;
      os << "  <rect x=\"" << px(lo) << "\" y=\"" << py(lo) << "\" width=\"" << cell * p
         << "\" height=\"" << cell * p << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
         << (lower ? 2 : 1) << "\"/>\n";
      v = hi;
    }
  };
  emit_stairs(ft.parts, true);
  emit_stairs(fb.parts, false);

  if (form)
    for (const auto& [l, coeff] : form->terms())
      os << "  <circle cx=\"" << px(l.col) + cell / 2 << "\" cy=\"" << py(l.row) + cell / 2
         << "\" r=\"" << std::max(2, cell / 5) << "\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace seaweed
