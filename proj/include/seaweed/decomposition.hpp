#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

/****************************************************************************

  Vector-space decomposition. Replaying the winding of the half meander maps
  each homotopy entry to a set of original vertices: every C(c) move names the
  classes it deleted, every terminal numerator part names the classes under
  it, and leftover classes are the aftertail. Mirroring into the full meander
  and cutting the resulting consecutive runs into intervals of length c gives
  the V-blocks of the component; these intervals are the vertices of the
  component meander, whose edges we read off directly as oriented block
  adjacency (top arcs run from the higher block to the lower one, bottom arcs
  the other way around).

  Run lengths are asserted to be multiples of c; a violation aborts loudly
  since everything downstream depends on it.

 ****************************************************************************/

enum class ComponentKind { tail, aftertail, deleted };

struct DecompComponent {
  ComponentKind kind;
  int size = 0;                          // c
  std::vector<int> half_vertices;        // sorted, within 1..n (aftertail: classes)
  std::vector<int> full_vertices;        // sorted, within 1..2n
  std::vector<std::vector<int>> blocks;  // consecutive intervals of length c
};

// Oriented component-meander edge: all full-meander arcs between the two
// blocks lie on `side` and point from blocks[source] to blocks[target].
struct PeakEdge {
  int source = 0, target = 0;  // indices into DecompComponent::blocks
  ArcSide side = ArcSide::top;

  bool operator==(const PeakEdge&) const = default;
  auto operator<=>(const PeakEdge&) const = default;
};

namespace detail {

inline std::vector<std::vector<int>> chop_runs(const std::vector<int>& sorted_vertices, int c,
                                               const std::string& what) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  while (i < sorted_vertices.size()) {
    std::size_t j = i + 1;
    while (j < sorted_vertices.size() && sorted_vertices[j] == sorted_vertices[j - 1] + 1) ++j;
    const std::size_t len = j - i;
    if (len % static_cast<std::size_t>(c) != 0)
      throw ConsistencyError("vertex run of length " + std::to_string(len) + " in " + what +
                             " is not a multiple of the block size " + std::to_string(c));
    for (std::size_t k = i; k < j; k += static_cast<std::size_t>(c))
      blocks.emplace_back(sorted_vertices.begin() + static_cast<std::ptrdiff_t>(k),
                          sorted_vertices.begin() + static_cast<std::ptrdiff_t>(k + c));
    i = j;
  }
  return blocks;
}

inline std::vector<int> with_mirrors(const std::vector<int>& half, int n) {
  std::set<int> s(half.begin(), half.end());
  for (int v : half) s.insert(2 * n + 1 - v);
  return {s.begin(), s.end()};
}

}  // namespace detail

inline std::vector<DecompComponent> decompose_of(const SeaweedDescriptor& d,
                                                 const WindingTrace& trace) {
  std::vector<DecompComponent> comps;
  for (const DeletionRecord& rec : trace.deletions) {
    DecompComponent c;
    c.kind = ComponentKind::deleted;
    c.size = rec.size;
    c.half_vertices = rec.vertices;
    c.full_vertices = detail::with_mirrors(rec.vertices, d.n);
    c.blocks = detail::chop_runs(c.full_vertices, c.size, "deleted component");
    comps.push_back(std::move(c));
  }
  for (const TerminalBlock& b : trace.blue_blocks) {
    DecompComponent c;
    c.kind = ComponentKind::tail;
    c.size = b.size;
    c.half_vertices = b.vertices;
    c.full_vertices = detail::with_mirrors(b.vertices, d.n);
    c.blocks = detail::chop_runs(c.full_vertices, c.size, "tail component");
    comps.push_back(std::move(c));
  }
  const HomotopyType h = homotopy_of(trace);
  if (h.red > 0) {
    DecompComponent c;
    c.kind = ComponentKind::aftertail;
    c.size = h.red;
    for (const auto& cls : trace.aftertail_classes)
      c.half_vertices.insert(c.half_vertices.end(), cls.begin(), cls.end());
    std::sort(c.half_vertices.begin(), c.half_vertices.end());
    for (int v = d.n - h.red / 2 + 1; v <= d.n + h.red / 2; ++v) c.full_vertices.push_back(v);
    c.blocks = {c.full_vertices};  // the single central block
    comps.push_back(std::move(c));
  }
  return comps;
}

inline std::vector<DecompComponent> decompose(const SeaweedDescriptor& d) {
  return decompose_of(d, wind_down(d));
}

// Core set: the diagonal block products I x I, one per V-block.
inline std::vector<std::vector<int>> core_set(const DecompComponent& comp) { return comp.blocks; }

// Peak set: one oriented edge per pair of distinct blocks joined by arcs.
// Arcs between a pair must agree on side (top/bottom); their orientation then
// follows from the side. Aftertail components have no peaks.
inline std::vector<PeakEdge> peak_set(const DecompComponent& comp, const Meander& full) {
  std::vector<PeakEdge> edges;
  if (comp.kind == ComponentKind::aftertail || comp.blocks.size() < 2) return edges;
  std::map<int, int> block_of;
  for (std::size_t b = 0; b < comp.blocks.size(); ++b)
    for (int v : comp.blocks[b]) block_of[v] = static_cast<int>(b);

  std::map<std::pair<int, int>, ArcSide> pair_side;
  for (const Arc& a : full.arcs) {
    auto iu = block_of.find(a.u), iv = block_of.find(a.v);
    if (iu == block_of.end() || iv == block_of.end()) continue;
    if (iu->second == iv->second) continue;  // intra-block arcs carry no edge
    const auto key = std::minmax(iu->second, iv->second);
    auto [it, inserted] = pair_side.emplace(std::pair<int, int>(key.first, key.second), a.side);
    if (!inserted && it->second != a.side)
      throw ConsistencyError("blocks joined by arcs on both sides");
  }
  for (const auto& [key, side] : pair_side) {
    // blocks are disjoint intervals, so key.first is the lower block
    PeakEdge e;
    e.side = side;
    if (side == ArcSide::top) {
      e.source = key.second;
      e.target = key.first;
    } else {
      e.source = key.first;
      e.target = key.second;
    }
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// The dotted diagonal of a peak block: r-th smallest of the source block row,
// r-th smallest of the target block column.
inline std::vector<Location> peak_diagonal(const DecompComponent& comp, const PeakEdge& e) {
  const auto& src = comp.blocks[static_cast<std::size_t>(e.source)];
  const auto& dst = comp.blocks[static_cast<std::size_t>(e.target)];
  std::vector<Location> out;
  for (std::size_t r = 0; r < src.size(); ++r) out.push_back({src[r], dst[r]});
  return out;
}

}  // namespace seaweed
