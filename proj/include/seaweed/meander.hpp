#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

// Arc side within a meander. Arcs above the vertex line come from the top
// composition, arcs below from the bottom one.
enum class ArcSide { top, bottom };

struct Arc {
  int u, v;  // u < v, 1-based vertex indices
  ArcSide side;

  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Planar arc diagram of a seaweed: nested arcs inside each composition block,
// plus the tail and aftertail vertex sets that drive the index formula.
//
// Every vertex meets at most one top arc and at most one bottom arc, so the
// connected components are simple paths and even cycles.
struct Meander {
  int vertex_count = 0;
  std::vector<Arc> arcs;            // sorted
  std::set<int> tail;               // blue vertices
  std::set<int> aftertail;          // red vertices

  std::vector<Arc> top_arcs() const {
    std::vector<Arc> r;
    for (const Arc& a : arcs)
      if (a.side == ArcSide::top) r.push_back(a);
    return r;
  }
  std::vector<Arc> bottom_arcs() const {
    std::vector<Arc> r;
    for (const Arc& a : arcs)
      if (a.side == ArcSide::bottom) r.push_back(a);
    return r;
  }
  bool has_arc(int u, int v, ArcSide side) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(arcs.begin(), arcs.end(), Arc{u, v, side});
  }
};

struct ComponentInfo {
  std::vector<int> vertices;  // sorted
  bool is_cycle = false;
  std::vector<int> endpoints;         // the (<= 2) degree-<=1 vertices; a lone
                                      // vertex is a path whose single endpoint
                                      // is itself
  int tail_endpoint_count = 0;        // distinct endpoint vertices in the tail
};

namespace detail {

// Nested arcs {l+t, r-t} inside each block of the composition, blocks laid out
// from `first` onward. Odd blocks leave their middle vertex bare.
inline void add_block_arcs(std::vector<Arc>& arcs, const std::vector<int>& parts, ArcSide side,
                           int first = 1) {
  int lo = first;
  for (int p : parts) {
    const int hi = lo + p - 1;
    for (int t = 0; lo + t < hi - t; ++t) arcs.push_back(Arc{lo + t, hi - t, side});
    lo = hi + 1;
  }
}

}  // namespace detail

// The n-vertex meander of a seaweed. Arcs are drawn in the listed blocks of
// both partial compositions. With s_a, s_b the composition sums,
// T_a = { i : s_a < i <= n } and T_b likewise; the tail is the symmetric
// difference and the aftertail the intersection.
inline Meander build_meander(const SeaweedDescriptor& d) {
  Meander m;
  m.vertex_count = d.n;
  detail::add_block_arcs(m.arcs, d.top.parts, ArcSide::top);
  detail::add_block_arcs(m.arcs, d.bottom.parts, ArcSide::bottom);
  std::sort(m.arcs.begin(), m.arcs.end());
  const int sa = d.top.sum(), sb = d.bottom.sum();
  for (int i = std::min(sa, sb) + 1; i <= d.n; ++i) {
    const bool in_a = i > sa, in_b = i > sb;
    if (in_a && in_b)
      m.aftertail.insert(i);
    else if (in_a || in_b)
      m.tail.insert(i);
  }
  return m;
}

// The 2n-vertex meander of the palindromic full compositions. Tail and
// aftertail are extended by their mirror images 2n+1-i.
inline Meander build_full_meander(const SeaweedDescriptor& d) {
  Meander half = build_meander(d);
  Meander m;
  m.vertex_count = 2 * d.n;
  auto [ft, fb] = full_compositions(d);
  detail::add_block_arcs(m.arcs, ft.parts, ArcSide::top);
  detail::add_block_arcs(m.arcs, fb.parts, ArcSide::bottom);
  std::sort(m.arcs.begin(), m.arcs.end());
  for (int v : half.tail) {
    m.tail.insert(v);
    m.tail.insert(2 * d.n + 1 - v);
  }
  for (int v : half.aftertail) {
    m.aftertail.insert(v);
    m.aftertail.insert(2 * d.n + 1 - v);
  }
  return m;
}

// Connected components under arc adjacency, classified as cycles or paths.
inline std::vector<ComponentInfo> components(const Meander& m) {
  const int n = m.vertex_count;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Arc& a : m.arcs) {
    adj[static_cast<std::size_t>(a.u)].push_back(a.v);
    adj[static_cast<std::size_t>(a.v)].push_back(a.u);
  }
  std::vector<ComponentInfo> out;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ComponentInfo c;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    for (int v : c.vertices)
      if (adj[static_cast<std::size_t>(v)].size() <= 1) c.endpoints.push_back(v);
    c.is_cycle = c.endpoints.empty();
    for (int v : c.endpoints)
      if (m.tail.count(v)) ++c.tail_endpoint_count;
    out.push_back(std::move(c));
  }
  return out;
}

// Combinatorial index formula: twice the number of cycles plus the number of
// paths having zero or two distinct endpoints in the tail, evaluated on the
// n-vertex meander. A lone vertex is a path with one endpoint (itself).
inline int index_via_meander_of(const Meander& m) {
  int cycles = 0, counted_paths = 0;
  for (const ComponentInfo& c : components(m)) {
    if (c.is_cycle)
      ++cycles;
    else if (c.tail_endpoint_count == 0 || c.tail_endpoint_count == 2)
      ++counted_paths;
  }
  return 2 * cycles + counted_paths;
}

inline int index_via_meander(const SeaweedDescriptor& d) {
  return index_via_meander_of(build_meander(d));
}

}  // namespace seaweed
