#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/algebra.hpp"
#include "seaweed/decomposition.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

/****************************************************************************

  Regular one-forms. The construction reads the decomposition:

    tail component of size c      a triangle of dots of height floor(c/2) in
                                  the upper-left corner of each core block,
                                  and the diagonal of each peak block
    aftertail component           a triangle of height c/2 in its single
                                  core block, no peaks
    deleted component             dots on and above the antidiagonal of each
                                  core block, and the diagonal of each peak
                                  block

  all filtered to row+col <= 2n+1. A triangle of height h holds the local
  positions (r,s) with r+s <= h+1; "on and above the block antidiagonal"
  holds (r,s) with r+s <= c+1. Every dot carries coefficient one.

  On index-one seaweeds the construction specializes: the two homotopy types
  with an explicit closed formula (cases 2 and 3 below) are asserted to agree
  with the general construction, and each case has a combinatorially
  described kernel generator that is certified downstream.

 ****************************************************************************/

enum class DotRole { core, peak };

struct DotPlacement {
  Location location;
  int component = 0;  // index into decompose(d)
  DotRole role = DotRole::core;
};

struct FormConstruction {
  OneForm form;
  std::vector<DotPlacement> dots;  // provenance, pre-filter locations omitted
};

namespace detail {

inline void place_dot(FormConstruction& fc, const AdmissibleSet& adm, Location l, int comp,
                      DotRole role) {
  if (l.row + l.col > 2 * adm.n() + 1) return;  // mirror-redundant, dropped
  if (!adm.contains(l))
    throw ConsistencyError("dot at inadmissible location " + location_str(l));
  if (fc.form.terms().count(l))
    throw ConsistencyError("duplicate dot at " + location_str(l));
  fc.form.add(l, Rat(1));
  fc.dots.push_back({l, comp, role});
}

}  // namespace detail

inline FormConstruction dougherty_construction(const SeaweedDescriptor& d) {
  const AdmissibleSet adm(d);
  const Meander full = build_full_meander(d);
  const auto comps = decompose(d);
  FormConstruction fc;
  fc.form = OneForm(d.n);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const DecompComponent& comp = comps[ci];
    const int c = comp.size;
    const int height = comp.kind == ComponentKind::deleted ? c : c / 2;
    for (const auto& block : comp.blocks)
      for (int r = 1; r <= c; ++r)
        for (int s = 1; s + r <= height + 1; ++s)
          detail::place_dot(fc, adm,
                            {block[static_cast<std::size_t>(r - 1)],
                             block[static_cast<std::size_t>(s - 1)]},
                            static_cast<int>(ci), DotRole::core);
    for (const PeakEdge& e : peak_set(comp, full))
      for (Location l : peak_diagonal(comp, e))
        detail::place_dot(fc, adm, l, static_cast<int>(ci), DotRole::peak);
  }
  return fc;
}

// The index-agnostic regular one-form of the general construction.
inline OneForm dougherty_form(const SeaweedDescriptor& d) {
  return dougherty_construction(d).form;
}

struct KernelGenerator {
  AlgebraElement element;
  ContactCase contact_case = ContactCase::none;
};

namespace detail {

// Oriented full-meander edges: top arcs run high to low, bottom arcs low to
// high.
inline std::vector<Location> oriented_edges(const Meander& full) {
  std::vector<Location> out;
  for (const Arc& a : full.arcs)
    out.push_back(a.side == ArcSide::top ? Location{a.v, a.u} : Location{a.u, a.v});
  return out;
}

inline ComponentInfo unique_cycle(const Meander& full) {
  std::vector<ComponentInfo> cycles;
  for (ComponentInfo& c : components(full))
    if (c.is_cycle) cycles.push_back(std::move(c));
  if (cycles.size() != 1)
    throw ConsistencyError("expected a unique cycle in the full meander, found " +
                           std::to_string(cycles.size()));
  return cycles.front();
}

}  // namespace detail

// Alternating diagonal sum over the unique full-meander cycle, normalized to
// coefficient +1 at the smallest cycle vertex. The alternation is along the
// cycle, so the assignment is the 2-coloring of the cycle's bipartition.
inline KernelGenerator case1_kernel(const SeaweedDescriptor& d, ContactCase cas) {
  const Meander full = build_full_meander(d);
  const ComponentInfo cyc = detail::unique_cycle(full);
  std::map<int, std::vector<int>> adj;
  for (const Arc& a : full.arcs) {
    adj[a.u].push_back(a.v);
    adj[a.v].push_back(a.u);
  }
  const int start = cyc.vertices.front();
  std::map<int, int> sign{{start, +1}};
  int prev = start, cur = adj[start][0];
  int s = -1;
  while (cur != start) {
    sign[cur] = s;
    s = -s;
    const auto& nb = adj[cur];
    const int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  KernelGenerator k;
  k.contact_case = cas;
  k.element = AlgebraElement(d.n);
  for (const auto& [v, sg] : sign) k.element.add({v, v}, Rat(sg));
  if (!is_member(k.element, d))
    throw ConsistencyError("cycle kernel generator is not a seaweed member");
  return k;
}

// e*_{n,n} plus the oriented full-meander edges meeting the first n-1
// columns/rows.
inline OneForm case2_form(const SeaweedDescriptor& d) {
  OneForm f(d.n);
  f.add({d.n, d.n}, Rat(1));
  for (Location e : detail::oriented_edges(build_full_meander(d)))
    if (e.row <= d.n - 1 || e.col <= d.n - 1) f.add(e, Rat(1));
  return f;
}

inline KernelGenerator case2_kernel(const SeaweedDescriptor& d) {
  KernelGenerator k;
  k.contact_case = ContactCase::c2;
  k.element = AlgebraElement(d.n);
  k.element.add({d.n, d.n}, Rat(1));
  k.element.add({d.n + 1, d.n + 1}, Rat(-1));
  return k;
}

namespace detail {

// The unique half-meander path with no endpoint in the tail.
inline ComponentInfo zero_tail_path(const SeaweedDescriptor& d) {
  std::vector<ComponentInfo> hits;
  for (ComponentInfo& c : components(build_meander(d)))
    if (!c.is_cycle && c.tail_endpoint_count == 0) hits.push_back(std::move(c));
  if (hits.size() != 1)
    throw ConsistencyError("expected a unique zero-tail path, found " +
                           std::to_string(hits.size()));
  return hits.front();
}

}  // namespace detail

// Diagonal dots over the distinguished path plus the oriented full-meander
// edges meeting the first n columns/rows.
inline OneForm case3_form(const SeaweedDescriptor& d) {
  OneForm f(d.n);
  for (int v : detail::zero_tail_path(d).vertices) f.add({v, v}, Rat(1));
  for (Location e : detail::oriented_edges(build_full_meander(d)))
    if (e.row <= d.n || e.col <= d.n) f.add(e, Rat(1));
  return f;
}

inline KernelGenerator case3_kernel(const SeaweedDescriptor& d) {
  KernelGenerator k;
  k.contact_case = ContactCase::c3;
  k.element = AlgebraElement(d.n);
  for (int v : detail::zero_tail_path(d).vertices) {
    k.element.add({v, v}, Rat(1));
    k.element.add({2 * d.n + 1 - v, 2 * d.n + 1 - v}, Rat(-1));
  }
  return k;
}

// The contact form of an index-one seaweed together with its kernel
// generator. Cases 2 and 3 carry closed formulas; both are asserted equal to
// the general construction.
inline std::pair<OneForm, KernelGenerator> contact_form(const SeaweedDescriptor& d) {
  const int index = index_via_meander(d);
  if (index != 1) throw IndexNotOneError(index);
  const ContactCase cas = classify_index_one(homotopy_type(d));
  OneForm general = dougherty_form(d);
  switch (cas) {
    case ContactCase::c1a:
    case ContactCase::c1b:
      return {std::move(general), case1_kernel(d, cas)};
    case ContactCase::c2: {
      OneForm f = case2_form(d);
      if (!(f == general))
        throw ConsistencyError("case-2 formula disagrees with the general construction");
      return {std::move(f), case2_kernel(d)};
    }
    case ContactCase::c3: {
      OneForm f = case3_form(d);
      if (!(f == general))
        throw ConsistencyError("case-3 formula disagrees with the general construction");
      return {std::move(f), case3_kernel(d)};
    }
    case ContactCase::none:
      break;
  }
  throw ConsistencyError("index-one seaweed fell outside the homotopy classification");
}

}  // namespace seaweed
