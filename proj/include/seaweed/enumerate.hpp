#pragma once

#include <algorithm>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

// Every partial composition of n (parts positive, sum <= n, empty included),
// in lexicographic order of the part lists.
inline std::vector<std::vector<int>> all_partial_compositions(int n) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      out.push_back(cur);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

// Every seaweed with half-rank exactly n, ordered lexicographically by
// (top, bottom).
inline std::vector<SeaweedDescriptor> all_descriptors(int n) {
  const auto comps = all_partial_compositions(n);
  std::vector<SeaweedDescriptor> out;
  out.reserve(comps.size() * comps.size());
  for (const auto& top : comps)
    for (const auto& bottom : comps) out.emplace_back(n, top, bottom);
  return out;
}

}  // namespace seaweed
