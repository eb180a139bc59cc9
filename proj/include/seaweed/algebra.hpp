#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/arith.hpp"
#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

/****************************************************************************

  Standard matrix form. A seaweed C2n a_1|...|a_m / b_1|...|b_t sits inside
  sp(2n) as the span of the lower triangle of one block-diagonal pattern and
  the upper triangle of another, where the patterns are the palindromic full
  compositions of 2n. A location (i,j) is admissible when i >= j with i,j in
  one top block, or i <= j with i,j in one bottom block.

  The anti-transpose mirror of (i,j) is (2n-j+1, 2n-i+1). The basis pairs
  each location with its mirror:

    e_{i,j} - e_{2n-j+1,2n-i+1}   i,j <= n            (upper-left pair)
    e_{i,j}                       i + j = 2n + 1      (antidiagonal)
    e_{i,j} + e_{2n-j+1,2n-i+1}   i + j < 2n + 1, one of i,j > n  (cross pair)

  Representatives are exactly the admissible locations with i + j <= 2n + 1,
  enumerated row-major, so basis order (and every matrix derived from it) is
  reproducible byte for byte.

 ****************************************************************************/

struct Location {
  int row = 0, col = 0;  // 1-based

  bool operator==(const Location&) const = default;
  auto operator<=>(const Location&) const = default;
};

inline Location mirror(Location loc, int n) {
  return {2 * n + 1 - loc.col, 2 * n + 1 - loc.row};
}

inline std::string location_str(const Location& l) {
  return "(" + std::to_string(l.row) + "," + std::to_string(l.col) + ")";
}

// Block-membership tables for admissibility tests.
class AdmissibleSet {
 public:
  explicit AdmissibleSet(const SeaweedDescriptor& d) : n_(d.n) {
    auto [ft, fb] = full_compositions(d);
    top_block_ = ft.block_ids();
    bottom_block_ = fb.block_ids();
  }

  int n() const { return n_; }
  int size() const { return 2 * n_; }

  bool contains(Location l) const {
    if (l.row < 1 || l.col < 1 || l.row > 2 * n_ || l.col > 2 * n_) return false;
    const auto r = static_cast<std::size_t>(l.row), c = static_cast<std::size_t>(l.col);
    if (l.row >= l.col && top_block_[r] == top_block_[c]) return true;
    if (l.row <= l.col && bottom_block_[r] == bottom_block_[c]) return true;
    return false;
  }

  std::vector<Location> all() const {
    std::vector<Location> out;
    for (int i = 1; i <= 2 * n_; ++i)
      for (int j = 1; j <= 2 * n_; ++j)
        if (contains({i, j})) out.push_back({i, j});
    return out;
  }

 private:
  int n_;
  std::vector<int> top_block_, bottom_block_;
};

inline std::vector<Location> admissible_locations(const SeaweedDescriptor& d) {
  return AdmissibleSet(d).all();
}

enum class BasisKind { upper_left_pair, antidiagonal, cross_pair };

struct BasisElement {
  BasisKind kind;
  Location location;  // representative, row+col <= 2n+1
  int sign = 0;       // coefficient of the mirrored unit: -1, 0 (antidiagonal), +1
};

// One element per admissible representative, row-major.
inline std::vector<BasisElement> chevalley_basis(const SeaweedDescriptor& d) {
  const AdmissibleSet adm(d);
  std::vector<BasisElement> basis;
  for (int i = 1; i <= 2 * d.n; ++i)
    for (int j = 1; j <= 2 * d.n; ++j) {
      if (i + j > 2 * d.n + 1 || !adm.contains({i, j})) continue;
      if (i + j == 2 * d.n + 1)
        basis.push_back({BasisKind::antidiagonal, {i, j}, 0});
      else if (i <= d.n && j <= d.n)
        basis.push_back({BasisKind::upper_left_pair, {i, j}, -1});
      else
        basis.push_back({BasisKind::cross_pair, {i, j}, +1});
    }
  return basis;
}

inline int dimension(const SeaweedDescriptor& d) {
  return static_cast<int>(chevalley_basis(d).size());
}

// A sparse 2n x 2n matrix with exact rational entries.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {}

  int n() const { return n_; }
  bool zero() const { return entries_.empty(); }
  const std::map<Location, Rat>& entries() const { return entries_; }

  Rat at(Location l) const {
    auto it = entries_.find(l);
    return it == entries_.end() ? Rat(0) : it->second;
  }

  void add(Location l, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = entries_.emplace(l, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [l, v] : o.entries_) add(l, v);
    return *this;
  }

  AlgebraElement& operator*=(const Rat& s) {
    if (s == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [l, v] : entries_) v *= s;
    return *this;
  }

  bool operator==(const AlgebraElement&) const = default;

 private:
  int n_ = 0;
  std::map<Location, Rat> entries_;
};

inline AlgebraElement materialize(const BasisElement& b, int n) {
  AlgebraElement x(n);
  x.add(b.location, Rat(1));
  if (b.kind != BasisKind::antidiagonal) x.add(mirror(b.location, n), Rat(b.sign));
  return x;
}

// Matrix commutator xy - yx.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n()) throw InvalidDescriptorError("bracket of elements of different ambient size");
  AlgebraElement z(x.n());
  // rows of y indexed for the product x*y, columns for y*x
  std::map<int, std::vector<std::pair<int, const Rat*>>> y_by_row, y_by_col;
  for (const auto& [l, v] : y.entries()) {
    y_by_row[l.row].emplace_back(l.col, &v);
    y_by_col[l.col].emplace_back(l.row, &v);
  }
  for (const auto& [l, v] : x.entries()) {
    if (auto it = y_by_row.find(l.col); it != y_by_row.end())
      for (const auto& [c, w] : it->second) z.add({l.row, c}, v * *w);
    if (auto it = y_by_col.find(l.row); it != y_by_col.end())
      for (const auto& [r, w] : it->second) z.add({r, l.col}, -(v * *w));
  }
  return z;
}

// Membership in the seaweed: support on admissible locations and the mirror
// sign rule (opposite sign when i,j lie on the same side of n, equal sign
// across, free on the antidiagonal).
inline bool is_member(const AlgebraElement& x, const SeaweedDescriptor& d) {
  if (x.n() != d.n) return false;
  const AdmissibleSet adm(d);
  for (const auto& [l, v] : x.entries()) {
    if (!adm.contains(l)) return false;
    if (l.row + l.col == 2 * d.n + 1) continue;
    const bool same_side = (l.row <= d.n) == (l.col <= d.n);
    const Rat m = x.at(mirror(l, d.n));
    if (same_side ? (m != -v) : (m != v)) return false;
  }
  return true;
}

// A functional written as a combination of coordinate functions e*_{i,j} over
// representatives (row+col <= 2n+1). Evaluation reads matrix entries.
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<Location, Rat>& terms() const { return terms_; }

  void add(Location l, const Rat& v) {
    if (l.row + l.col > 2 * n_ + 1)
      throw InvalidDescriptorError("one-form location below the antidiagonal: " + location_str(l));
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(l, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<Location> locations() const {
    std::vector<Location> out;
    out.reserve(terms_.size());
    for (const auto& [l, v] : terms_) out.push_back(l);
    return out;
  }

  bool operator==(const OneForm&) const = default;

 private:
  int n_ = 0;
  std::map<Location, Rat> terms_;
};

inline Rat evaluate(const OneForm& f, const AlgebraElement& x) {
  if (f.n() != x.n()) throw InvalidDescriptorError("form and element have different ambient size");
  Rat s(0);
  for (const auto& [l, v] : f.terms()) s += v * x.at(l);
  return s;
}

}  // namespace seaweed
