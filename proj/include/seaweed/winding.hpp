#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/meander.hpp"

namespace seaweed {

/****************************************************************************

  Winding-down. A meander of fractional form a_1|...|a_m / b_1|...|b_t is
  contracted by five deterministic moves, dispatched on a_1 vs b_1:

    P  a_1 > 2 b_1        ->  (a_1 - 2 b_1) | b_1 | a_2 ... / b_2 ...
    B  a_1 = 2 b_1        ->  b_1 | a_2 ...             / b_2 ...
    R  b_1 < a_1 < 2 b_1  ->  b_1 | a_2 ...             / (2 b_1 - a_1) | b_2 ...
    C  a_1 = b_1 = c      ->  a_2 ...                   / b_2 ...   (deletes c classes)
    F  a_1 < b_1          ->  swap the two compositions

  The process ends when the denominator is empty. Alongside the composition
  action we track vertex classes: each contraction with a_1 >= b_1 folds the
  leading d = min(b_1, a_1 - b_1) positions onto positions a_1+1-i and drops
  them, so every live position carries the set of original vertices identified
  into it. A C(c) move deletes the leading c classes outright, which is always
  a union of whole components of the original meander.

  Tie convention at a_1 = b_1: the side comparison is extended
  lexicographically, flipping first when the numerator compares smaller, so
  e.g. 2|1|3|1|1 / 2|10 flips before C(2) fires. This reproduces the
  published signatures and never loops (after such a flip the numerator
  compares larger and C fires immediately).

 ****************************************************************************/

enum class MoveTag { P, B, R, C, F };

struct Move {
  MoveTag tag;
  int parameter = 0;  // b1 for P/B, a1-b1 for R, c for C, 0 for F

  bool operator==(const Move&) const = default;
};

inline std::string move_str(const Move& m) {
  switch (m.tag) {
    case MoveTag::P: return "P";
    case MoveTag::B: return "B";
    case MoveTag::R: return "R";
    case MoveTag::C: return "C(" + std::to_string(m.parameter) + ")";
    case MoveTag::F: return "F";
  }
  return "?";
}

inline std::string signature_str(const std::vector<Move>& moves) {
  std::string s;
  for (const Move& m : moves) s += move_str(m);
  return s;
}

// Winding state: part lists plus the live vertex classes, one class per
// position, each holding the original 1-based vertex indices folded into it.
struct FractionalForm {
  std::vector<int> top, bottom;
  std::vector<std::vector<int>> classes;

  bool terminal() const { return bottom.empty(); }
  int class_count() const { return static_cast<int>(classes.size()); }

  static FractionalForm of(const SeaweedDescriptor& d) {
    FractionalForm f;
    f.top = d.top.parts;
    f.bottom = d.bottom.parts;
    f.classes.resize(static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.n; ++i) f.classes[static_cast<std::size_t>(i - 1)] = {i};
    return f;
  }
};

struct DeletionRecord {
  int move_index = 0;          // 0-based position in the signature
  std::vector<int> vertices;   // sorted union of the deleted classes
  int size = 0;                // the parameter c
};

// Terminal data of a winding: the homotopy type plus the original-vertex
// content of each terminal block.
struct HomotopyType {
  std::vector<int> deleted;  // C-move sizes, in move order
  std::vector<int> blue;     // terminal numerator parts
  int red = 0;               // 2 * (terminal class count - sum(blue)), even

  bool operator==(const HomotopyType&) const = default;
};

inline std::string homotopy_str(const HomotopyType& h) {
  std::string s = "H_C(";
  bool first = true;
  auto app = [&](const std::string& x) {
    if (!first) s += ",";
    s += x;
    first = false;
  };
  for (int c : h.deleted) app(std::to_string(c));
  for (int c : h.blue) app(std::to_string(c));
  app(std::to_string(h.red));
  return s + ")";
}

struct TerminalBlock {
  int size = 0;                // blue part
  std::vector<int> vertices;   // sorted union of its classes (half-meander ids)
};

struct WindingTrace {
  std::vector<Move> moves;
  std::vector<DeletionRecord> deletions;
  FractionalForm terminal;
  std::vector<TerminalBlock> blue_blocks;
  std::vector<std::vector<int>> aftertail_classes;  // singletons, rightmost vertices
};

namespace detail {

// numerator <lex denominator, treating a proper prefix as smaller
inline bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

// One winding move. Precondition: !f.terminal().
inline std::pair<Move, FractionalForm> wind_step(const FractionalForm& f) {
  if (f.terminal()) throw ConsistencyError("wind_step on terminal form");
  FractionalForm g = f;

  const bool flip = f.top.empty() || f.top[0] < f.bottom[0] ||
                    (f.top[0] == f.bottom[0] && detail::lex_less(f.top, f.bottom));
  if (flip) {
    std::swap(g.top, g.bottom);
    return {Move{MoveTag::F, 0}, std::move(g)};
  }

  const int a1 = f.top[0], b1 = f.bottom[0];
  if (a1 == b1) {
    g.top.erase(g.top.begin());
    g.bottom.erase(g.bottom.begin());
    g.classes.erase(g.classes.begin(), g.classes.begin() + a1);
    return {Move{MoveTag::C, a1}, std::move(g)};
  }

  // Contraction: fold positions 1..d onto a_1+1-i, then drop them.
  const int d = std::min(b1, a1 - b1);
  for (int i = 1; i <= d; ++i) {
    auto& dst = g.classes[static_cast<std::size_t>(a1 - i)];
    auto& src = g.classes[static_cast<std::size_t>(i - 1)];
    dst.insert(dst.end(), src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
  }
  g.classes.erase(g.classes.begin(), g.classes.begin() + d);
  g.bottom.erase(g.bottom.begin());
  if (a1 > 2 * b1) {
    g.top[0] = a1 - 2 * b1;
    g.top.insert(g.top.begin() + 1, b1);
    return {Move{MoveTag::P, b1}, std::move(g)};
  }
  if (a1 == 2 * b1) {
    g.top[0] = b1;
    return {Move{MoveTag::B, b1}, std::move(g)};
  }
  g.top[0] = b1;
  g.bottom.insert(g.bottom.begin(), 2 * b1 - a1);
  return {Move{MoveTag::R, a1 - b1}, std::move(g)};
}

inline WindingTrace wind_down(const SeaweedDescriptor& d) {
  WindingTrace t;
  FractionalForm f = FractionalForm::of(d);
  while (!f.terminal()) {
    auto [mv, next] = wind_step(f);
    if (mv.tag == MoveTag::C) {
      DeletionRecord rec;
      rec.move_index = static_cast<int>(t.moves.size());
      rec.size = mv.parameter;
      for (int i = 0; i < mv.parameter; ++i) {
        const auto& cls = f.classes[static_cast<std::size_t>(i)];
        rec.vertices.insert(rec.vertices.end(), cls.begin(), cls.end());
      }
      std::sort(rec.vertices.begin(), rec.vertices.end());
      t.deletions.push_back(std::move(rec));
    }
    t.moves.push_back(mv);
    f = std::move(next);
  }
  t.terminal = std::move(f);

  int pos = 0;
  for (int part : t.terminal.top) {
    TerminalBlock b;
    b.size = part;
    for (int i = 0; i < part; ++i) {
      const auto& cls = t.terminal.classes[static_cast<std::size_t>(pos + i)];
      b.vertices.insert(b.vertices.end(), cls.begin(), cls.end());
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    pos += part;
    t.blue_blocks.push_back(std::move(b));
  }
  for (std::size_t i = static_cast<std::size_t>(pos); i < t.terminal.classes.size(); ++i) {
    if (t.terminal.classes[i].size() != 1)
      throw ConsistencyError("aftertail class is not a single vertex");
    t.aftertail_classes.push_back(t.terminal.classes[i]);
  }
  return t;
}

inline std::vector<Move> signature(const SeaweedDescriptor& d) { return wind_down(d).moves; }

inline HomotopyType homotopy_of(const WindingTrace& t) {
  HomotopyType h;
  for (const Move& m : t.moves)
    if (m.tag == MoveTag::C) h.deleted.push_back(m.parameter);
  h.blue = t.terminal.top;
  const int blue_sum = std::accumulate(h.blue.begin(), h.blue.end(), 0);
  h.red = 2 * (t.terminal.class_count() - blue_sum);
  if (h.red < 0) throw ConsistencyError("negative residual in homotopy type");
  return h;
}

inline HomotopyType homotopy_type(const SeaweedDescriptor& d) { return homotopy_of(wind_down(d)); }

// Index in terms of the homotopy type: deleted sizes count in full, blue
// parts contribute floor(c/2), and the residual contributes red/2.
inline int index_via_homotopy(const HomotopyType& h) {
  int idx = std::accumulate(h.deleted.begin(), h.deleted.end(), 0);
  for (int c : h.blue) idx += c / 2;
  return idx + h.red / 2;
}

enum class ContactCase { none, c1a, c1b, c2, c3 };

inline std::string contact_case_str(ContactCase c) {
  switch (c) {
    case ContactCase::c1a: return "1a";
    case ContactCase::c1b: return "1b";
    case ContactCase::c2: return "2";
    case ContactCase::c3: return "3";
    case ContactCase::none: return "none";
  }
  return "none";
}

// Index-one classification by homotopy type. Lists of blue ones may be empty.
//   1a  all blue, exactly one 2, rest 1
//   1b  all blue, exactly one 3, rest 1
//   2   blue all 1, residual 2
//   3   one deleted 1, blue all 1, residual 0
inline ContactCase classify_index_one(const HomotopyType& h) {
  const bool blue_all_ones = std::all_of(h.blue.begin(), h.blue.end(), [](int c) { return c == 1; });
  if (h.deleted.empty() && h.red == 0) {
    int twos = 0, threes = 0, others = 0;
    for (int c : h.blue) {
      if (c == 2) ++twos;
      else if (c == 3) ++threes;
      else if (c != 1) ++others;
    }
    if (others == 0 && twos == 1 && threes == 0) return ContactCase::c1a;
    if (others == 0 && twos == 0 && threes == 1) return ContactCase::c1b;
    return ContactCase::none;
  }
  if (h.deleted.empty() && h.red == 2 && blue_all_ones) return ContactCase::c2;
  if (h.deleted == std::vector<int>{1} && h.red == 0 && blue_all_ones) return ContactCase::c3;
  return ContactCase::none;
}

inline std::vector<DeletionRecord> deletion_records(const SeaweedDescriptor& d) {
  return wind_down(d).deletions;
}

}  // namespace seaweed
