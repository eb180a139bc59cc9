#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/errors.hpp"

namespace seaweed {

// A partial composition of n: an ordered list of positive parts whose sum is
// at most n. The empty list is allowed.
struct PartialComposition {
  std::vector<int> parts;
  int n = 0;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  void validate() const {
    if (n <= 0) throw InvalidDescriptorError("ambient half-rank must be positive");
    for (int p : parts)
      if (p <= 0) throw InvalidDescriptorError("composition parts must be positive");
    if (sum() > n)
      throw InvalidDescriptorError("composition parts sum to " + std::to_string(sum()) +
                                   " > " + std::to_string(n));
  }

  bool operator==(const PartialComposition&) const = default;
};

// The palindromic expansion of a partial composition of n to a composition of
// 2n: a_1,...,a_m, 2(n - sum), a_m,...,a_1 with a zero middle part dropped.
struct FullComposition {
  std::vector<int> parts;  // positive, palindromic, summing to 2n

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  bool is_palindrome() const {
    return std::equal(parts.begin(), parts.end(), parts.rbegin());
  }

  // block_id[v] for v = 1..2n (index 0 unused).
  std::vector<int> block_ids() const {
    std::vector<int> ids(static_cast<std::size_t>(sum()) + 1, -1);
    int v = 1;
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int k = 0; k < parts[b]; ++k) ids[static_cast<std::size_t>(v++)] = static_cast<int>(b);
    return ids;
  }

  // Half-open vertex intervals [lo, hi] of each block, 1-based.
  std::vector<std::pair<int, int>> block_ranges() const {
    std::vector<std::pair<int, int>> r;
    int v = 1;
    for (int p : parts) {
      r.emplace_back(v, v + p - 1);
      v += p;
    }
    return r;
  }

  bool operator==(const FullComposition&) const = default;
};

inline FullComposition expand_to_full(const PartialComposition& c) {
  FullComposition f;
  f.parts = c.parts;
  const int middle = 2 * (c.n - c.sum());
  if (middle > 0) f.parts.push_back(middle);
  f.parts.insert(f.parts.end(), c.parts.rbegin(), c.parts.rend());
  return f;
}

// A type-C seaweed in standard form, named by two partial compositions of n.
// The ambient matrix algebra is sp(2n) realized on 2n x 2n matrices.
struct SeaweedDescriptor {
  int n = 0;
  PartialComposition top;
  PartialComposition bottom;

  SeaweedDescriptor() = default;
  SeaweedDescriptor(int n_, std::vector<int> top_parts, std::vector<int> bottom_parts)
      : n(n_), top{std::move(top_parts), n_}, bottom{std::move(bottom_parts), n_} {
    validate();
  }

  void validate() const {
    if (top.n != n || bottom.n != n)
      throw InvalidDescriptorError("composition half-ranks disagree with descriptor");
    top.validate();
    bottom.validate();
  }

  int matrix_size() const { return 2 * n; }

  bool operator==(const SeaweedDescriptor&) const = default;
  auto operator<=>(const SeaweedDescriptor&) const = default;
};

inline std::pair<FullComposition, FullComposition> full_compositions(const SeaweedDescriptor& d) {
  return {expand_to_full(d.top), expand_to_full(d.bottom)};
}

inline std::string composition_str(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(parts[i]);
  }
  return s;
}

// Canonical notation, e.g. "C16 2|3 / 1|6"; empty compositions print as "-".
inline std::string notation(const SeaweedDescriptor& d) {
  return "C" + std::to_string(2 * d.n) + " " + composition_str(d.top.parts) + " / " +
         composition_str(d.bottom.parts);
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline long parse_int(const std::string& s, std::size_t& i, const char* what) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError(std::string("expected ") + what, i);
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) throw ParseError("integer too large", i);
    ++i;
  }
  return v;
}

inline std::vector<int> parse_comp(const std::string& s, std::size_t& i) {
  // "-" denotes the empty composition; a UTF-8 empty-set sign is tolerated.
  if (i < s.size() && s[i] == '-') {
    ++i;
    return {};
  }
  if (i < s.size() && static_cast<unsigned char>(s[i]) >= 0x80u) {
    while (i < s.size() && static_cast<unsigned char>(s[i]) >= 0x80u) ++i;
    return {};
  }
  std::vector<int> parts;
  parts.push_back(static_cast<int>(parse_int(s, i, "composition part")));
  while (i < s.size() && s[i] == '|') {
    ++i;
    parts.push_back(static_cast<int>(parse_int(s, i, "composition part")));
  }
  return parts;
}

}  // namespace detail

// Grammar: seaweed := "C" INT WS comp WS? "/" WS? comp
//          comp    := "-" | INT ("|" INT)*
// The leading integer is the matrix size 2n and must be even.
inline SeaweedDescriptor parse_descriptor(const std::string& text) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i >= text.size() || (text[i] != 'C' && text[i] != 'c'))
    throw ParseError("expected leading 'C'", i);
  ++i;
  const long size = detail::parse_int(text, i, "matrix size after 'C'");
  if (size <= 0 || size % 2 != 0) throw ParseError("matrix size must be a positive even integer", i);
  detail::skip_ws(text, i);
  std::vector<int> top = detail::parse_comp(text, i);
  detail::skip_ws(text, i);
  if (i >= text.size() || text[i] != '/') throw ParseError("expected '/'", i);
  ++i;
  detail::skip_ws(text, i);
  std::vector<int> bottom = detail::parse_comp(text, i);
  detail::skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing input", i);

  const int n = static_cast<int>(size / 2);
  auto check_side = [&](const std::vector<int>& parts, const char* side) {
    long s = 0;
    for (int p : parts) s += p;
    if (s > n)
      throw InvalidDescriptorError(std::string(side) + " composition sums to " +
                                   std::to_string(s) + " > " + std::to_string(n));
  };
  check_side(top, "top");
  check_side(bottom, "bottom");
  return SeaweedDescriptor(n, std::move(top), std::move(bottom));
}

}  // namespace seaweed
