#pragma once

/// Trivalent diagrams as pairs of permutations on edge labels {1..n}.
///
/// A diagram of size n is fully described by two image tables: `s0` for the
/// black permutation (order dividing 3) and `s1` for the white permutation
/// (an involution). Position i-1 of a table holds the image of label i.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/error.hpp"

namespace trivalent {

using edge_t = std::uint32_t;

/// Non-owning view over a diagram's tables. No invariants are checked.
struct DiagramView {
  std::size_t n = 0;
  std::span<const edge_t> s0;
  std::span<const edge_t> s1;

  edge_t black(edge_t a) const { return s0[a - 1]; }
  edge_t white(edge_t a) const { return s1[a - 1]; }
};

class Diagram;
Diagram validate(std::size_t n, std::span<const edge_t> s0,
                 std::span<const edge_t> s1);

/// A validated diagram. Only obtainable through `validate`, so every instance
/// satisfies the permutation, order, involution and transitivity axioms.
class Diagram {
public:
  std::size_t size() const { return s0_.size(); }
  const std::vector<edge_t> &s0() const { return s0_; }
  const std::vector<edge_t> &s1() const { return s1_; }
  edge_t black(edge_t a) const { return s0_[a - 1]; }
  edge_t white(edge_t a) const { return s1_[a - 1]; }

  DiagramView view() const { return {s0_.size(), s0_, s1_}; }
  operator DiagramView() const { return view(); }

  bool operator==(const Diagram &) const = default;

private:
  friend Diagram validate(std::size_t, std::span<const edge_t>,
                          std::span<const edge_t>);
  Diagram(std::vector<edge_t> s0, std::vector<edge_t> s1)
      : s0_(std::move(s0)), s1_(std::move(s1)) {}

  std::vector<edge_t> s0_;
  std::vector<edge_t> s1_;
};

/// Breadth-first search from edge 1 along both permutations. O(n), no
/// recursion. Tables must already be permutations of {1..n}.
inline bool is_transitive(std::span<const edge_t> s0,
                          std::span<const edge_t> s1) {
  const std::size_t n = s0.size();
  if (n == 0)
    return false;
  std::vector<char> seen(n + 1, 0);
  std::vector<edge_t> work;
  work.reserve(n);
  work.push_back(1);
  seen[1] = 1;
  std::size_t reached = 1;
  while (!work.empty()) {
    const edge_t a = work.back();
    work.pop_back();
    for (edge_t b : {s0[a - 1], s1[a - 1]}) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        work.push_back(b);
      }
    }
  }
  return reached == n;
}

namespace detail {

inline void check_permutation(std::span<const edge_t> s, const char *name) {
  const std::size_t n = s.size();
  std::vector<char> hit(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const edge_t v = s[i - 1];
    if (v < 1 || v > n)
      throw error(errc::invalid_input, i,
                  std::string(name) + "[" + std::to_string(i) + "] = " +
                      std::to_string(v) + " is outside 1.." +
                      std::to_string(n));
    if (hit[v])
      throw error(errc::not_permutation, i,
                  std::string(name) + " repeats value " + std::to_string(v) +
                      " at index " + std::to_string(i));
    hit[v] = 1;
  }
}

} // namespace detail

/// Checks the four diagram axioms in order and reports the first violation.
inline Diagram validate(std::size_t n, std::span<const edge_t> s0,
                        std::span<const edge_t> s1) {
  if (n == 0)
    throw error(errc::invalid_input, 0, "empty diagram");
  if (s0.size() != n || s1.size() != n)
    throw error(errc::invalid_input, 0,
                "table length differs from n = " + std::to_string(n));
  detail::check_permutation(s0, "s0");
  detail::check_permutation(s1, "s1");
  for (std::size_t i = 1; i <= n; ++i) {
    if (s0[s0[s0[i - 1] - 1] - 1] != i)
      throw error(errc::order_three_violated, i,
                  "s0^3 does not fix edge " + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (s1[s1[i - 1] - 1] != i)
      throw error(errc::involution_violated, i,
                  "s1^2 does not fix edge " + std::to_string(i));
  }
  if (!is_transitive(s0, s1)) {
    // Name the first edge outside the orbit of edge 1.
    std::vector<char> seen(n + 1, 0);
    std::vector<edge_t> work{1};
    seen[1] = 1;
    while (!work.empty()) {
      const edge_t a = work.back();
      work.pop_back();
      for (edge_t b : {s0[a - 1], s1[a - 1]})
        if (!seen[b]) {
          seen[b] = 1;
          work.push_back(b);
        }
    }
    std::size_t orbit = 0, first_out = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (seen[i])
        ++orbit;
      else if (!first_out)
        first_out = i;
    }
    throw error(errc::not_transitive, first_out,
                "orbit of edge 1 has " + std::to_string(orbit) + " of " +
                    std::to_string(n) + " edges; edge " +
                    std::to_string(first_out) + " is unreachable");
  }
  return Diagram(std::vector<edge_t>(s0.begin(), s0.end()),
                 std::vector<edge_t>(s1.begin(), s1.end()));
}

inline Diagram validate(const DiagramView &v) { return validate(v.n, v.s0, v.s1); }

inline Diagram validate(std::vector<edge_t> s0, std::vector<edge_t> s1) {
  return validate(s0.size(), s0, s1);
}

// --- modular group action ---------------------------------------------------

/// Elementary moves of the modular group on edges: A = white, B = black,
/// T = A followed by B^-1.
enum class Move { A, B, T };

inline edge_t apply_move(const DiagramView &d, edge_t a, Move m) {
  switch (m) {
  case Move::A:
    return d.white(a);
  case Move::B:
    return d.black(a);
  case Move::T:
    // black has order dividing 3, so its inverse is its square
    return d.black(d.black(d.white(a)));
  }
  return a;
}

// --- triangular map statistics ---------------------------------------------

struct MapStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler = 0;
  long genus = 0;

  bool operator==(const MapStats &) const = default;
};

/// True iff neither permutation has a fixed point.
inline bool is_regular(const DiagramView &d) {
  for (std::size_t i = 1; i <= d.n; ++i)
    if (d.black(static_cast<edge_t>(i)) == i ||
        d.white(static_cast<edge_t>(i)) == i)
      return false;
  return true;
}

namespace detail {

template <class Step>
std::size_t count_orbits(std::size_t n, Step step) {
  std::vector<char> seen(n + 1, 0);
  std::size_t orbits = 0;
  for (edge_t a = 1; a <= n; ++a) {
    if (seen[a])
      continue;
    ++orbits;
    for (edge_t b = a; !seen[b]; b = step(b))
      seen[b] = 1;
  }
  return orbits;
}

} // namespace detail

/// Vertices are T-orbits, edges are white cycles and faces are black cycles
/// of the triangular map carried by a regular diagram.
inline MapStats map_stats(const DiagramView &d) {
  for (edge_t i = 1; i <= d.n; ++i) {
    if (d.black(i) == i || d.white(i) == i)
      throw error(errc::not_regular, i,
                  "edge " + std::to_string(i) + " is a fixed point");
  }
  MapStats st;
  st.vertices = detail::count_orbits(d.n, [&](edge_t a) { return apply_move(d, a, Move::T); });
  st.edges = detail::count_orbits(d.n, [&](edge_t a) { return d.white(a); });
  st.faces = detail::count_orbits(d.n, [&](edge_t a) { return d.black(a); });
  st.euler = static_cast<long>(st.vertices) - static_cast<long>(st.edges) +
             static_cast<long>(st.faces);
  st.genus = (2 - st.euler) / 2;
  return st;
}

// --- text line format ---------------------------------------------------------
// n<TAB>s0[1] ... s0[n]<TAB>s1[1] ... s1[n]<LF>

inline void write_line(std::ostream &os, const DiagramView &d) {
  std::string buf;
  buf.reserve(8 * d.n + 8);
  buf += std::to_string(d.n);
  for (const auto *table : {&d.s0, &d.s1}) {
    buf += '\t';
    for (std::size_t i = 0; i < d.n; ++i) {
      if (i)
        buf += ' ';
      buf += std::to_string((*table)[i]);
    }
  }
  buf += '\n';
  os << buf;
}

inline std::string format_line(const DiagramView &d) {
  std::ostringstream os;
  write_line(os, d);
  return os.str();
}

/// Parses one line (with or without its trailing LF) and validates it.
inline Diagram parse_line(std::string_view line) {
  if (!line.empty() && line.back() == '\n')
    line.remove_suffix(1);
  auto bad = [&](const std::string &why) {
    return error(errc::parse_error, 0, why + " in \"" + std::string(line) + "\"");
  };
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos)
      break;
    start = tab + 1;
  }
  if (fields.size() != 3)
    throw bad("expected 3 tab-separated fields");

  auto parse_uint = [&](std::string_view tok) {
    if (tok.empty() || tok.size() > 9)
      throw bad("bad number");
    std::size_t v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw bad("bad number");
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
  };
  const std::size_t n = parse_uint(fields[0]);
  auto parse_table = [&](std::string_view f) {
    std::vector<edge_t> out;
    for (std::size_t start = 0;;) {
      const auto sp = f.find(' ', start);
      out.push_back(static_cast<edge_t>(parse_uint(
          f.substr(start, sp == std::string_view::npos ? sp : sp - start))));
      if (sp == std::string_view::npos)
        break;
      start = sp + 1;
    }
    if (out.size() != n)
      throw bad("table length differs from n");
    return out;
  };
  auto s0 = parse_table(fields[1]);
  auto s1 = parse_table(fields[2]);
  return validate(n, s0, s1);
}

} // namespace trivalent
