#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "trivalent/trivalent.hpp"

namespace trivalent::testing {

inline CanonicalCode copy_code(const DiagramView &d) {
  return {d.n, {d.s0.begin(), d.s0.end()}, {d.s1.begin(), d.s1.end()}};
}

/// All rooted codes of size <= n in generation order.
inline std::vector<CanonicalCode> collect(std::size_t n, Mode mode = Mode::all) {
  std::vector<CanonicalCode> out;
  generate(n, mode, [&](const DiagramView &d) { out.push_back(copy_code(d)); });
  return out;
}

/// Conjugates (s0, s1) by a random permutation of {1..n}.
struct Scrambled {
  std::vector<edge_t> s0, s1, perm;
};

inline Scrambled scramble(const DiagramView &d, std::mt19937 &rng) {
  Scrambled out;
  out.perm.resize(d.n + 1);
  std::iota(out.perm.begin(), out.perm.end(), 0);
  std::shuffle(out.perm.begin() + 1, out.perm.end(), rng);
  out.s0.resize(d.n);
  out.s1.resize(d.n);
  for (edge_t a = 1; a <= d.n; ++a) {
    out.s0[out.perm[a] - 1] = out.perm[d.black(a)];
    out.s1[out.perm[a] - 1] = out.perm[d.white(a)];
  }
  return out;
}

inline const std::vector<edge_t> torus_s0{2, 3, 1, 5, 6, 4};
inline const std::vector<edge_t> torus_s1{4, 5, 6, 1, 2, 3};
inline const std::vector<edge_t> sphere_s0{2, 3, 1, 5, 6, 4};
inline const std::vector<edge_t> sphere_s1{4, 6, 5, 1, 3, 2};

} // namespace trivalent::testing
