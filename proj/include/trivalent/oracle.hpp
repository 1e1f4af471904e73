#pragma once

/// Ground truth independent of the generator: exhaustive enumeration of
/// labeled permutation pairs for small n, and the face-count recurrence for
/// rooted triangular maps.
///
/// The brute force deliberately shares no code with the generator or the
/// iterative relabeler; it has its own transitivity search and a recursive
/// labeling traversal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trivalent/canonical.hpp"

namespace trivalent::oracle {

using bigint = boost::multiprecision::cpp_int;

struct OracleCounts {
  std::size_t n = 0;
  std::uint64_t labeled_transitive = 0;
  std::uint64_t rooted_classes = 0;
  std::set<CanonicalCode> codes;

  /// labeled_transitive == rooted_classes * (n-1)!
  bool divisibility_holds() const {
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k < n; ++k)
      fact *= k;
    return labeled_transitive == rooted_classes * fact;
  }
};

inline constexpr std::size_t default_brute_force_bound = 7;

namespace detail {

// Permutations of {1..n} (1-based, slot 0 unused) built cycle by cycle,
// always continuing from the smallest unassigned point.
inline void enumerate_cycles(std::size_t n, std::size_t cycle_len,
                             std::vector<edge_t> &p,
                             const std::function<void(const std::vector<edge_t> &)> &emit) {
  std::size_t i = 1;
  while (i <= n && p[i] != 0)
    ++i;
  if (i > n) {
    emit(p);
    return;
  }
  p[i] = static_cast<edge_t>(i);
  enumerate_cycles(n, cycle_len, p, emit);
  p[i] = 0;
  for (std::size_t j = i + 1; j <= n; ++j) {
    if (p[j] != 0)
      continue;
    if (cycle_len == 2) {
      p[i] = static_cast<edge_t>(j);
      p[j] = static_cast<edge_t>(i);
      enumerate_cycles(n, cycle_len, p, emit);
      p[i] = p[j] = 0;
      continue;
    }
    for (std::size_t k = i + 1; k <= n; ++k) {
      if (k == j || p[k] != 0)
        continue;
      // (i j k); the reverse orientation is produced when j and k swap roles
      p[i] = static_cast<edge_t>(j);
      p[j] = static_cast<edge_t>(k);
      p[k] = static_cast<edge_t>(i);
      enumerate_cycles(n, cycle_len, p, emit);
      p[i] = p[j] = p[k] = 0;
    }
  }
}

inline std::vector<std::vector<edge_t>> all_with_cycle_len(std::size_t n,
                                                           std::size_t len) {
  std::vector<std::vector<edge_t>> out;
  std::vector<edge_t> p(n + 1, 0);
  enumerate_cycles(n, len, p, [&](const std::vector<edge_t> &q) {
    out.emplace_back(q.begin() + 1, q.end());
  });
  return out;
}

inline bool connected(const std::vector<edge_t> &a, const std::vector<edge_t> &b) {
  const std::size_t n = a.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<edge_t> queue{1};
  seen[1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const edge_t x = queue[head];
    for (edge_t y : {a[x - 1], b[x - 1]})
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
  }
  return queue.size() == n;
}

struct RecursiveLabeling {
  const std::vector<edge_t> &s0;
  const std::vector<edge_t> &s1;
  std::vector<edge_t> l0;
  std::vector<edge_t> l1;
  edge_t c = 1;

  void visit(edge_t x) {
    if (l0[x])
      return;
    l0[x] = c;
    l1[c] = x;
    ++c;
    visit(s0[x - 1]);
    visit(s1[x - 1]);
  }

  CanonicalCode run(edge_t root) {
    const std::size_t n = s0.size();
    l0.assign(n + 1, 0);
    l1.assign(n + 1, 0);
    c = 1;
    visit(root);
    CanonicalCode out{n, std::vector<edge_t>(n), std::vector<edge_t>(n)};
    for (std::size_t k = 1; k <= n; ++k) {
      out.t0[k - 1] = l0[s0[l1[k] - 1]];
      out.t1[k - 1] = l0[s1[l1[k] - 1]];
    }
    return out;
  }
};

} // namespace detail

/// Recursive (textbook) labeling, for cross-checking the iterative one.
inline CanonicalCode recursive_relabel(const std::vector<edge_t> &s0,
                                       const std::vector<edge_t> &s1, edge_t root) {
  return detail::RecursiveLabeling{s0, s1, {}, {}, 1}.run(root);
}

/// Number of permutations of {1..n} whose cycles all have length 1 or len.
inline std::size_t count_with_cycle_len(std::size_t n, std::size_t len) {
  return detail::all_with_cycle_len(n, len).size();
}

/// Enumerates every pair (black of order | 3, white involution) on {1..n},
/// keeps the transitive ones and collects their root-1 codes.
inline OracleCounts brute_force_counts(std::size_t n,
                                       std::size_t bound = default_brute_force_bound) {
  if (n > bound)
    throw error(errc::size_too_large, n,
                "brute force limited to n <= " + std::to_string(bound));
  OracleCounts out;
  out.n = n;
  if (n == 0)
    return out;
  const auto blacks = detail::all_with_cycle_len(n, 3);
  const auto whites = detail::all_with_cycle_len(n, 2);
  for (const auto &b : blacks)
    for (const auto &w : whites) {
      if (!detail::connected(b, w))
        continue;
      ++out.labeled_transitive;
      out.codes.insert(recursive_relabel(b, w, 1));
    }
  out.rooted_classes = out.codes.size();
  return out;
}

/// a_1 = 5, a_{k+1} = (6k+6) a_k + sum_{j=1}^{k-1} a_j a_{k-j}: rooted
/// triangular maps with 6k arcs. Returns a_1..a_kmax.
inline std::vector<bigint> regular_rooted_series(std::size_t kmax) {
  std::vector<bigint> a(kmax + 1);
  if (kmax == 0)
    return {};
  a[1] = 5;
  for (std::size_t k = 1; k < kmax; ++k) {
    bigint next = bigint(6 * k + 6) * a[k];
    for (std::size_t j = 1; j < k; ++j)
      next += a[j] * a[k - j];
    a[k + 1] = next;
  }
  return {a.begin() + 1, a.end()};
}

inline bigint regular_rooted_recurrence(std::size_t k) {
  if (k == 0)
    throw error(errc::invalid_input, 0, "recurrence index starts at 1");
  return regular_rooted_series(k).back();
}

} // namespace trivalent::oracle
