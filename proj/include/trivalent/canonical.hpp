#pragma once

/// Characteristic labeling of rooted diagrams.
///
/// Labels are handed out in depth-first prefix order starting at the root:
/// an element is labeled on first visit, then its black successor is
/// explored, then its white successor. The transported tables form the
/// canonical code of the rooted diagram. The output does not depend on the
/// names of the input elements, so two rooted diagrams are isomorphic
/// exactly when their codes coincide.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "trivalent/diagram.hpp"

namespace trivalent {

/// Canonical tables of a rooted diagram, root labeled 1. Ordered
/// lexicographically on (n, t0[1..n], t1[1..n]).
struct CanonicalCode {
  std::size_t n = 0;
  std::vector<edge_t> t0;
  std::vector<edge_t> t1;

  DiagramView view() const { return {n, t0, t1}; }
  operator DiagramView() const { return view(); }

  friend bool operator==(const CanonicalCode &, const CanonicalCode &) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode &,
                                          const CanonicalCode &) = default;
};

/// Reusable scratch space for repeated relabeling of same-sized diagrams.
class Relabeler {
public:
  /// Relabels a diagram given by 1-based index tables. Iterative traversal;
  /// the pending stack is processed so that the visiting order equals the
  /// recursive prefix order (self, black subtree, white subtree).
  CanonicalCode operator()(std::size_t n, std::span<const edge_t> s0,
                           std::span<const edge_t> s1, edge_t root) {
    CanonicalCode out;
    relabel_into(n, s0, s1, root, out);
    return out;
  }

  void relabel_into(std::size_t n, std::span<const edge_t> s0,
                    std::span<const edge_t> s1, edge_t root,
                    CanonicalCode &out) {
    if (root < 1 || root > n)
      throw error(errc::invalid_input, root,
                  "root " + std::to_string(root) + " outside 1.." +
                      std::to_string(n));
    label_.assign(n + 1, 0);
    order_.resize(n + 1);
    pending_.clear();
    pending_.push_back(root);
    edge_t c = 1;
    while (!pending_.empty()) {
      const edge_t x = pending_.back();
      pending_.pop_back();
      if (label_[x])
        continue;
      label_[x] = c;
      order_[c] = x;
      ++c;
      pending_.push_back(s1[x - 1]);
      pending_.push_back(s0[x - 1]);
    }
    if (c - 1 != n)
      throw error(errc::not_connected, 0,
                  "traversal from root reached " + std::to_string(c - 1) +
                      " of " + std::to_string(n) + " elements");
    out.n = n;
    out.t0.resize(n);
    out.t1.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const edge_t x = order_[k];
      out.t0[k - 1] = label_[s0[x - 1]];
      out.t1[k - 1] = label_[s1[x - 1]];
    }
  }

  CanonicalCode operator()(const DiagramView &d, edge_t root) {
    return (*this)(d.n, d.s0, d.s1, root);
  }

private:
  std::vector<edge_t> label_;
  std::vector<edge_t> order_;
  std::vector<edge_t> pending_;
};

/// Relabeling over an arbitrary alphabet. `s0[i]` and `s1[i]` are the images
/// of `alphabet[i]`. The alphabet is reduced to index tables, then relabeled.
template <class X, class Hash = std::hash<X>, class Eq = std::equal_to<X>>
CanonicalCode relabel(std::span<const X> alphabet, std::span<const X> s0,
                      std::span<const X> s1, const X &root) {
  const std::size_t n = alphabet.size();
  if (s0.size() != n || s1.size() != n)
    throw error(errc::invalid_input, 0, "table length differs from alphabet size");
  std::unordered_map<X, edge_t, Hash, Eq> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(alphabet[i], static_cast<edge_t>(i + 1)).second)
      throw error(errc::invalid_input, i + 1, "alphabet repeats an element");
  auto lookup = [&](const X &x) {
    auto it = index.find(x);
    if (it == index.end())
      throw error(errc::invalid_input, 0, "image outside alphabet");
    return it->second;
  };
  std::vector<edge_t> i0(n), i1(n);
  for (std::size_t i = 0; i < n; ++i) {
    i0[i] = lookup(s0[i]);
    i1[i] = lookup(s1[i]);
  }
  return Relabeler{}(n, i0, i1, lookup(root));
}

/// Relabeling for tables already over {1..n}.
inline CanonicalCode relabel(std::size_t n, std::span<const edge_t> s0,
                             std::span<const edge_t> s1, edge_t root) {
  return Relabeler{}(n, s0, s1, root);
}

inline CanonicalCode canonical_code(const DiagramView &d, edge_t root) {
  return Relabeler{}(d, root);
}

struct MinRootCode {
  CanonicalCode code;
  std::size_t distinct_rootings = 0;
};

/// Least code over all n rootings together with the number of distinct codes
/// among them. O(n^2).
inline MinRootCode min_root_code(const DiagramView &d) {
  Relabeler relabel_at;
  std::vector<CanonicalCode> codes(d.n);
  for (std::size_t r = 1; r <= d.n; ++r)
    relabel_at.relabel_into(d.n, d.s0, d.s1, static_cast<edge_t>(r), codes[r - 1]);
  std::sort(codes.begin(), codes.end());
  const auto distinct = static_cast<std::size_t>(
      std::unique(codes.begin(), codes.end()) - codes.begin());
  return {std::move(codes.front()), distinct};
}

/// Isomorphism of the underlying unrooted diagrams, i.e. conjugacy of the
/// corresponding modular-group subgroups.
inline bool are_conjugate(const DiagramView &a, const DiagramView &b) {
  if (a.n != b.n)
    return false;
  return min_root_code(a).code == min_root_code(b).code;
}

} // namespace trivalent
