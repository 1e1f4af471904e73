#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "trivalent/diagram.hpp"

namespace trivalent {

/// LIFO of edge labels stored as a circular doubly linked list over the
/// slots {0..n}, slot 0 being the sentinel. The top is P[0].
///
/// mask() unlinks an element in O(1) and keeps its own links so reveal()
/// can relink it ("dancing links"). mask/reveal pairs must nest strictly;
/// debug builds assert this.
class MaskedStack {
public:
  explicit MaskedStack(std::size_t capacity = 0) { reset(capacity); }

  void reset(std::size_t capacity) {
    next_.assign(capacity + 1, 0);
    prev_.assign(capacity + 1, 0);
    size_ = 0;
#ifndef NDEBUG
    masked_.clear();
#endif
  }

  std::size_t capacity() const { return next_.size() - 1; }
  std::size_t size() const { return size_; }
  bool empty() const { return next_[0] == 0 && prev_[0] == 0; }
  edge_t top() const { return prev_[0]; }

  void push(edge_t x) {
    assert(x >= 1 && x <= capacity());
    const edge_t last = prev_[0];
    next_[x] = 0;
    prev_[x] = last;
    next_[last] = x;
    prev_[0] = x;
    ++size_;
  }

  edge_t pop() {
    assert(!empty());
    const edge_t x = prev_[0];
    const edge_t below = prev_[x];
    prev_[0] = below;
    next_[below] = 0;
    --size_;
    return x;
  }

  void mask(edge_t s) {
    next_[prev_[s]] = next_[s];
    prev_[next_[s]] = prev_[s];
    --size_;
#ifndef NDEBUG
    masked_.push_back(s);
#endif
  }

  void reveal(edge_t s) {
#ifndef NDEBUG
    assert(!masked_.empty() && masked_.back() == s && "non-LIFO reveal");
    masked_.pop_back();
#endif
    next_[prev_[s]] = s;
    prev_[next_[s]] = s;
    ++size_;
  }

  /// Element below `x` in the stack (towards the bottom), 0 at the bottom.
  edge_t below(edge_t x) const { return prev_[x]; }

  /// Visits linked elements from top to bottom.
  template <class F>
  void for_each_top_down(F &&f) const {
    for (edge_t x = prev_[0]; x != 0; x = prev_[x])
      f(x);
  }

  std::vector<edge_t> contents_top_down() const {
    std::vector<edge_t> out;
    for_each_top_down([&](edge_t x) { out.push_back(x); });
    return out;
  }

  edge_t next_link(edge_t x) const { return next_[x]; }
  edge_t prev_link(edge_t x) const { return prev_[x]; }

private:
  std::vector<edge_t> next_;
  std::vector<edge_t> prev_;
  std::size_t size_ = 0;
#ifndef NDEBUG
  std::vector<edge_t> masked_;
#endif
};

} // namespace trivalent
