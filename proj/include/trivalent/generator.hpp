#pragma once

/// Constant amortized time generator of rooted trivalent diagrams.
///
/// The generator replays the depth-first labeling traversal while building
/// the diagram. At each step the white side of the current edge is closed in
/// one of four ways: univalent white vertex (closed white), new trivalent
/// black vertex (forward), new univalent black vertex (closed black), or a
/// link back to an edge still waiting on the stack (backward). Every finished
/// diagram comes out already in characteristic labeling, exactly once.
///
/// Memory use is O(n); finished diagrams are streamed to a visitor.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "trivalent/diagram.hpp"
#include "trivalent/masked_stack.hpp"

namespace trivalent {

enum class Mode {
  all,     // every rooted trivalent diagram
  regular, // no univalent vertex: rooted triangular maps
};

/// Call counters of the generator procedures.
struct GenStats {
  std::uint64_t generate = 0;
  std::uint64_t dispatch = 0;
  std::uint64_t base_dispatch = 0; // dispatch calls issued by generate
  std::uint64_t try_closed_white = 0;
  std::uint64_t try_forward = 0;
  std::uint64_t try_closed_black = 0;
  std::uint64_t try_backward = 0;
  std::uint64_t recurse = 0;
  std::uint64_t output = 0;
  std::uint64_t emitted = 0; // visitor invocations (differs from output with exact_size)
  std::uint64_t measure_violations = 0;
  /// With check_measure: bit d of entry i is set when a dispatch reached
  /// through case i (closed white, forward, closed black, backward) saw the
  /// measure drop by exactly d relative to its parent dispatch.
  std::array<std::uint32_t, 4> measure_drops{};

  std::uint64_t tries() const {
    return try_closed_white + try_forward + try_closed_black + try_backward;
  }
  /// Total procedure calls, generate included.
  std::uint64_t calls() const {
    return generate + dispatch + recurse + tries() + output;
  }
  double calls_per_output() const {
    return output ? static_cast<double>(calls()) / static_cast<double>(output) : 0.0;
  }
};

struct GenerateOptions {
  Mode mode = Mode::all;
  /// Only hand diagrams of size exactly n to the visitor.
  bool exact_size = false;
  /// Check that 2*stack + n - c + 1 is non-negative and strictly decreases
  /// between nested dispatch calls; failures go to measure_violations.
  bool check_measure = false;
  /// Work splitting: the branches leaving the top-level dispatch calls are
  /// numbered in order and only those with ordinal % split_parts ==
  /// split_index are explored. The union over all indices is a full run.
  std::size_t split_parts = 1;
  std::size_t split_index = 0;
};

namespace detail {

template <class Visitor>
class Generator {
public:
  Generator(std::size_t n, Visitor &visit, const GenerateOptions &opts)
      : n_(n), visit_(visit), opts_(opts), s0_(n + 1, 0), s1_(n + 1, 0),
        stack_(n) {}

  GenStats run() {
    ++stats_.generate;
    const bool all = opts_.mode == Mode::all;
    if (all && n_ >= 1) {
      c_ = 2;
      s0_[1] = 1;
      top_level_ = true;
      ++stats_.base_dispatch;
      dispatch(1);
    }
    if (n_ >= 3) {
      c_ = 4;
      s0_[1] = 2;
      s0_[2] = 3;
      s0_[3] = 1;
      stack_.push(1);
      stack_.push(2);
      top_level_ = true;
      ++stats_.base_dispatch;
      dispatch(3);
      stack_.pop();
      stack_.pop();
    }
    return stats_;
  }

private:
  bool take_branch(bool top) {
    if (!top || opts_.split_parts <= 1)
      return true;
    return branch_ordinal_++ % opts_.split_parts == opts_.split_index;
  }

  long measure() const {
    return 2 * static_cast<long>(stack_.size()) + static_cast<long>(n_) -
           static_cast<long>(c_) + 1;
  }

  void dispatch(edge_t s) {
    ++stats_.dispatch;
    const bool top = top_level_;
    top_level_ = false;

    long saved_mu = 0;
    if (opts_.check_measure) {
      const long mu = measure();
      if (mu < 0 || mu >= parent_mu_)
        ++stats_.measure_violations;
      if (parent_mu_ != std::numeric_limits<long>::max()) {
        const long drop = parent_mu_ - mu;
        if (drop > 0 && drop < 32)
          stats_.measure_drops[last_case_] |= 1u << drop;
      }
      saved_mu = parent_mu_;
      parent_mu_ = mu;
    }

    const bool all = opts_.mode == Mode::all;
    if (all && take_branch(top))
      try_closed_white(s);
    if (c_ + 3 <= n_ + 1 && take_branch(top))
      try_forward(s);
    if (all && c_ + 1 <= n_ + 1 && take_branch(top))
      try_closed_black(s);
    // Most recently pushed first.
    for (edge_t t = stack_.top(); t != 0; t = stack_.below(t)) {
      if (!take_branch(top))
        continue;
      stack_.mask(t);
      try_backward(s, t);
      stack_.reveal(t);
    }

    if (opts_.check_measure)
      parent_mu_ = saved_mu;
  }

  void try_closed_white(edge_t s) {
    ++stats_.try_closed_white;
    last_case_ = 0;
    s1_[s] = s;
    recurse();
  }

  void try_forward(edge_t s) {
    ++stats_.try_forward;
    last_case_ = 1;
    const edge_t c = c_;
    s0_[c] = c + 1;
    s0_[c + 1] = c + 2;
    s0_[c + 2] = c;
    s1_[s] = c;
    s1_[c] = s;
    stack_.push(c + 1);
    stack_.push(c + 2);
    c_ = c + 3;
    recurse();
    c_ = c;
    stack_.pop();
    stack_.pop();
  }

  void try_closed_black(edge_t s) {
    ++stats_.try_closed_black;
    last_case_ = 2;
    const edge_t c = c_;
    s1_[s] = c;
    s1_[c] = s;
    s0_[c] = c;
    c_ = c + 1;
    recurse();
    c_ = c;
  }

  void try_backward(edge_t s, edge_t t) {
    ++stats_.try_backward;
    last_case_ = 3;
    s1_[s] = t;
    s1_[t] = s;
    recurse();
  }

  void recurse() {
    ++stats_.recurse;
    if (stack_.empty()) {
      output();
      return;
    }
    const edge_t k = stack_.pop();
    dispatch(k);
    stack_.push(k);
  }

  void output() {
    ++stats_.output;
    const std::size_t size = c_ - 1;
    if (opts_.exact_size && size != n_)
      return;
    ++stats_.emitted;
    const DiagramView view{size, std::span<const edge_t>(s0_.data() + 1, size),
                           std::span<const edge_t>(s1_.data() + 1, size)};
    visit_(view);
  }

  std::size_t n_;
  Visitor &visit_;
  GenerateOptions opts_;
  std::vector<edge_t> s0_;
  std::vector<edge_t> s1_;
  MaskedStack stack_;
  edge_t c_ = 1;
  GenStats stats_;
  bool top_level_ = false;
  std::uint64_t branch_ordinal_ = 0;
  long parent_mu_ = std::numeric_limits<long>::max();
  unsigned last_case_ = 0;
};

} // namespace detail

/// Streams every rooted diagram of size <= n (or exactly n with exact_size)
/// to `visit`, which is called as `visit(const DiagramView&)`. The view is
/// only valid during the call. An exception thrown by the visitor aborts the
/// run and propagates; no state outlives the call.
template <class Visitor>
GenStats generate(std::size_t n, Visitor &&visit, const GenerateOptions &opts = {}) {
  if (opts.split_parts == 0 || opts.split_index >= opts.split_parts)
    throw error(errc::invalid_input, 0, "split_index must be below split_parts");
  detail::Generator<std::remove_reference_t<Visitor>> gen(n, visit, opts);
  return gen.run();
}

template <class Visitor>
GenStats generate(std::size_t n, Mode mode, Visitor &&visit) {
  GenerateOptions opts;
  opts.mode = mode;
  return generate(n, std::forward<Visitor>(visit), opts);
}

} // namespace trivalent
