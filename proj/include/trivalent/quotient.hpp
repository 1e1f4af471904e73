#pragma once

/// Unrooted diagrams from the rooted stream: a rooted diagram is kept iff
/// its code is the least among the codes of all its rootings. This needs no
/// memory across items, so the filter composes directly with the generator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "trivalent/canonical.hpp"
#include "trivalent/generator.hpp"

namespace trivalent {

struct UnrootedRepresentative {
  CanonicalCode code;
  std::size_t distinct_rootings = 0;
};

/// `d` must be in characteristic labeling (as emitted by generate). Returns
/// the representative iff d is root-minimal. Rejection stops at the first
/// rooting with a smaller code.
inline std::optional<UnrootedRepresentative>
unrooted_representative(const DiagramView &d, Relabeler &relabel_at) {
  CanonicalCode self;
  self.n = d.n;
  self.t0.assign(d.s0.begin(), d.s0.end());
  self.t1.assign(d.s1.begin(), d.s1.end());

  std::vector<CanonicalCode> codes;
  codes.reserve(d.n);
  CanonicalCode scratch;
  for (std::size_t r = 2; r <= d.n; ++r) {
    relabel_at.relabel_into(d.n, d.s0, d.s1, static_cast<edge_t>(r), scratch);
    if (scratch < self)
      return std::nullopt;
    if (scratch != self)
      codes.push_back(scratch);
  }
  std::sort(codes.begin(), codes.end());
  const auto others = static_cast<std::size_t>(
      std::unique(codes.begin(), codes.end()) - codes.begin());
  return UnrootedRepresentative{std::move(self), others + 1};
}

inline std::optional<UnrootedRepresentative>
unrooted_representative(const DiagramView &d) {
  Relabeler relabel_at;
  return unrooted_representative(d, relabel_at);
}

/// Visitor adapter: forwards only root-minimal diagrams, as
/// `inner(const UnrootedRepresentative&)`.
template <class Inner>
class UnrootedFilter {
public:
  explicit UnrootedFilter(Inner inner) : inner_(std::move(inner)) {}

  void operator()(const DiagramView &d) {
    if (auto rep = unrooted_representative(d, relabel_at_))
      inner_(*rep);
  }

  Inner &inner() { return inner_; }

private:
  Inner inner_;
  Relabeler relabel_at_;
};

template <class Inner>
UnrootedFilter<std::decay_t<Inner>> filter_unrooted(Inner &&inner) {
  return UnrootedFilter<std::decay_t<Inner>>(std::forward<Inner>(inner));
}

// --- genus census ------------------------------------------------------------

/// Dense counts indexed by (genus, face count); faces run over 2, 4, ...,
/// faces_max and rows grow with the largest genus observed.
class GenusTable {
public:
  explicit GenusTable(std::size_t faces_max = 0) : faces_max_(faces_max) {
    rows_.emplace_back(columns(), 0);
  }

  std::size_t faces_max() const { return faces_max_; }
  std::size_t columns() const { return faces_max_ / 2; }
  std::size_t genus_rows() const { return rows_.size(); }

  void add(std::size_t genus, std::size_t faces, std::uint64_t count = 1) {
    while (rows_.size() <= genus)
      rows_.emplace_back(columns(), 0);
    rows_[genus][column(faces)] += count;
  }

  std::uint64_t at(std::size_t genus, std::size_t faces) const {
    if (genus >= rows_.size())
      return 0;
    return rows_[genus][column(faces)];
  }

  std::uint64_t column_sum(std::size_t faces) const {
    std::uint64_t sum = 0;
    for (const auto &row : rows_)
      sum += row[column(faces)];
    return sum;
  }

  bool operator==(const GenusTable &) const = default;

private:
  std::size_t column(std::size_t faces) const {
    if (faces < 2 || faces % 2 != 0 || faces > faces_max_)
      throw error(errc::invalid_input, 0,
                  "face count " + std::to_string(faces) + " outside census");
    return faces / 2 - 1;
  }

  std::size_t faces_max_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct GenusCensus {
  GenusTable rooted;
  GenusTable unrooted;
  GenStats stats;
};

/// Rooted and unrooted triangular maps with at most faces_max faces,
/// tabulated by genus and face count.
inline GenusCensus genus_census(std::size_t faces_max) {
  if (faces_max < 2 || faces_max % 2 != 0)
    throw error(errc::invalid_input, 0, "faces_max must be even and >= 2");
  GenusCensus census{GenusTable(faces_max), GenusTable(faces_max), {}};
  Relabeler relabel_at;
  census.stats = generate(3 * faces_max, Mode::regular, [&](const DiagramView &d) {
    const MapStats st = map_stats(d);
    const auto genus = static_cast<std::size_t>(st.genus);
    census.rooted.add(genus, st.faces);
    if (unrooted_representative(d, relabel_at))
      census.unrooted.add(genus, st.faces);
  });
  return census;
}

/// `genus<TAB>faces_2<TAB>faces_4...` header, one zero-filled row per genus.
inline void write_census_tsv(std::ostream &os, const GenusTable &table) {
  std::string out = "genus";
  for (std::size_t f = 2; f <= table.faces_max(); f += 2)
    out += "\tfaces_" + std::to_string(f);
  out += '\n';
  for (std::size_t g = 0; g < table.genus_rows(); ++g) {
    out += std::to_string(g);
    for (std::size_t f = 2; f <= table.faces_max(); f += 2)
      out += '\t' + std::to_string(table.at(g, f));
    out += '\n';
  }
  os << out;
}

} // namespace trivalent
