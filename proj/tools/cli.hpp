#pragma once

// Command-line pipelines: generate, maps, census, check, stats.
//
// Exit codes: 0 success, 1 usage error, 2 self-check failure, 3 I/O error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "trivalent/oracle.hpp"
#include "trivalent/trivalent.hpp"

namespace trivalent::cli {

enum exit_code : int { ok = 0, usage = 1, check_failed = 2, io_error = 3 };

enum class Command { generate, maps, census, check, stats };

struct RunConfig {
  Command command = Command::generate;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> size; // exact
  std::optional<std::size_t> faces;
  bool unrooted = false;
  bool counts = false;
  bool genus_table = false;
  bool regular = false;
  std::string series; // check
  std::size_t upto = 0;
  std::string output; // empty: standard output
  std::size_t workers = 1;
};

class usage_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Largest size to generate and whether only that size is wanted.
inline std::pair<std::size_t, bool> size_bound(const RunConfig &cfg) {
  if (cfg.command == Command::maps || cfg.command == Command::census) {
    if (cfg.faces)
      return {3 * *cfg.faces, false};
  }
  if (cfg.size)
    return {*cfg.size, true};
  return {*cfg.max_size, false};
}

inline void validate_config(const RunConfig &cfg) {
  const int specs = (cfg.max_size ? 1 : 0) + (cfg.size ? 1 : 0) + (cfg.faces ? 1 : 0);
  switch (cfg.command) {
  case Command::generate:
  case Command::stats:
    if (cfg.faces)
      throw usage_error("--faces applies to maps and census only");
    if (specs != 1)
      throw usage_error("exactly one of --max-size or --size is required");
    break;
  case Command::maps:
    if (cfg.genus_table && !cfg.faces)
      throw usage_error("--genus-table requires --faces");
    if (specs != 1)
      throw usage_error("exactly one of --faces, --max-size or --size is required");
    break;
  case Command::census:
    if (!cfg.faces || specs != 1)
      throw usage_error("census requires --faces only");
    break;
  case Command::check:
    if (cfg.series.empty())
      throw usage_error("check requires --series");
    return;
  }
  const bool regular = cfg.regular || cfg.command == Command::maps ||
                       cfg.command == Command::census;
  if (regular && cfg.size && *cfg.size % 6 != 0)
    throw usage_error("regular diagrams have size divisible by 6");
  if (cfg.faces && (*cfg.faces < 2 || *cfg.faces % 2 != 0))
    throw usage_error("--faces must be even and at least 2");
  if ((cfg.size && *cfg.size == 0) || (cfg.max_size && *cfg.max_size == 0))
    throw usage_error("size must be positive");
  if (cfg.workers == 0)
    throw usage_error("--workers must be positive");
}

inline void write_counts(std::ostream &os, const std::vector<std::uint64_t> &by_size,
                         std::size_t lo, std::size_t hi, std::size_t step) {
  std::string out;
  for (std::size_t s = lo; s <= hi; s += step)
    out += std::to_string(s) + '\t' + std::to_string(by_size[s]) + '\n';
  os << out;
}

/// Parallel unrooted filtering over a materialized rooted list. Output is
/// sorted by code, so it does not depend on scheduling.
inline std::vector<UnrootedRepresentative>
parallel_unrooted(const std::vector<CanonicalCode> &rooted, std::size_t workers) {
  std::vector<std::vector<UnrootedRepresentative>> parts(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      Relabeler relabel_at;
      for (std::size_t i = w; i < rooted.size(); i += workers)
        if (auto rep = unrooted_representative(rooted[i].view(), relabel_at))
          parts[w].push_back(std::move(*rep));
    });
  for (auto &t : pool)
    t.join();
  std::vector<UnrootedRepresentative> all;
  for (auto &p : parts)
    for (auto &r : p)
      all.push_back(std::move(r));
  std::sort(all.begin(), all.end(),
            [](const auto &a, const auto &b) { return a.code < b.code; });
  return all;
}

/// Emission pipeline shared by generate and maps.
inline int run_emit(const RunConfig &cfg, std::ostream &out) {
  const auto [n, exact] = size_bound(cfg);
  const bool regular = cfg.regular || cfg.command == Command::maps;
  GenerateOptions opts;
  opts.mode = regular ? Mode::regular : Mode::all;
  opts.exact_size = exact;

  std::vector<std::uint64_t> by_size(n + 1, 0);
  auto emit = [&](const DiagramView &d) {
    ++by_size[d.n];
    if (!cfg.counts)
      write_line(out, d);
  };

  if (!cfg.unrooted) {
    generate(n, emit, opts);
  } else if (cfg.workers <= 1) {
    generate(n, filter_unrooted([&](const UnrootedRepresentative &r) { emit(r.code.view()); }),
             opts);
  } else {
    std::vector<CanonicalCode> rooted;
    generate(n, [&](const DiagramView &d) {
      rooted.push_back({d.n, {d.s0.begin(), d.s0.end()}, {d.s1.begin(), d.s1.end()}});
    }, opts);
    for (const auto &r : parallel_unrooted(rooted, cfg.workers))
      emit(r.code.view());
  }

  if (cfg.counts) {
    const std::size_t step = regular ? 6 : 1;
    if (exact)
      write_counts(out, by_size, n, n, 1);
    else
      write_counts(out, by_size, step, n, step);
  }
  return ok;
}

inline int run_census(const RunConfig &cfg, std::ostream &out) {
  const auto census = genus_census(*cfg.faces);
  write_census_tsv(out, cfg.unrooted ? census.unrooted : census.rooted);
  return ok;
}

inline int run_stats(const RunConfig &cfg, std::ostream &out) {
  const auto [n, exact] = size_bound(cfg);
  GenerateOptions opts;
  opts.mode = cfg.regular ? Mode::regular : Mode::all;
  opts.exact_size = exact;
  opts.check_measure = true;
  const GenStats st = generate(n, [](const DiagramView &) {}, opts);

  std::ostringstream os;
  os << "max_size\t" << n << '\n'
     << "mode\t" << (cfg.regular ? "regular" : "all") << '\n'
     << "generate\t" << st.generate << '\n'
     << "dispatch\t" << st.dispatch << '\n'
     << "try_closed_white\t" << st.try_closed_white << '\n'
     << "try_forward\t" << st.try_forward << '\n'
     << "try_closed_black\t" << st.try_closed_black << '\n'
     << "try_backward\t" << st.try_backward << '\n'
     << "tries\t" << st.tries() << '\n'
     << "recurse\t" << st.recurse << '\n'
     << "output\t" << st.output << '\n'
     << "emitted\t" << st.emitted << '\n'
     << "calls\t" << st.calls() << '\n'
     << "calls_per_output\t" << std::fixed << std::setprecision(4)
     << st.calls_per_output() << '\n'
     << "measure_violations\t" << st.measure_violations << '\n';
  out << os.str();
  return ok;
}

struct CheckRow {
  std::size_t size;
  std::string expected;
  std::string actual;
};

inline int run_check(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const std::string &series = cfg.series;
  const std::size_t upto = cfg.upto;
  std::vector<CheckRow> rows;
  bool failed = false;
  auto note = [&](const std::string &msg) {
    err << "check: " << msg << '\n';
    failed = true;
  };

  if (series == "rooted" || series == "unrooted") {
    const bool unrooted = series == "unrooted";
    const auto &table = unrooted ? trivalent::series::unrooted_diagrams
                                 : trivalent::series::rooted_diagrams;
    if (upto < 1 || upto > table.size())
      throw usage_error("--upto must be in 1.." + std::to_string(table.size()));
    std::vector<std::uint64_t> counts(upto + 1, 0);
    std::vector<std::set<CanonicalCode>> small(std::min<std::size_t>(upto, 7) + 1);
    auto record = [&](const DiagramView &d) {
      ++counts[d.n];
      if (!unrooted && d.n < small.size())
        small[d.n].insert({d.n, {d.s0.begin(), d.s0.end()}, {d.s1.begin(), d.s1.end()}});
    };
    if (unrooted)
      generate(upto, filter_unrooted([&](const UnrootedRepresentative &r) { record(r.code.view()); }));
    else
      generate(upto, record);

    for (std::size_t s = 1; s <= upto; ++s)
      rows.push_back({s, std::to_string(table[s - 1]), std::to_string(counts[s])});
    if (!unrooted) {
      for (std::size_t s = 1; s < small.size(); ++s) {
        const auto oracle = oracle::brute_force_counts(s);
        if (oracle.codes != small[s])
          note("size " + std::to_string(s) + ": generated codes differ from brute force");
        if (!oracle.divisibility_holds())
          note("size " + std::to_string(s) + ": labeled count not divisible by (n-1)!");
        if (oracle.rooted_classes != counts[s])
          note("size " + std::to_string(s) + ": brute force count " +
               std::to_string(oracle.rooted_classes) + " vs generated " +
               std::to_string(counts[s]));
      }
    }
  } else if (series == "maps-rooted" || series == "maps-unrooted") {
    const bool unrooted = series == "maps-unrooted";
    const auto &table = unrooted ? trivalent::series::unrooted_maps
                                 : trivalent::series::rooted_maps;
    if (upto < 6 || upto > 6 * table.size())
      throw usage_error("--upto must be in 6.." + std::to_string(6 * table.size()));
    const std::size_t kmax = upto / 6;
    std::vector<std::uint64_t> counts(kmax + 1, 0);
    auto record = [&](const DiagramView &d) { ++counts[d.n / 6]; };
    if (unrooted)
      generate(6 * kmax, Mode::regular,
               filter_unrooted([&](const UnrootedRepresentative &r) { record(r.code.view()); }));
    else
      generate(6 * kmax, Mode::regular, record);
    for (std::size_t k = 1; k <= kmax; ++k)
      rows.push_back({6 * k, std::string(table[k - 1]), std::to_string(counts[k])});
    if (!unrooted) {
      const auto rec = oracle::regular_rooted_series(table.size());
      for (std::size_t k = 1; k <= table.size(); ++k)
        if (rec[k - 1].str() != table[k - 1])
          note("recurrence a_" + std::to_string(k) + " = " + rec[k - 1].str() +
               " differs from table " + std::string(table[k - 1]));
    }
  } else {
    throw usage_error("unknown series '" + series +
                      "' (rooted, unrooted, maps-rooted, maps-unrooted)");
  }

  std::string text = "size\texpected\tactual\tstatus\n";
  for (const auto &r : rows) {
    const bool match = r.expected == r.actual;
    if (!match)
      note("size " + std::to_string(r.size) + ": expected " + r.expected + ", got " + r.actual);
    text += std::to_string(r.size) + '\t' + r.expected + '\t' + r.actual + '\t' +
            (match ? "ok" : "MISMATCH") + '\n';
  }
  out << text;
  return failed ? check_failed : ok;
}

} // namespace detail

/// Executes a parsed configuration. Diagnostics go to `err`.
inline int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    detail::validate_config(cfg);
    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::out | std::ios::trunc);
      if (!file) {
        err << "error: cannot open " << cfg.output << " for writing\n";
        return io_error;
      }
      sink = &file;
    }
    int status = ok;
    switch (cfg.command) {
    case Command::generate:
    case Command::maps:
      status = cfg.genus_table ? detail::run_census(cfg, *sink) : detail::run_emit(cfg, *sink);
      break;
    case Command::census:
      status = detail::run_census(cfg, *sink);
      break;
    case Command::check:
      status = detail::run_check(cfg, *sink, err);
      break;
    case Command::stats:
      status = detail::run_stats(cfg, *sink);
      break;
    }
    sink->flush();
    if (!*sink) {
      err << "error: write failed\n";
      return io_error;
    }
    return status;
  } catch (const usage_error &e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const trivalent::error &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

/// Parses argv into a RunConfig and runs it. Returns the process exit code.
inline int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exhaustive generation of rooted and unrooted trivalent diagrams "
               "and triangular maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_sizes = [&](CLI::App *sub) {
    sub->add_option("--max-size", cfg.max_size, "Largest diagram size (edges)");
    sub->add_option("--size", cfg.size, "Exact diagram size (edges)");
  };
  auto add_rooting = [&](CLI::App *sub) {
    auto *rooted = sub->add_flag("--rooted", "Rooted diagrams (default)");
    auto *unrooted = sub->add_flag("--unrooted", cfg.unrooted, "One diagram per unrooted class");
    rooted->excludes(unrooted);
  };
  auto add_output = [&](CLI::App *sub) {
    sub->add_option("--output", cfg.output, "Output file (default standard output)");
  };

  auto *gen = app.add_subcommand("generate", "Emit rooted or unrooted trivalent diagrams");
  add_sizes(gen);
  add_rooting(gen);
  add_output(gen);
  gen->add_flag("--counts", cfg.counts, "Print size<TAB>count instead of diagrams");
  gen->add_flag("--regular", cfg.regular, "Regular diagrams only");
  gen->add_option("--workers", cfg.workers, "Threads for the unrooted filter");

  auto *maps = app.add_subcommand("maps", "Emit rooted or unrooted triangular maps");
  add_sizes(maps);
  add_rooting(maps);
  add_output(maps);
  maps->add_option("--faces", cfg.faces, "Largest face count (even)");
  maps->add_flag("--counts", cfg.counts, "Print size<TAB>count instead of diagrams");
  maps->add_flag("--genus-table", cfg.genus_table, "Print the genus census TSV");
  maps->add_option("--workers", cfg.workers, "Threads for the unrooted filter");

  auto *census = app.add_subcommand("census", "Genus census of triangular maps");
  census->add_option("--faces", cfg.faces, "Largest face count (even)")->required();
  add_rooting(census);
  add_output(census);

  auto *check = app.add_subcommand("check", "Compare generated counts with published series");
  check->add_option("--series", cfg.series, "rooted, unrooted, maps-rooted or maps-unrooted")
      ->required()
      ->check(CLI::IsMember({"rooted", "unrooted", "maps-rooted", "maps-unrooted"}));
  check->add_option("--upto", cfg.upto, "Largest size to check")->required();
  add_output(check);

  auto *stats = app.add_subcommand("stats", "Generator call counters and CAT ratio");
  add_sizes(stats);
  add_output(stats);
  stats->add_flag("--regular", cfg.regular, "Regular mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  if (gen->parsed())
    cfg.command = Command::generate;
  else if (maps->parsed())
    cfg.command = Command::maps;
  else if (census->parsed())
    cfg.command = Command::census;
  else if (check->parsed())
    cfg.command = Command::check;
  else
    cfg.command = Command::stats;

  return run(cfg, out, err);
}

} // namespace trivalent::cli
