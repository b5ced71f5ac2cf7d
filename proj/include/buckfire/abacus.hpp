#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "buckfire/graph.hpp"
#include "buckfire/rational.hpp"

namespace buckfire::abacus {

/// The board made directed, with one terminal sink hung off every vertex.
/// Internal vertex v keeps its base neighbors plus an edge into terminal v.
class AbacusGraph {
 public:
  explicit AbacusGraph(Graph base);

  const Graph& base() const noexcept { return base_; }
  std::size_t internal_count() const noexcept { return outdegree_.size(); }
  std::size_t outdegree(VertexId v) const { return outdegree_.at(v); }
  std::size_t terminal_of(VertexId v) const { return terminal_of_.at(v); }
  VertexId start() const noexcept { return base_.start(); }

 private:
  Graph base_;
  std::vector<std::size_t> outdegree_;
  std::vector<std::size_t> terminal_of_;
};

AbacusGraph augment(Graph g);

struct ChipConfig {
  std::vector<BigInt> internal;
  std::vector<BigInt> terminal;

  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

struct TerminalCounts {
  std::vector<BigInt> counts;
  BigInt total;

  friend bool operator==(const TerminalCounts&, const TerminalCounts&) = default;
};

struct LowestIndex {};
struct HighestIndex {};
struct Queue {};
struct RandomSeeded {
  std::uint64_t seed = 0;
};

/// Which loaded vertex fires next. Results never depend on it.
using FiringPolicy = std::variant<LowestIndex, HighestIndex, Queue, RandomSeeded>;

inline constexpr std::uint64_t kDefaultFireCap = 1'000'000'000;

struct RunOptions {
  FiringPolicy policy = LowestIndex{};
  std::uint64_t fire_cap = kDefaultFireCap;
};

/// Fire cap from BUCKFIRE_FIRE_CAP when set, otherwise the default.
std::uint64_t fire_cap_from_env();

struct RunStats {
  std::uint64_t chips_added = 0;
  std::uint64_t total_fires = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct RunResult {
  TerminalCounts terminals;
  RunStats stats;
};

ChipConfig critical_loading(const AbacusGraph& a);

bool is_loaded(const AbacusGraph& a, const ChipConfig& c, VertexId v);

/// Sends one chip along every out-edge of v. Throws NotLoaded unless
/// internal[v] >= outdegree(v).
ChipConfig fire(const AbacusGraph& a, ChipConfig c, VertexId v);

/// Adds chips at the start vertex and fires to quiescence after each one,
/// stopping once the internal configuration is the critical loading again.
/// Throws CapExceeded when total fires would pass options.fire_cap.
RunResult run(const AbacusGraph& a, const RunOptions& options = {});

/// terminal[v] / total, reduced. Throws EmptyRun when total is zero.
std::vector<Rational> win_probabilities(const TerminalCounts& t);

struct AddChip {
  friend bool operator==(const AddChip&, const AddChip&) = default;
};
struct Fire {
  VertexId vertex = 0;
  friend bool operator==(const Fire&, const Fire&) = default;
};
using Action = std::variant<AddChip, Fire>;

struct TraceStep {
  Action action;
  ChipConfig after;
};

/// `initial` is the critically loaded state; each step holds the state
/// immediately after its action.
struct Trace {
  ChipConfig initial;
  std::vector<TraceStep> steps;
  RunStats stats;
};

Trace trace_run(const AbacusGraph& a, const RunOptions& options = {});

/// Re-applies every action from the initial state, checking each snapshot.
/// Throws TraceMismatch on divergence; returns the final terminal counts.
TerminalCounts replay(const AbacusGraph& a, const Trace& trace);

/// JSON lines: a leading {"action":"load",...} record, then one object per step.
void write_trace_jsonl(std::ostream& out, const Trace& trace);

}  // namespace buckfire::abacus
