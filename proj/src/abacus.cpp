#include "buckfire/abacus.hpp"

#include <cstdlib>
#include <deque>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include <json.hpp>

#include "buckfire/error.hpp"

namespace buckfire::abacus {

AbacusGraph::AbacusGraph(Graph base) : base_(std::move(base)) {
  const std::size_t n = base_.vertex_count();
  outdegree_.resize(n);
  terminal_of_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    outdegree_[v] = base_.degree(v) + 1;
    terminal_of_[v] = v;
  }
}

AbacusGraph augment(Graph g) { return AbacusGraph(std::move(g)); }

std::uint64_t fire_cap_from_env() {
  const char* raw = std::getenv("BUCKFIRE_FIRE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultFireCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(raw, &used);
    if (used != std::string(raw).size() || cap == 0) throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse,
                std::string("BUCKFIRE_FIRE_CAP must be a positive integer, got '") + raw + "'");
  }
}

ChipConfig critical_loading(const AbacusGraph& a) {
  ChipConfig c;
  c.internal.resize(a.internal_count());
  c.terminal.assign(a.internal_count(), 0);
  for (VertexId v = 0; v < a.internal_count(); ++v) c.internal[v] = a.outdegree(v) - 1;
  return c;
}

bool is_loaded(const AbacusGraph& a, const ChipConfig& c, VertexId v) {
  return c.internal.at(v) >= a.outdegree(v);
}

ChipConfig fire(const AbacusGraph& a, ChipConfig c, VertexId v) {
  if (!is_loaded(a, c, v)) {
    throw Error(ErrorCode::NotLoaded, "vertex " + std::to_string(v) + " holds " +
                                          c.internal[v].get_str() + " chips, needs " +
                                          std::to_string(a.outdegree(v)));
  }
  c.internal[v] -= a.outdegree(v);
  for (VertexId u : a.base().neighbors(v)) c.internal[u] += 1;
  c.terminal[a.terminal_of(v)] += 1;
  return c;
}

namespace {

/// Loaded vertices awaiting a fire, drained in policy order.
class Schedule {
 public:
  Schedule(const FiringPolicy& policy, std::size_t vertices)
      : policy_(policy), queued_(vertices, false) {
    if (const auto* random = std::get_if<RandomSeeded>(&policy_)) rng_.seed(random->seed);
  }

  bool empty() const { return size_ == 0; }

  void push(VertexId v) {
    if (queued_[v]) return;
    queued_[v] = true;
    ++size_;
    if (std::holds_alternative<Queue>(policy_)) {
      fifo_.push_back(v);
    } else if (std::holds_alternative<RandomSeeded>(policy_)) {
      pool_.push_back(v);
    } else {
      ordered_.insert(v);
    }
  }

  VertexId pop() {
    VertexId v = 0;
    if (std::holds_alternative<LowestIndex>(policy_)) {
      v = *ordered_.begin();
      ordered_.erase(ordered_.begin());
    } else if (std::holds_alternative<HighestIndex>(policy_)) {
      v = *ordered_.rbegin();
      ordered_.erase(std::prev(ordered_.end()));
    } else if (std::holds_alternative<Queue>(policy_)) {
      v = fifo_.front();
      fifo_.pop_front();
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
      const std::size_t i = pick(rng_);
      v = pool_[i];
      pool_[i] = pool_.back();
      pool_.pop_back();
    }
    queued_[v] = false;
    --size_;
    return v;
  }

 private:
  FiringPolicy policy_;
  std::vector<bool> queued_;
  std::size_t size_ = 0;
  std::set<VertexId> ordered_;
  std::deque<VertexId> fifo_;
  std::vector<VertexId> pool_;
  std::mt19937_64 rng_;
};

template <typename OnStep>
RunStats execute(const AbacusGraph& a, const RunOptions& options, ChipConfig& c,
                 OnStep&& on_step) {
  const ChipConfig critical = critical_loading(a);
  const VertexId start = a.start();
  Schedule schedule(options.policy, a.internal_count());
  RunStats stats;
  std::size_t off_critical = 0;

  auto adjust = [&](VertexId u, auto&& update) {
    const bool was_critical = c.internal[u] == critical.internal[u];
    update(c.internal[u]);
    const bool now_critical = c.internal[u] == critical.internal[u];
    if (was_critical && !now_critical) ++off_critical;
    if (!was_critical && now_critical) --off_critical;
    if (c.internal[u] >= a.outdegree(u)) schedule.push(u);
  };

  do {
    adjust(start, [](BigInt& x) { x += 1; });
    ++stats.chips_added;
    on_step(Action{AddChip{}}, c);

    while (!schedule.empty()) {
      const VertexId v = schedule.pop();
      if (stats.total_fires >= options.fire_cap) {
        throw Error(ErrorCode::CapExceeded,
                    "abacus exceeded the fire cap of " + std::to_string(options.fire_cap));
      }
      const std::size_t out = a.outdegree(v);
      adjust(v, [out](BigInt& x) { x -= out; });
      for (VertexId u : a.base().neighbors(v)) adjust(u, [](BigInt& x) { x += 1; });
      c.terminal[a.terminal_of(v)] += 1;
      ++stats.total_fires;
      on_step(Action{Fire{v}}, c);
    }
  } while (off_critical != 0);
  return stats;
}

TerminalCounts to_counts(std::vector<BigInt> terminal) {
  TerminalCounts t;
  t.counts = std::move(terminal);
  t.total = 0;
  for (const auto& x : t.counts) t.total += x;
  return t;
}

}  // namespace

RunResult run(const AbacusGraph& a, const RunOptions& options) {
  ChipConfig c = critical_loading(a);
  const RunStats stats = execute(a, options, c, [](const Action&, const ChipConfig&) {});
  return {to_counts(std::move(c.terminal)), stats};
}

std::vector<Rational> win_probabilities(const TerminalCounts& t) {
  if (t.total == 0) throw Error(ErrorCode::EmptyRun, "no chips reached any terminal");
  std::vector<Rational> p;
  p.reserve(t.counts.size());
  for (const auto& x : t.counts) {
    p.push_back(ratio(x, t.total));
  }
  return p;
}

Trace trace_run(const AbacusGraph& a, const RunOptions& options) {
  Trace trace;
  trace.initial = critical_loading(a);
  ChipConfig c = trace.initial;
  trace.stats = execute(a, options, c, [&](const Action& action, const ChipConfig& now) {
    trace.steps.push_back({action, now});
  });
  return trace;
}

TerminalCounts replay(const AbacusGraph& a, const Trace& trace) {
  if (trace.initial != critical_loading(a)) {
    throw Error(ErrorCode::TraceMismatch, "trace does not start critically loaded");
  }
  ChipConfig c = trace.initial;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (std::holds_alternative<AddChip>(step.action)) {
      c.internal[a.start()] += 1;
    } else {
      c = fire(a, std::move(c), std::get<Fire>(step.action).vertex);
    }
    if (c != step.after) {
      throw Error(ErrorCode::TraceMismatch, "trace diverges at step " + std::to_string(i + 1));
    }
  }
  if (c.internal != critical_loading(a).internal) {
    throw Error(ErrorCode::TraceMismatch, "trace does not end critically loaded");
  }
  return to_counts(std::move(c.terminal));
}

namespace {

nlohmann::json counts_json(const std::vector<BigInt>& xs) {
  auto arr = nlohmann::json::array();
  for (const auto& x : xs) {
    if (x.fits_ulong_p()) {
      arr.push_back(x.get_ui());
    } else {
      arr.push_back(x.get_str());
    }
  }
  return arr;
}

nlohmann::json step_json(const char* action, const ChipConfig& c) {
  return {{"action", action},
          {"internal", counts_json(c.internal)},
          {"terminal", counts_json(c.terminal)}};
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const Trace& trace) {
  out << step_json("load", trace.initial).dump() << '\n';
  for (const auto& step : trace.steps) {
    if (const auto* f = std::get_if<Fire>(&step.action)) {
      auto obj = step_json("fire", step.after);
      obj["vertex"] = f->vertex;
      out << obj.dump() << '\n';
    } else {
      out << step_json("add", step.after).dump() << '\n';
    }
  }
}

}  // namespace buckfire::abacus
