#include "buckfire/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "buckfire/error.hpp"

namespace buckfire::montecarlo {

Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return Rng(seq);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Largest multiple of bound representable in 64 bits; draws at or above it
  // are rejected.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

VertexId choose_outcome(const Graph& g, VertexId v, Rng& rng) {
  const auto nbrs = g.neighbors(v);
  const std::uint64_t pick = uniform_below(rng, nbrs.size() + 1);
  return pick == nbrs.size() ? v : nbrs[pick];
}

GameOutcome play_game(const Graph& g, Rng& rng) {
  GameOutcome outcome{g.start(), 0};
  for (;;) {
    const VertexId next = choose_outcome(g, outcome.winner, rng);
    if (next == outcome.winner) return outcome;
    outcome.winner = next;
    ++outcome.steps;
  }
}

EmpiricalDistribution estimate(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers) {
  if (trials == 0) throw Error(ErrorCode::DimensionMismatch, "trials must be positive");
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> per_worker(workers, std::vector<std::uint64_t>(n, 0));
  std::atomic<std::uint64_t> next_chunk{0};

  auto work = [&](unsigned w) {
    auto& wins = per_worker[w];
    for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
      Rng rng = chunk_rng(seed, c);
      const std::uint64_t begin = c * kChunkTrials;
      const std::uint64_t end = std::min(trials, begin + kChunkTrials);
      for (std::uint64_t i = begin; i < end; ++i) ++wins[play_game(g, rng).winner];
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  EmpiricalDistribution result{trials, std::vector<std::uint64_t>(n, 0), seed};
  for (const auto& wins : per_worker) {
    for (std::size_t v = 0; v < n; ++v) result.wins[v] += wins[v];
  }
  return result;
}

double binomial_sigma(double p, std::uint64_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace buckfire::montecarlo
