#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "buckfire/graph.hpp"

namespace buckfire::montecarlo {

/// Generator behind every simulation: 64-bit Mersenne Twister. A trial
/// chunk c of a run seeded with s draws from mt19937_64 initialized by
/// std::seed_seq{lo32(s), hi32(s), lo32(c), hi32(c)}.
using Rng = std::mt19937_64;

/// Trials per independently seeded chunk. Fixed so that results do not
/// depend on how chunks are spread over workers.
inline constexpr std::uint64_t kChunkTrials = 1U << 16;

Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk);

/// Uniform integer in [0, bound) by rejection; no modulo bias.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct GameOutcome {
  VertexId winner = 0;
  std::uint64_t steps = 0;  // passes before the win
};

/// One decision with the buck at v: returns v for a win, else the neighbor
/// receiving the buck. Each of the degree+1 outcomes is equally likely.
VertexId choose_outcome(const Graph& g, VertexId v, Rng& rng);

GameOutcome play_game(const Graph& g, Rng& rng);

struct EmpiricalDistribution {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> wins;
  std::uint64_t seed = 0;

  double frequency(VertexId v) const {
    return static_cast<double>(wins.at(v)) / static_cast<double>(trials);
  }

  friend bool operator==(const EmpiricalDistribution&, const EmpiricalDistribution&) = default;
};

/// Deterministic in (g, trials, seed); `workers` (0 = hardware concurrency)
/// only affects wall time.
EmpiricalDistribution estimate(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 0);

/// sqrt(p (1 - p) / trials).
double binomial_sigma(double p, std::uint64_t trials);

}  // namespace buckfire::montecarlo
