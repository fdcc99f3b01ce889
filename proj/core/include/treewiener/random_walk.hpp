#pragma once

#include "treewiener/big_count.hpp"
#include "treewiener/tree.hpp"

#include <cstdint>
#include <vector>

namespace treewiener {

/// Exact hitting times of the simple random walk on a fixed tree.
///
/// Leaving u towards a neighbour v takes 2 n_u - 1 expected steps, where
/// n_u counts the vertices left on u's side once edge uv is removed. A
/// hitting time is the sum of that quantity along the unique path.
class HittingTimes {
 public:
  explicit HittingTimes(const TreeGraph& tree);

  /// Expected steps from src until first arrival at dst (0 when src == dst).
  BigCount between(VertexId src, VertexId dst) const;

  /// Sum of between(u, v) over all ordered pairs u != v.
  BigCount total() const;

 private:
  std::size_t n_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint64_t> subtree_;
};

BigCount exact_hitting_time(const TreeGraph& tree, VertexId src, VertexId dst);

/// Mean hitting time over uniformly random ordered pairs of distinct vertices.
Rational exact_mean_hitting(const TreeGraph& tree);

struct WalkConfig {
  std::uint64_t rng_seed = 1;
  std::uint64_t num_walks = 100'000;
  std::uint64_t max_steps = 1'000'000'000;
  unsigned threads = 1;
};

struct WalkEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t truncated = 0;  // walks that hit max_steps; excluded from the mean
  std::uint64_t completed = 0;
};

/// Monte Carlo estimate of exact_mean_hitting. Walk i draws its pair and its
/// steps from substream i of rng_seed, and the aggregate is an exact integer
/// sum, so the result does not depend on cfg.threads.
WalkEstimate mc_mean_hitting(const TreeGraph& tree, const WalkConfig& cfg);

}  // namespace treewiener
