#include "treewiener/random_walk.hpp"

#include "treewiener/errors.hpp"
#include "treewiener/rng.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace treewiener {

HittingTimes::HittingTimes(const TreeGraph& tree)
    : n_(tree.order()), parent_(n_, 0), depth_(n_, 0), subtree_(n_, 1) {
  constexpr auto kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> order;
  order.reserve(n_);
  order.push_back(0);
  parent_[0] = kNone;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId u = order[head];
    for (VertexId w : tree.neighbors(u)) {
      if (w == parent_[u]) continue;
      parent_[w] = u;
      depth_[w] = depth_[u] + 1;
      order.push_back(w);
    }
  }
  for (std::size_t i = order.size(); i-- > 1;) subtree_[parent_[order[i]]] += subtree_[order[i]];
}

BigCount HittingTimes::between(VertexId src, VertexId dst) const {
  if (src >= n_ || dst >= n_) throw InvalidArgument("hitting time: vertex out of range");
  // Upward moves from src: leaving child c for its parent, c's side is subtree(c).
  // Downward moves towards dst: leaving parent p for child c, p's side is n - subtree(c).
  std::uint64_t up = 0;
  std::uint64_t down = 0;
  VertexId a = src;
  VertexId b = dst;
  while (depth_[a] > depth_[b]) {
    up += 2 * subtree_[a] - 1;
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    down += 2 * (n_ - subtree_[b]) - 1;
    b = parent_[b];
  }
  while (a != b) {
    up += 2 * subtree_[a] - 1;
    down += 2 * (n_ - subtree_[b]) - 1;
    a = parent_[a];
    b = parent_[b];
  }
  return BigCount(up) + down;
}

BigCount HittingTimes::total() const {
  // Edge (c, parent c) with s = subtree(c) is crossed upward by the s(n-s)
  // ordered pairs starting below it, each paying 2s - 1, and downward by the
  // (n-s)s pairs ending below it, each paying 2(n-s) - 1.
  BigCount sum = 0;
  for (std::size_t c = 1; c < n_; ++c) {
    const BigCount s = subtree_[c];
    const BigCount rest = n_ - subtree_[c];
    sum += s * rest * (2 * s - 1) + rest * s * (2 * rest - 1);
  }
  return sum;
}

BigCount exact_hitting_time(const TreeGraph& tree, VertexId src, VertexId dst) {
  return HittingTimes(tree).between(src, dst);
}

Rational exact_mean_hitting(const TreeGraph& tree) {
  const std::size_t n = tree.order();
  if (n < 2) throw InvalidArgument("exact_mean_hitting: tree needs at least two vertices");
  const BigCount pairs = BigCount(n) * (n - 1);
  return Rational(HittingTimes(tree).total(), pairs);
}

WalkEstimate mc_mean_hitting(const TreeGraph& tree, const WalkConfig& cfg) {
  const std::size_t n = tree.order();
  if (n < 2) throw InvalidArgument("mc_mean_hitting: tree needs at least two vertices");
  if (cfg.num_walks == 0) throw InvalidArgument("mc_mean_hitting: num_walks must be >= 1");
  if (cfg.max_steps == 0) throw InvalidArgument("mc_mean_hitting: max_steps must be >= 1");

  using u128 = uint128;
  struct Partial {
    u128 sum = 0;
    u128 sum_sq = 0;
    std::uint64_t done = 0;
    std::uint64_t truncated = 0;
  };

  const unsigned threads =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(cfg.threads, cfg.num_walks)));
  std::vector<Partial> partial(threads);

  auto worker = [&](unsigned k) {
    Partial acc;
    for (std::uint64_t i = k; i < cfg.num_walks; i += threads) {
      SplitMix64 gen = substream(cfg.rng_seed, i);
      const auto src = static_cast<VertexId>(uniform_below(gen, n));
      auto dst = static_cast<VertexId>(uniform_below(gen, n - 1));
      if (dst >= src) ++dst;
      VertexId at = src;
      std::uint64_t steps = 0;
      while (at != dst && steps < cfg.max_steps) {
        const auto nb = tree.neighbors(at);
        at = nb[uniform_below(gen, nb.size())];
        ++steps;
      }
      if (at != dst) {
        ++acc.truncated;
        continue;
      }
      acc.sum += steps;
      acc.sum_sq += static_cast<u128>(steps) * steps;
      ++acc.done;
    }
    partial[k] = acc;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, k);
  }

  Partial all;
  for (const auto& p : partial) {
    all.sum += p.sum;
    all.sum_sq += p.sum_sq;
    all.done += p.done;
    all.truncated += p.truncated;
  }
  WalkEstimate out;
  out.truncated = all.truncated;
  out.completed = all.done;
  if (all.done == 0) return out;
  out.estimate = static_cast<double>(static_cast<long double>(all.sum) /
                                     static_cast<long double>(all.done));
  if (all.done > 1) {
    // N * sum(x^2) - (sum x)^2 evaluated exactly, so no cancellation.
    const BigCount numer =
        BigCount(all.done) * to_big(all.sum_sq) - to_big(all.sum) * to_big(all.sum);
    const Rational var(numer, BigCount(all.done) * (all.done - 1));
    out.std_error = std::sqrt(to_double(var) / static_cast<double>(all.done));
  }
  return out;
}

}  // namespace treewiener
