#pragma once

#include "treewiener/big_count.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treewiener {

using VertexId = std::uint32_t;

enum class VertexClass : std::uint8_t { Original, SubdivisionInternal, StarLeaf, VertexOpLeaf };

const char* to_string(VertexClass c);

/// Provenance of a vertex: the growth step that created it and how.
struct VertexMeta {
  std::uint32_t birth_step = 0;
  VertexClass vclass = VertexClass::Original;

  friend bool operator==(const VertexMeta&, const VertexMeta&) = default;
};

/// Undirected edge stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected tree on vertices 0..n-1.
///
/// Every instance satisfies: |E| = n - 1, connected, no self-loops or
/// duplicate edges. The only way to obtain one is through from_edges (or
/// the helpers built on it), which checks all of that and throws
/// NotATreeError otherwise. Edges are kept in sorted (min, max) order,
/// which is the canonical iteration order used by the growth operations.
class TreeGraph {
 public:
  static TreeGraph from_edges(std::size_t n, std::vector<Edge> edges,
                              std::vector<VertexMeta> meta, std::uint32_t generation = 0);

  /// All vertices Original, birth step 0.
  static TreeGraph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return meta_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const VertexMeta& meta(VertexId v) const { return meta_[v]; }
  std::span<const VertexMeta> metas() const noexcept { return meta_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Number of growth steps applied since the seed.
  std::uint32_t generation() const noexcept { return generation_; }

  friend bool operator==(const TreeGraph& a, const TreeGraph& b) {
    return a.edges_ == b.edges_ && a.meta_ == b.meta_;
  }

 private:
  TreeGraph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adj_;
  std::vector<Edge> edges_;
  std::vector<VertexMeta> meta_;
  std::uint32_t generation_ = 0;
};

// Seeds.
TreeGraph new_single_edge();
TreeGraph new_path(std::size_t n);
TreeGraph new_star(std::size_t leaves);

/// Uniform labeled tree on n vertices by Prufer decoding; deterministic in rng_seed.
TreeGraph random_tree(std::size_t n, std::uint64_t rng_seed);

/// Parses "u v" lines ('#' comments allowed). Throws FormatError or NotATreeError.
TreeGraph from_edge_list(std::string_view text);
std::string to_edge_list(const TreeGraph& tree);

/// Re-checks every structural invariant from scratch; throws NotATreeError.
void validate(const TreeGraph& tree);

/// Hop distances from src to every vertex.
std::vector<std::uint32_t> bfs_distances(const TreeGraph& tree, VertexId src);

/// Wiener index by a BFS from every source. `threads == 0` picks the
/// hardware concurrency; the value never depends on the thread count.
BigCount wiener_bfs(const TreeGraph& tree, unsigned threads = 0);

/// Wiener index as sum over edges of s * (n - s), s = vertices on one side.
BigCount wiener_subtree(const TreeGraph& tree);

std::size_t diameter(const TreeGraph& tree);

std::map<std::size_t, std::size_t> degree_histogram(const TreeGraph& tree);

/// Complementary cumulative degree distribution: (k, #vertices with degree >= k)
/// for every degree k present, ascending in k.
std::vector<std::pair<std::size_t, std::size_t>> degree_ccdf(const TreeGraph& tree);

}  // namespace treewiener
