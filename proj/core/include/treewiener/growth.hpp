#pragma once

#include "treewiener/big_count.hpp"
#include "treewiener/tree.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace treewiener {

enum class OpKind { Subdivision, StarFractal, VertexOp };

/// One growth operation. `m` is ignored for Subdivision.
struct GrowthOp {
  OpKind kind = OpKind::Subdivision;
  std::uint32_t m = 1;

  static GrowthOp subdivision() { return {OpKind::Subdivision, 1}; }
  static GrowthOp star_fractal(std::uint32_t m) { return {OpKind::StarFractal, m}; }
  static GrowthOp vertex_op(std::uint32_t m) { return {OpKind::VertexOp, m}; }

  friend bool operator==(const GrowthOp&, const GrowthOp&) = default;
};

std::string to_string(const GrowthOp& op);

/// Replaces every edge uv by a path u-w-v. Midpoints get ids n, n+1, ...
/// in canonical edge order.
TreeGraph first_order_subdivision(const TreeGraph& tree);

/// Subdivides every edge and hangs m leaves on each midpoint. For edge k
/// (canonical order) the midpoint is n + k(m+1), its leaves follow it.
TreeGraph star_fractal(const TreeGraph& tree, std::uint32_t m);

/// Attaches m pendant vertices to every existing vertex, grouped by host in
/// ascending host id.
TreeGraph vertex_op(const TreeGraph& tree, std::uint32_t m);

/// Attaches m pendant vertices of class `leaf_class` to each host in `hosts`
/// (in the given order).
TreeGraph attach_leaves(const TreeGraph& tree, std::span<const VertexId> hosts, std::uint32_t m,
                        VertexClass leaf_class);

TreeGraph apply(const TreeGraph& tree, const GrowthOp& op);

/// t-fold application; t = 0 returns a copy of the input.
TreeGraph iterate(const TreeGraph& tree, const GrowthOp& op, std::uint32_t t);

/// Builds the star-fractal graph a second way (subdivision, then m leaves on
/// the new midpoints only) and checks it is the same graph as star_fractal
/// under the fixed id correspondence between the two numberings.
bool star_fractal_matches_composition(const TreeGraph& tree, std::uint32_t m);

struct OrderSize {
  BigCount order;
  BigCount size;
};

/// Order and size after t steps of `op` on a seed with the given counts.
OrderSize predicted_counts(const BigCount& seed_order, const BigCount& seed_size,
                           const GrowthOp& op, std::uint32_t t);

}  // namespace treewiener
