#include "treewiener/growth.hpp"

#include "treewiener/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace treewiener {
namespace {

void require_m(std::uint32_t m, const char* who) {
  if (m == 0) throw InvalidArgument(std::string(who) + ": m must be >= 1");
}

void require_edge(const TreeGraph& tree, const char* who) {
  if (tree.order() < 2) throw InvalidArgument(std::string(who) + ": tree needs at least one edge");
}

std::vector<VertexMeta> copy_meta(const TreeGraph& tree, std::size_t reserve) {
  std::vector<VertexMeta> meta(tree.metas().begin(), tree.metas().end());
  meta.reserve(reserve);
  return meta;
}

}  // namespace

std::string to_string(const GrowthOp& op) {
  switch (op.kind) {
    case OpKind::Subdivision: return "subdivision";
    case OpKind::StarFractal: return "star_fractal(m=" + std::to_string(op.m) + ")";
    case OpKind::VertexOp: return "vertex_op(m=" + std::to_string(op.m) + ")";
  }
  return "unknown";
}

TreeGraph first_order_subdivision(const TreeGraph& tree) {
  require_edge(tree, "first_order_subdivision");
  const std::size_t n = tree.order();
  const std::uint32_t step = tree.generation() + 1;
  auto meta = copy_meta(tree, n + tree.size());
  std::vector<Edge> edges;
  edges.reserve(2 * tree.size());
  auto next = static_cast<VertexId>(n);
  for (const auto& e : tree.edges()) {
    const VertexId w = next++;
    meta.push_back({step, VertexClass::SubdivisionInternal});
    edges.push_back({e.u, w});
    edges.push_back({e.v, w});
  }
  const std::size_t order = meta.size();
  return TreeGraph::from_edges(order, std::move(edges), std::move(meta), step);
}

namespace {

TreeGraph star_fractal_direct(const TreeGraph& tree, std::uint32_t m) {
  const std::size_t n = tree.order();
  const std::uint32_t step = tree.generation() + 1;
  auto meta = copy_meta(tree, n + (1 + static_cast<std::size_t>(m)) * tree.size());
  std::vector<Edge> edges;
  edges.reserve((2 + static_cast<std::size_t>(m)) * tree.size());
  auto next = static_cast<VertexId>(n);
  for (const auto& e : tree.edges()) {
    const VertexId w = next++;
    meta.push_back({step, VertexClass::SubdivisionInternal});
    edges.push_back({e.u, w});
    edges.push_back({e.v, w});
    for (std::uint32_t j = 0; j < m; ++j) {
      meta.push_back({step, VertexClass::StarLeaf});
      edges.push_back({w, next++});
    }
  }
  const std::size_t order = meta.size();
  return TreeGraph::from_edges(order, std::move(edges), std::move(meta), step);
}

}  // namespace

TreeGraph star_fractal(const TreeGraph& tree, std::uint32_t m) {
  require_m(m, "star_fractal");
  require_edge(tree, "star_fractal");
  TreeGraph out = star_fractal_direct(tree, m);
#ifdef TREEWIENER_CHECK_INVARIANTS
  if (!star_fractal_matches_composition(tree, m)) {
    throw IntegrityError("star_fractal disagrees with subdivision + leaves on midpoints");
  }
#endif
  return out;
}

TreeGraph attach_leaves(const TreeGraph& tree, std::span<const VertexId> hosts, std::uint32_t m,
                        VertexClass leaf_class) {
  require_m(m, "attach_leaves");
  const std::size_t n = tree.order();
  const std::uint32_t step = tree.generation() + 1;
  auto meta = copy_meta(tree, n + hosts.size() * m);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  edges.reserve(edges.size() + hosts.size() * m);
  auto next = static_cast<VertexId>(n);
  for (VertexId host : hosts) {
    if (host >= n) throw InvalidArgument("attach_leaves: host out of range");
    for (std::uint32_t j = 0; j < m; ++j) {
      meta.push_back({step, leaf_class});
      edges.push_back({host, next++});
    }
  }
  const std::size_t order = meta.size();
  return TreeGraph::from_edges(order, std::move(edges), std::move(meta), step);
}

TreeGraph vertex_op(const TreeGraph& tree, std::uint32_t m) {
  require_m(m, "vertex_op");
  std::vector<VertexId> hosts(tree.order());
  std::iota(hosts.begin(), hosts.end(), VertexId{0});
  return attach_leaves(tree, hosts, m, VertexClass::VertexOpLeaf);
}

TreeGraph apply(const TreeGraph& tree, const GrowthOp& op) {
  switch (op.kind) {
    case OpKind::Subdivision: return first_order_subdivision(tree);
    case OpKind::StarFractal: return star_fractal(tree, op.m);
    case OpKind::VertexOp: return vertex_op(tree, op.m);
  }
  throw InvalidArgument("unknown growth operation");
}

TreeGraph iterate(const TreeGraph& tree, const GrowthOp& op, std::uint32_t t) {
  TreeGraph current = tree;
  for (std::uint32_t i = 0; i < t; ++i) current = apply(current, op);
  return current;
}

bool star_fractal_matches_composition(const TreeGraph& tree, std::uint32_t m) {
  require_m(m, "star_fractal_matches_composition");
  require_edge(tree, "star_fractal_matches_composition");
  const std::size_t n = tree.order();
  const std::size_t e = tree.size();

  const TreeGraph direct = star_fractal_direct(tree, m);
  const TreeGraph sub = first_order_subdivision(tree);
  std::vector<VertexId> midpoints(e);
  std::iota(midpoints.begin(), midpoints.end(), static_cast<VertexId>(n));
  const TreeGraph composed = attach_leaves(sub, midpoints, m, VertexClass::StarLeaf);

  // composed: midpoint k = n + k, its j-th leaf = n + e + k*m + j.
  // direct:   midpoint k = n + k(m+1), its j-th leaf = n + k(m+1) + 1 + j.
  auto relabel = [&](VertexId v) -> VertexId {
    if (v < n) return v;
    if (v < n + e) return static_cast<VertexId>(n + (v - n) * (m + 1));
    const std::size_t off = v - n - e;
    const std::size_t k = off / m;
    const std::size_t j = off % m;
    return static_cast<VertexId>(n + k * (m + 1) + 1 + j);
  };
  if (composed.order() != direct.order()) return false;
  std::vector<Edge> mapped;
  mapped.reserve(composed.size());
  for (const auto& edge : composed.edges()) {
    mapped.push_back(Edge::canonical(relabel(edge.u), relabel(edge.v)));
  }
  std::sort(mapped.begin(), mapped.end());
  if (!std::equal(mapped.begin(), mapped.end(), direct.edges().begin(), direct.edges().end())) {
    return false;
  }
  for (VertexId v = 0; v < composed.order(); ++v) {
    // Birth steps differ by construction (two steps vs one); classes must not.
    if (composed.meta(v).vclass != direct.meta(relabel(v)).vclass) return false;
  }
  return true;
}

OrderSize predicted_counts(const BigCount& seed_order, const BigCount& seed_size,
                           const GrowthOp& op, std::uint32_t t) {
  switch (op.kind) {
    case OpKind::Subdivision: {
      const BigCount f = pow_big(2, t);
      return {seed_order + (f - 1) * seed_size, f * seed_size};
    }
    case OpKind::StarFractal: {
      require_m(op.m, "predicted_counts");
      const BigCount f = pow_big(2 + op.m, t);
      return {seed_order + (f - 1) * seed_size, f * seed_size};
    }
    case OpKind::VertexOp: {
      require_m(op.m, "predicted_counts");
      const BigCount f = pow_big(op.m + 1, t);
      return {f * seed_order, (f - 1) * seed_order + seed_size};
    }
  }
  throw InvalidArgument("unknown growth operation");
}

}  // namespace treewiener
