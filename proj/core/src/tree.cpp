#include "treewiener/tree.hpp"

#include "treewiener/errors.hpp"
#include "treewiener/rng.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <thread>

namespace treewiener {
namespace {

using u128 = uint128;

// BFS order from src plus the distance array; shared by the oracles.
void bfs(const TreeGraph& tree, VertexId src, std::vector<std::uint32_t>& dist,
         std::vector<VertexId>& queue) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  dist.assign(tree.order(), kUnseen);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : tree.neighbors(u)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

VertexId parse_vertex(std::string_view tok, std::size_t line_no) {
  if (tok.empty()) throw FormatError(line_no, "expected two vertex ids separated by one space");
  std::uint64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw FormatError(line_no, "'" + std::string(tok) + "' is not a nonnegative base-10 integer");
  }
  if (value >= std::numeric_limits<VertexId>::max()) {
    throw FormatError(line_no, "vertex id " + std::string(tok) + " out of range");
  }
  return static_cast<VertexId>(value);
}

}  // namespace

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Original: return "original";
    case VertexClass::SubdivisionInternal: return "subdivision";
    case VertexClass::StarLeaf: return "star_leaf";
    case VertexClass::VertexOpLeaf: return "vertex_op_leaf";
  }
  return "unknown";
}

TreeGraph TreeGraph::from_edges(std::size_t n, std::vector<Edge> edges,
                                std::vector<VertexMeta> meta, std::uint32_t generation) {
  if (n == 0) throw InvalidArgument("a tree needs at least one vertex");
  if (n >= std::numeric_limits<VertexId>::max()) throw InvalidArgument("too many vertices");
  if (meta.size() != n) throw InvalidArgument("metadata length differs from vertex count");

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a vertex >= " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw NotATreeError(TreeViolation::Cycle, "self-loop at vertex " + std::to_string(e.u));
    }
    e = Edge::canonical(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw NotATreeError(TreeViolation::Cycle, "duplicate edge (" + std::to_string(dup->u) + "," +
                                                  std::to_string(dup->v) + ")");
  }

  TreeGraph g;
  g.generation_ = generation;
  g.meta_ = std::move(meta);
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order already leaves each neighbor list ascending.
  for (const auto& e : edges) g.adj_[cursor[e.u]++] = e.v;
  for (const auto& e : edges) g.adj_[cursor[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edges_ = std::move(edges);

  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  bfs(g, 0, dist, queue);
  if (queue.size() != n) {
    const auto missing = std::find(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max());
    throw NotATreeError(TreeViolation::Disconnected,
                        "vertex " + std::to_string(missing - dist.begin()) +
                            " unreachable from vertex 0");
  }
  if (g.edges_.size() != n - 1) {
    // Connected with more than n-1 edges.
    throw NotATreeError(TreeViolation::Cycle, std::to_string(g.edges_.size()) + " edges on " +
                                                  std::to_string(n) + " vertices");
  }
  return g;
}

TreeGraph TreeGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
  return from_edges(n, std::move(edges), std::vector<VertexMeta>(n), 0);
}

TreeGraph new_single_edge() { return TreeGraph::from_edges(2, {{0, 1}}); }

TreeGraph new_path(std::size_t n) {
  if (n == 0) throw InvalidArgument("new_path: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  return TreeGraph::from_edges(n, std::move(edges));
}

TreeGraph new_star(std::size_t leaves) {
  if (leaves == 0) throw InvalidArgument("new_star: leaves must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(leaves);
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  return TreeGraph::from_edges(leaves + 1, std::move(edges));
}

TreeGraph random_tree(std::size_t n, std::uint64_t rng_seed) {
  if (n < 2) throw InvalidArgument("random_tree: n must be >= 2");
  if (n == 2) return new_single_edge();

  SplitMix64 gen(rng_seed);
  std::vector<VertexId> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<VertexId>(uniform_below(gen, n));

  // Linear-time decode.
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : prufer) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (VertexId x : prufer) {
    edges.push_back(Edge::canonical(static_cast<VertexId>(leaf), x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::canonical(static_cast<VertexId>(leaf), static_cast<VertexId>(n - 1)));
  return TreeGraph::from_edges(n, std::move(edges));
}

TreeGraph from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  VertexId max_id = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim_cr(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) {
      throw FormatError(line_no, "expected two vertex ids separated by one space");
    }
    const VertexId u = parse_vertex(line.substr(0, sp), line_no);
    const VertexId v = parse_vertex(line.substr(sp + 1), line_no);
    max_id = std::max({max_id, u, v});
    edges.push_back({u, v});
  }
  if (edges.empty()) throw FormatError(line_no, "no edges");
  return TreeGraph::from_edges(static_cast<std::size_t>(max_id) + 1, std::move(edges));
}

std::string to_edge_list(const TreeGraph& tree) {
  std::string out;
  out.reserve(tree.size() * 12);
  for (const auto& e : tree.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void validate(const TreeGraph& tree) {
  const std::size_t n = tree.order();
  if (tree.size() != n - 1) {
    throw NotATreeError(TreeViolation::EdgeCount, std::to_string(tree.size()) + " edges on " +
                                                      std::to_string(n) + " vertices");
  }
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : tree.neighbors(u)) {
      if (w == u) throw NotATreeError(TreeViolation::Cycle, "self-loop at " + std::to_string(u));
      const auto back = tree.neighbors(w);
      if (std::count(back.begin(), back.end(), u) != 1) {
        throw NotATreeError(TreeViolation::Asymmetric,
                            std::to_string(u) + "->" + std::to_string(w) + " has no unique reverse");
      }
    }
    degree_sum += tree.degree(u);
  }
  if (degree_sum != 2 * tree.size()) {
    throw NotATreeError(TreeViolation::EdgeCount, "degree sum disagrees with edge list");
  }
  const auto dist = bfs_distances(tree, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (dist[v] == std::numeric_limits<std::uint32_t>::max()) {
      throw NotATreeError(TreeViolation::Disconnected, "vertex " + std::to_string(v) + " unreachable");
    }
  }
}

std::vector<std::uint32_t> bfs_distances(const TreeGraph& tree, VertexId src) {
  if (src >= tree.order()) throw InvalidArgument("bfs_distances: source out of range");
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  bfs(tree, src, dist, queue);
  return dist;
}

BigCount wiener_bfs(const TreeGraph& tree, unsigned threads) {
  const std::size_t n = tree.order();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  // A single source sums at most (n-1) * diameter < n^2 < 2^64 since n < 2^32,
  // and the grand total is below n^3 < 2^96, so 128-bit partials are exact.
  std::vector<u128> partial(threads, 0);
  auto worker = [&](unsigned k) {
    std::vector<std::uint32_t> dist;
    std::vector<VertexId> queue;
    u128 acc = 0;
    for (std::size_t s = k; s < n; s += threads) {
      bfs(tree, static_cast<VertexId>(s), dist, queue);
      std::uint64_t row = 0;
      for (std::size_t v = s + 1; v < n; ++v) row += dist[v];
      acc += row;
    }
    partial[k] = acc;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, k);
  }
  u128 total = 0;
  for (u128 p : partial) total += p;
  return to_big(total);
}

BigCount wiener_subtree(const TreeGraph& tree) {
  const std::size_t n = tree.order();
  constexpr auto kRoot = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> order;
  std::vector<VertexId> parent(n, kRoot);
  std::vector<std::uint64_t> sub(n, 1);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId u = order[head];
    for (VertexId w : tree.neighbors(u)) {
      if (w == parent[u]) continue;
      parent[w] = u;
      order.push_back(w);
    }
  }
  // Each edge (v, parent v) splits the tree into sub[v] and n - sub[v] vertices.
  u128 total = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId v = order[i];
    sub[parent[v]] += sub[v];
    total += static_cast<u128>(sub[v]) * (n - sub[v]);
  }
  return to_big(total);
}

std::size_t diameter(const TreeGraph& tree) {
  auto far = [&](VertexId src) {
    const auto d = bfs_distances(tree, src);
    const auto it = std::max_element(d.begin(), d.end());
    return std::pair{static_cast<VertexId>(it - d.begin()), static_cast<std::size_t>(*it)};
  };
  const auto [a, ignored] = far(0);
  return far(a).second;
}

std::map<std::size_t, std::size_t> degree_histogram(const TreeGraph& tree) {
  std::map<std::size_t, std::size_t> hist;
  for (VertexId v = 0; v < tree.order(); ++v) ++hist[tree.degree(v)];
  return hist;
}

std::vector<std::pair<std::size_t, std::size_t>> degree_ccdf(const TreeGraph& tree) {
  const auto hist = degree_histogram(tree);
  std::vector<std::pair<std::size_t, std::size_t>> out(hist.begin(), hist.end());
  std::size_t tail = 0;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    tail += it->second;
    it->second = tail;
  }
  return out;
}

}  // namespace treewiener
