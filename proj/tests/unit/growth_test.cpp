#include "doctest.h"

#include "treewiener/errors.hpp"
#include "treewiener/growth.hpp"

using namespace treewiener;

namespace {

std::vector<Edge> edges_of(const TreeGraph& t) { return {t.edges().begin(), t.edges().end()}; }

std::size_t count_class(const TreeGraph& t, VertexClass c) {
  std::size_t k = 0;
  for (const auto& m : t.metas()) k += m.vclass == c ? 1 : 0;
  return k;
}

const GrowthOp kOps[] = {GrowthOp::subdivision(), GrowthOp::star_fractal(1),
                         GrowthOp::star_fractal(3), GrowthOp::vertex_op(1), GrowthOp::vertex_op(2)};

}  // namespace

TEST_CASE("first-order subdivision") {
  const auto p = first_order_subdivision(new_single_edge());
  CHECK(edges_of(p) == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(p.meta(2) == VertexMeta{1, VertexClass::SubdivisionInternal});
  CHECK(p.generation() == 1);

  const auto seven = random_tree(7, 11);
  const auto sub = first_order_subdivision(seven);
  CHECK(sub.order() == 13);
  CHECK(sub.size() == 12);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto t = random_tree(2 + s * 3, s);
    const auto st = first_order_subdivision(t);
    for (VertexId u = 0; u < t.order(); ++u) {
      const auto before = bfs_distances(t, u);
      const auto after = bfs_distances(st, u);
      for (VertexId v = 0; v < t.order(); ++v) CHECK(after[v] == 2 * before[v]);
    }
  }
  CHECK_THROWS_AS(first_order_subdivision(new_path(1)), InvalidArgument);
}

TEST_CASE("star-fractal operation") {
  const auto k13 = star_fractal(new_single_edge(), 1);
  CHECK(edges_of(k13) == std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}});
  CHECK(degree_histogram(k13) == degree_histogram(new_star(3)));
  CHECK(k13.meta(3) == VertexMeta{1, VertexClass::StarLeaf});

  const auto seven = random_tree(7, 11);
  const auto sf = star_fractal(seven, 2);
  CHECK(sf.order() == 25);
  CHECK(sf.size() == 24);
  CHECK(count_class(sf, VertexClass::SubdivisionInternal) == 6);
  CHECK(count_class(sf, VertexClass::StarLeaf) == 12);

  for (std::uint32_t m = 1; m <= 3; ++m) {
    auto t = new_single_edge();
    for (std::uint32_t step = 1; step <= 4; ++step) {
      t = star_fractal(t, m);
      std::size_t expected = 1;
      for (std::uint32_t i = 0; i < step; ++i) expected *= 2 + m;
      CHECK(t.size() == expected);
    }
  }

  // Restricted to old vertices it is a subdivision.
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto t = random_tree(3 + s * 4, 50 + s);
    const auto st = star_fractal(t, 1 + static_cast<std::uint32_t>(s % 4));
    for (VertexId u = 0; u < t.order(); ++u) {
      const auto before = bfs_distances(t, u);
      const auto after = bfs_distances(st, u);
      for (VertexId v = 0; v < t.order(); ++v) CHECK(after[v] == 2 * before[v]);
    }
  }
  CHECK_THROWS_AS(star_fractal(new_single_edge(), 0), InvalidArgument);
}

TEST_CASE("star-fractal equals subdivision followed by leaves on midpoints") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto t = random_tree(2 + s * 5, 300 + s);
    for (std::uint32_t m = 1; m <= 4; ++m) CHECK(star_fractal_matches_composition(t, m));
  }
}

TEST_CASE("m-vertex operation") {
  const auto p4 = vertex_op(new_single_edge(), 1);
  CHECK(edges_of(p4) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(diameter(p4) == 3);
  CHECK(degree_histogram(p4) == degree_histogram(new_path(4)));

  const auto fig = vertex_op(new_single_edge(), 2);
  CHECK(edges_of(fig) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  CHECK(fig.meta(4) == VertexMeta{1, VertexClass::VertexOpLeaf});

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto t = random_tree(2 + s * 3, s);
    const auto vt = vertex_op(t, 3);
    CHECK(vt.order() == 4 * t.order());
    CHECK(vt.size() == 3 * t.order() + t.order() - 1);
    for (VertexId u = 0; u < t.order(); ++u) {
      const auto before = bfs_distances(t, u);
      const auto after = bfs_distances(vt, u);
      for (VertexId v = 0; v < t.order(); ++v) CHECK(after[v] == before[v]);
    }
  }
  CHECK_THROWS_AS(vertex_op(new_single_edge(), 0), InvalidArgument);
  CHECK(vertex_op(new_path(1), 2).order() == 3);
}

TEST_CASE("iterate") {
  const auto seed = random_tree(9, 4);
  for (const auto& op : kOps) CHECK(iterate(seed, op, 0) == seed);

  CHECK(iterate(new_single_edge(), GrowthOp::subdivision(), 3).order() == 9);
  CHECK(iterate(new_single_edge(), GrowthOp::star_fractal(2), 2).order() == 17);

  const auto t2 = iterate(new_single_edge(), GrowthOp::vertex_op(2), 2);
  CHECK(t2.generation() == 2);
  std::size_t born2 = 0;
  for (const auto& m : t2.metas()) born2 += m.birth_step == 2 ? 1 : 0;
  CHECK(born2 == 12);
}

TEST_CASE("order and size follow the count formulas") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto seed = random_tree(2 + s, 77 + s);
    for (const auto& op : kOps) {
      auto t = seed;
      for (std::uint32_t step = 1; step <= 6; ++step) {
        const auto want = predicted_counts(seed.order(), seed.size(), op, step);
        if (want.order > 60'000) break;
        t = apply(t, op);
        CHECK_NOTHROW(validate(t));
        CHECK(BigCount(t.order()) == want.order);
        CHECK(BigCount(t.size()) == want.size);
      }
    }
  }
}

TEST_CASE("average degree approaches two") {
  for (const auto& op : kOps) {
    auto t = random_tree(12, 5);
    for (std::uint32_t step = 1; step <= 4; ++step) {
      t = apply(t, op);
      const double n = static_cast<double>(t.order());
      const double avg = 2.0 * static_cast<double>(t.size()) / n;
      CHECK(std::abs(avg - 2.0) <= 4.0 / n);
    }
  }
}

TEST_CASE("op names") {
  CHECK(to_string(GrowthOp::subdivision()) == "subdivision");
  CHECK(to_string(GrowthOp::vertex_op(3)) == "vertex_op(m=3)");
}
