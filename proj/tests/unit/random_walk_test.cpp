#include "doctest.h"

#include "oracles.hpp"
#include "treewiener/errors.hpp"
#include "treewiener/models.hpp"
#include "treewiener/random_walk.hpp"
#include "treewiener/rng.hpp"

#include <cmath>

using namespace treewiener;

TEST_CASE("hitting times on a path") {
  const auto p3 = new_path(3);
  CHECK(exact_hitting_time(p3, 0, 1) == 1);
  CHECK(exact_hitting_time(p3, 1, 0) == 3);
  CHECK(exact_hitting_time(p3, 0, 2) == 4);
  CHECK(exact_hitting_time(p3, 2, 2) == 0);
  CHECK_THROWS_AS(exact_hitting_time(p3, 0, 5), InvalidArgument);
}

TEST_CASE("hitting times match the linear-system oracle") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto t = random_tree(2 + s, 500 + s);
    const HittingTimes h(t);
    for (VertexId dst = 0; dst < t.order(); ++dst) {
      const auto expect = oracle::hitting_times_to(t, dst);
      for (VertexId src = 0; src < t.order(); ++src) CHECK(Rational(h.between(src, dst)) == expect[src]);
    }
  }
}

TEST_CASE("mean hitting time") {
  CHECK(exact_mean_hitting(new_path(3)) == Rational(8, 3));
  CHECK(exact_mean_hitting(new_single_edge()) == Rational(1));
  CHECK(exact_mean_hitting(build_t_odot({1, 1})) == Rational(5));
  CHECK_THROWS_AS(exact_mean_hitting(new_path(1)), InvalidArgument);

  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto t = random_tree(2 + s * 3, s);
    const auto mean = exact_mean_hitting(t);
    CHECK(mean == Rational(2 * wiener_subtree(t), BigCount(t.order())));
    if (t.order() <= 30) {
      const HittingTimes h(t);
      BigCount sum = 0;
      for (VertexId u = 0; u < t.order(); ++u)
        for (VertexId v = 0; v < t.order(); ++v) sum += h.between(u, v);
      CHECK(sum == h.total());
    }
  }
}

TEST_CASE("commute identity") {
  SplitMix64 gen(17);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto t = random_tree(20 + s * 10, s);
    const HittingTimes h(t);
    for (int k = 0; k < 100; ++k) {
      const auto u = static_cast<VertexId>(uniform_below(gen, t.order()));
      const auto v = static_cast<VertexId>(uniform_below(gen, t.order()));
      const auto d = bfs_distances(t, u)[v];
      CHECK(h.between(u, v) + h.between(v, u) == BigCount(2 * (t.order() - 1)) * d);
    }
  }
}

TEST_CASE("monte carlo estimate") {
  const auto edge = mc_mean_hitting(new_single_edge(), {3, 1000});
  CHECK(edge.estimate == 1.0);
  CHECK(edge.std_error == 0.0);
  CHECK(edge.truncated == 0);

  const auto p3 = mc_mean_hitting(new_path(3), {11, 100'000});
  CHECK(std::abs(p3.estimate - 8.0 / 3.0) <= 3 * p3.std_error);

  const auto star = build_t_star({2, 2});
  const auto est = mc_mean_hitting(star, {12, 100'000});
  CHECK(std::abs(est.estimate - to_double(exact_mean_hitting(star))) <= 3 * est.std_error);
}

TEST_CASE("monte carlo is independent of threads and reports truncation") {
  const auto t = random_tree(40, 2);
  const WalkConfig one{99, 5000, 1'000'000'000, 1};
  WalkConfig four = one;
  four.threads = 4;
  const auto a = mc_mean_hitting(t, one);
  const auto b = mc_mean_hitting(t, four);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);

  const auto cut = mc_mean_hitting(new_path(30), {5, 2000, 3});
  CHECK(cut.truncated > 0);
  CHECK(cut.truncated + cut.completed == 2000);

  CHECK_THROWS_AS(mc_mean_hitting(t, {1, 0}), InvalidArgument);
}

TEST_CASE("monte carlo coverage over seeds") {
  // |estimate - exact| <= 3 stderr should hold for ~99.7% of seeds.
  const auto t = build_t_odot({2, 1});
  const double exact = to_double(exact_mean_hitting(t));
  int inside = 0;
  const int runs = 200;
  for (int s = 0; s < runs; ++s) {
    const auto e = mc_mean_hitting(t, {static_cast<std::uint64_t>(s) * 7919 + 1, 4000});
    inside += std::abs(e.estimate - exact) <= 3 * e.std_error ? 1 : 0;
  }
  CHECK(inside >= 198);
}

TEST_CASE("rng helpers") {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  // Published SplitMix64 reference output for seed 1234567.
  SplitMix64 ref(1234567);
  CHECK(ref() == 6457827717110365317ULL);
  CHECK(ref() == 3203168211198807973ULL);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(a, 7) < 7);
}
