#include "doctest.h"

#include "treewiener/closed_form.hpp"
#include "treewiener/errors.hpp"
#include "treewiener/models.hpp"

#include <cmath>
#include <set>

using namespace treewiener;

TEST_CASE("model builds") {
  CHECK(build_t_odot({0, 2}) == new_single_edge());
  CHECK(build_t_odot({1, 2}).order() == 6);
  CHECK(build_t_odot({2, 2}).order() == 18);
  CHECK(build_t_star({1, 2}).order() == 5);
  CHECK(build_t_star({2, 1}).order() == 10);
  CHECK(build_t_star({2, 2}).order() == 17);
  CHECK(degree_histogram(build_t_odot({1, 2})) == std::map<std::size_t, std::size_t>{{1, 4}, {3, 2}});

  CHECK_THROWS_AS(build_t_odot({20, 3}), TooLargeError);
  CHECK_THROWS_AS(build_t_star({3, 1, 27}), TooLargeError);
  CHECK_NOTHROW(build_t_star({3, 1, 28}));
  CHECK_THROWS_AS(build_t_odot({1, 0}), InvalidArgument);
}

TEST_CASE("odot wiener") {
  CHECK(odot_wiener({0, 4}) == 1);
  CHECK(odot_wiener({1, 1}) == 10);
  CHECK(odot_wiener({1, 2}) == 29);
  CHECK(odot_wiener({2, 1}) == 68);
  for (std::uint32_t m = 1; m <= 4; ++m)
    for (std::uint32_t t = 0; t <= 25; ++t)
      CHECK(odot_wiener({t, m}) == odot_wiener_recursive({t, m}));
}

TEST_CASE("star wiener") {
  CHECK(star_wiener({0, 3}) == 1);
  CHECK(star_wiener({1, 1}) == 9);
  CHECK(star_wiener({1, 2}) == 16);
  CHECK(star_wiener({2, 1}) == 117);
  CHECK(star_wiener({2, 2}) == 400);
  CHECK(star_wiener({5, 2}) == 11047936);
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t t = 0; t <= 25; ++t)
      CHECK(star_wiener({t, m}) == star_wiener_recursive({t, m}));
}

TEST_CASE("analytic values agree with built graphs") {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    for (std::uint32_t t = 0; t <= 4; ++t) {
      const ModelParams p{t, m};
      const auto odot = build_t_odot(p);
      CHECK(wiener_subtree(odot) == odot_wiener(p));
      CHECK(diameter(odot) == 2 * t + 1);
      const auto star = build_t_star(p);
      CHECK(wiener_subtree(star) == star_wiener(p));
      CHECK(diameter(star) == (std::size_t{1} << t));
    }
  }
}

TEST_CASE("metrics reports") {
  const auto r = odot_metrics({1, 1});
  CHECK(r.order == 4);
  CHECK(r.wiener == 10);
  CHECK(r.mfpt == Rational(5));
  CHECK(r.avg_distance == Rational(10, 6));
  CHECK(r.diameter == 3);
  CHECK_FALSE(r.dims.has_value());
  for (std::uint32_t m = 1; m <= 4; ++m)
    for (std::uint32_t t = 1; t <= 10; ++t)
      CHECK(odot_metrics({t, m}).mfpt == odot_mfpt_closed({t, m}));

  const auto s = star_metrics({2, 1});
  CHECK(s.order == 10);
  CHECK(s.wiener == 117);
  CHECK(s.mfpt == Rational(117, 5));
  CHECK(s.diameter == 4);
  REQUIRE(s.dims.has_value());
  CHECK(s.dims->fractal == doctest::Approx(std::log(3.0) / std::log(2.0)));
  CHECK(s.dims->spectral == doctest::Approx(std::log(9.0) / std::log(6.0)));
  CHECK(s.dims->spectral < 2.0);

  const auto measured = measured_metrics(build_t_star({2, 1}));
  CHECK(measured.order == s.order);
  CHECK(measured.wiener == s.wiener);
  CHECK(measured.avg_distance == s.avg_distance);
  CHECK(measured.diameter == s.diameter);
  CHECK(measured.mfpt == s.mfpt);
}

TEST_CASE("odot degree profile") {
  const auto p12 = odot_degree_profile({1, 2});
  REQUIRE(p12.size() == 2);
  CHECK(p12[0].count == 2);
  CHECK(p12[1].count == 4);
  CHECK(p12[0].degree == 3);
  CHECK(p12[1].degree == 1);

  const auto p21 = odot_degree_profile({2, 1});
  std::uint64_t total = 0;
  for (const auto& c : p21) total += c.count;
  CHECK(total == 8);

  for (std::uint32_t m = 1; m <= 3; ++m) {
    for (std::uint32_t t = 1; t <= 4; ++t) {
      const auto prof = odot_degree_profile({t, m});
      REQUIRE(prof.size() == t + 1);
      std::set<std::size_t> degrees;
      for (const auto& c : prof) {
        CHECK(c.uniform);
        degrees.insert(c.degree);
        const std::size_t expect = c.birth_step == 0 ? 1 + m * t : 1 + m * (t - c.birth_step);
        CHECK(c.degree == expect);
        CHECK(c.stated_degree == 2 * (t - c.birth_step + 1));
        CHECK(c.cumulative_fraction ==
              Rational(1, pow_big(m + 1, t - c.birth_step)));
      }
      CHECK(degrees.size() == t + 1);
    }
  }
  CHECK_THROWS_AS(odot_degree_profile({0, 1}), InvalidArgument);
}

TEST_CASE("power-law exponent") {
  CHECK(power_law_exponent(-2, -1) == -1);
  CHECK(power_law_exponent(0, 1) == 1);
  CHECK(power_law_exponent(-3, -1) == -2);
  CHECK_THROWS_AS(power_law_exponent(1, 0), InvalidArgument);
}
