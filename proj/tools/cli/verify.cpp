#include "cli.hpp"

#include "treewiener/closed_form.hpp"
#include "treewiener/random_walk.hpp"
#include "treewiener/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <map>
#include <ostream>
#include <set>

namespace treewiener::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxReportedFailures = 20;

// Counts checks per name and prints failures as they happen, then one
// summary line per check name.
class Recorder {
 public:
  Recorder(std::ostream& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  bool expect(const std::string& name, bool ok, const std::function<json()>& detail = {}) {
    auto& c = counts_[name];
    ++c.first;
    if (!ok) {
      ++c.second;
      if (c.second <= kMaxReportedFailures) {
        json j{{"suite", suite_}, {"check", name}, {"status", "fail"}};
        if (detail) j["detail"] = detail();
        out_ << j.dump() << '\n';
      }
    }
    return ok;
  }

  VerifyResult finish() {
    VerifyResult r;
    for (const auto& [name, c] : counts_) {
      out_ << json{{"suite", suite_},
                   {"check", name},
                   {"status", c.second == 0 ? "pass" : "fail"},
                   {"count", c.first},
                   {"failures", c.second}}
                  .dump()
           << '\n';
      r.checks += c.first;
      r.failures += c.second;
    }
    return r;
  }

 private:
  std::ostream& out_;
  std::string suite_;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts_;
};

json mismatch(const TreeGraph& seed, const std::string& what, const BigCount& expected,
              const BigCount& actual) {
  return {{"what", what},
          {"expected", expected.str()},
          {"actual", actual.str()},
          {"seed_order", seed.order()},
          {"seed_edges", to_edge_list(seed)}};
}

VerifyResult theorems(const VerifyOptions& o, std::ostream& out) {
  Recorder rec(out, "theorems");
  for (std::uint32_t trial = 0; trial < o.trials; ++trial) {
    SplitMix64 gen = substream(o.rng_seed, trial);
    const std::size_t n = 2 + uniform_below(gen, o.max_n - 1);
    const TreeGraph seed = random_tree(n, gen());
    const WienerState w0 = state_of(seed);

    const BigCount bfs0 = wiener_bfs(seed);
    rec.expect("oracles_agree", bfs0 == w0.s, [&] { return mismatch(seed, "bfs vs subtree", bfs0, w0.s); });

    auto single = [&](const std::string& name, const GrowthOp& op) {
      const TreeGraph grown = apply(seed, op);
      const WienerState cf = apply_closed_form(w0, op);
      const BigCount by_bfs = wiener_bfs(grown);
      const BigCount by_sub = wiener_subtree(grown);
      rec.expect(name, cf.s == by_bfs && cf.s == by_sub && cf.n == grown.order(),
                 [&] { return mismatch(seed, to_string(op), cf.s, by_bfs); });
    };
    single("subdivision_transform", GrowthOp::subdivision());
    for (std::uint32_t m = 1; m <= 5; ++m) {
      single("vertex_op_transform", GrowthOp::vertex_op(m));
      single("star_fractal_transform", GrowthOp::star_fractal(m));
      rec.expect("star_fractal_composition", star_fractal_matches_composition(seed, m));
    }

    // Iterated transforms against the built graph, within the build budget.
    std::vector<GrowthOp> ops{GrowthOp::subdivision()};
    for (std::uint32_t m = 1; m <= 5; ++m) {
      ops.push_back(GrowthOp::vertex_op(m));
      ops.push_back(GrowthOp::star_fractal(m));
    }
    for (const auto& op : ops) {
      TreeGraph g = seed;
      for (std::uint32_t t = 1; t <= 3; ++t) {
        if (predicted_counts(seed.order(), seed.size(), op, t).order > o.max_build_order) break;
        g = apply(g, op);
        const WienerState cf = iterate_closed_form(w0, op, t);
        const BigCount actual = wiener_subtree(g);
        rec.expect("iterated_closed_form", cf.s == actual && cf.n == g.order(),
                   [&] { return mismatch(seed, to_string(op) + " t=" + std::to_string(t), cf.s, actual); });
      }
    }

    WienerState stepwise = w0;
    TreeGraph g = seed;
    for (std::uint32_t t = 1; t <= 6; ++t) {
      stepwise = subdivision_wiener(stepwise);
      const WienerState direct = subdivision_wiener_t(w0, t);
      rec.expect("iterated_subdivision_vs_steps", direct == stepwise,
                 [&] { return mismatch(seed, "t=" + std::to_string(t), stepwise.s, direct.s); });
      if (t <= 3 && n <= 50) {
        g = first_order_subdivision(g);
        const BigCount actual = wiener_subtree(g);
        rec.expect("iterated_subdivision_vs_graph", direct.s == actual,
                   [&] { return mismatch(seed, "t=" + std::to_string(t), direct.s, actual); });
      }
    }
  }
  return rec.finish();
}

VerifyResult models(const VerifyOptions& o, std::ostream& out) {
  Recorder rec(out, "models");
  auto spot = [&](const std::string& name, const BigCount& got, long long want) {
    rec.expect(name, got == want, [&] { return json{{"expected", want}, {"actual", got.str()}}; });
  };
  spot("odot_spot_values", odot_wiener({1, 1}), 10);
  spot("odot_spot_values", odot_wiener({2, 1}), 68);
  spot("odot_spot_values", odot_wiener({1, 2}), 29);
  spot("star_spot_values", star_wiener({1, 1}), 9);
  spot("star_spot_values", star_wiener({2, 1}), 117);
  spot("star_spot_values", star_wiener({1, 2}), 16);

  for (const ModelKind kind : {ModelKind::Odot, ModelKind::Star}) {
    const std::string prefix = to_string(kind);
    for (std::uint32_t m = 1; m <= 10; ++m) {
      for (std::uint32_t t = 0;; ++t) {
        const ModelParams p{t, m, o.max_build_order};
        const ModelReport analytic = model_metrics(kind, p);
        if (analytic.order > o.max_build_order) break;
        const TreeGraph g = build_model(kind, p);
        const BigCount actual = wiener_subtree(g);
        auto where = [&](const BigCount& want, const BigCount& got) {
          return json{{"t", t}, {"m", m}, {"expected", want.str()}, {"actual", got.str()}};
        };
        rec.expect(prefix + "_wiener_vs_graph", actual == analytic.wiener && analytic.order == g.order(),
                   [&] { return where(analytic.wiener, actual); });
        const BigCount d = diameter(g);
        rec.expect(prefix + "_diameter", d == analytic.diameter, [&] { return where(analytic.diameter, d); });
        if (g.order() <= 2000) {
          const Rational mean = exact_mean_hitting(g);
          rec.expect(prefix + "_mfpt_identity", mean == analytic.mfpt, [&] {
            return json{{"t", t}, {"m", m}, {"expected", to_string(analytic.mfpt)}, {"actual", to_string(mean)}};
          });
        }
        if (kind == ModelKind::Odot && t >= 1) {
          rec.expect("odot_mfpt_closed_form", odot_mfpt_closed(p) == analytic.mfpt);
        }
      }
      for (std::uint32_t t = 0; t <= 25; ++t) {
        const ModelParams p{t, m};
        const BigCount closed = kind == ModelKind::Odot ? odot_wiener(p) : star_wiener(p);
        const BigCount rec_value = kind == ModelKind::Odot ? odot_wiener_recursive(p) : star_wiener_recursive(p);
        rec.expect(prefix + "_closed_vs_recursion", closed == rec_value, [&] {
          return json{{"t", t}, {"m", m}, {"expected", rec_value.str()}, {"actual", closed.str()}};
        });
      }
    }
  }

  for (std::uint32_t m = 1; m <= 3; ++m) {
    const double ratio = to_double(odot_metrics({10, m}).avg_distance) / 20.0;
    rec.expect("odot_avg_distance_over_2t", ratio >= 0.8 && ratio <= 1.2,
               [&] { return json{{"t", 10}, {"m", m}, {"ratio", ratio}, {"band", {0.8, 1.2}}}; });
  }
  for (std::uint32_t t = 8; t <= 14; ++t) {
    const double ratio = to_double(star_metrics({t, 1}).avg_distance) / std::ldexp(1.0, static_cast<int>(t));
    rec.expect("star_avg_distance_over_2pow_t", ratio >= 0.5 && ratio <= 2.0,
               [&] { return json{{"t", t}, {"m", 1}, {"ratio", ratio}, {"band", {0.5, 2.0}}}; });
  }

  const Dimensions d1 = star_dimensions(1);
  auto close12 = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
  rec.expect("star_dimensions_m1", close12(d1.fractal, std::log(3.0) / std::log(2.0)) &&
                                       close12(d1.walk, std::log(6.0) / std::log(2.0)) &&
                                       close12(d1.spectral, std::log(9.0) / std::log(6.0)));
  for (std::uint32_t m = 1; m <= 10; ++m) rec.expect("star_spectral_below_2", star_dimensions(m).spectral < 2.0);

  for (std::uint32_t m = 1; m <= 3; ++m) {
    for (std::uint32_t t = 1; t <= 5; ++t) {
      const auto prof = odot_degree_profile({t, m, o.max_build_order});
      std::set<std::size_t> degrees;
      bool ok = prof.size() == t + 1;
      for (const auto& c : prof) {
        degrees.insert(c.degree);
        const BigCount want = c.birth_step == 0 ? BigCount(2) : 2 * m * pow_big(m + 1, c.birth_step - 1);
        ok = ok && c.uniform && BigCount(c.count) == want &&
             c.cumulative_fraction == Rational(1, pow_big(m + 1, t - c.birth_step));
      }
      ok = ok && degrees.size() == t + 1;
      rec.expect("odot_degree_profile", ok, [&] { return json{{"t", t}, {"m", m}}; });
    }
  }
  return rec.finish();
}

VerifyResult walks(const VerifyOptions& o, std::ostream& out) {
  Recorder rec(out, "walks");
  for (std::uint32_t trial = 0; trial < std::min<std::uint32_t>(o.trials, 50); ++trial) {
    SplitMix64 gen = substream(o.rng_seed ^ 0x5741ULL, trial);
    const std::size_t n = 2 + uniform_below(gen, o.max_n - 1);
    const TreeGraph tree = random_tree(n, gen());
    const Rational mean = exact_mean_hitting(tree);
    const Rational two_s_over_n(2 * wiener_subtree(tree), BigCount(n));
    rec.expect("mean_hitting_equals_2S_over_N", mean == two_s_over_n, [&] {
      return json{{"expected", to_string(two_s_over_n)}, {"actual", to_string(mean)},
                  {"seed_edges", to_edge_list(tree)}};
    });
    const HittingTimes h(tree);
    for (int k = 0; k < 20; ++k) {
      const auto u = static_cast<VertexId>(uniform_below(gen, n));
      const auto v = static_cast<VertexId>(uniform_below(gen, n));
      const BigCount commute = h.between(u, v) + h.between(v, u);
      const BigCount want = BigCount(2 * (n - 1)) * bfs_distances(tree, u)[v];
      rec.expect("commute_identity", commute == want, [&] {
        return json{{"u", u}, {"v", v}, {"expected", want.str()}, {"actual", commute.str()}};
      });
    }
  }
  for (const ModelKind kind : {ModelKind::Odot, ModelKind::Star}) {
    const TreeGraph g = build_model(kind, {3, 1});
    const double exact = to_double(exact_mean_hitting(g));
    const WalkEstimate est = mc_mean_hitting(g, {o.rng_seed, o.mc_walks});
    const double gap = std::abs(est.estimate - exact);
    rec.expect(std::string("monte_carlo_") + to_string(kind), est.truncated == 0 && gap <= 3 * est.std_error, [&] {
      return json{{"exact", exact}, {"estimate", est.estimate}, {"stderr", est.std_error},
                  {"truncated", est.truncated}};
    });
  }
  return rec.finish();
}

}  // namespace

VerifyResult verify(const VerifyOptions& opts, std::ostream& out) {
  VerifyResult total;
  auto add = [&](const VerifyResult& r) {
    total.checks += r.checks;
    total.failures += r.failures;
  };
  const bool all = opts.suite == "all";
  if (all || opts.suite == "theorems") add(theorems(opts, out));
  if (all || opts.suite == "models") add(models(opts, out));
  if (all || opts.suite == "walks") add(walks(opts, out));
  out << json{{"summary",
               {{"suite", opts.suite},
                {"checks", total.checks},
                {"failures", total.failures},
                {"status", total.failures == 0 ? "pass" : "fail"}}}}
             .dump()
      << '\n';
  return total;
}

}  // namespace treewiener::cli
