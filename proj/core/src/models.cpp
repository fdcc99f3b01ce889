#include "treewiener/models.hpp"

#include "treewiener/closed_form.hpp"
#include "treewiener/errors.hpp"
#include "treewiener/growth.hpp"
#include "treewiener/random_walk.hpp"

#include <cmath>
#include <map>
#include <string>

namespace treewiener {
namespace {

void require_m(const ModelParams& p, const char* who) {
  if (p.m == 0) throw InvalidArgument(std::string(who) + ": m must be >= 1");
}

void guard(const BigCount& order, const ModelParams& p, const char* who) {
  if (order > p.max_order) {
    throw TooLargeError(std::string(who) + "(t=" + std::to_string(p.t) + ", m=" +
                        std::to_string(p.m) + ") has " + order.str() +
                        " vertices, above max_order " + std::to_string(p.max_order));
  }
}

Rational average_distance(const BigCount& wiener, const BigCount& order) {
  return Rational(2 * wiener, order * (order - 1));
}

Rational mean_first_passage(const BigCount& wiener, const BigCount& order) {
  return Rational(2 * wiener, order);
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Odot: return "odot";
    case ModelKind::Star: return "star";
  }
  return "unknown";
}

BigCount odot_order(const ModelParams& p) {
  require_m(p, "odot_order");
  return 2 * pow_big(p.m + 1, p.t);
}

BigCount star_order(const ModelParams& p) {
  require_m(p, "star_order");
  return pow_big(p.m + 2, p.t) + 1;
}

TreeGraph build_t_odot(const ModelParams& p) {
  guard(odot_order(p), p, "build_t_odot");
  return iterate(new_single_edge(), GrowthOp::vertex_op(p.m), p.t);
}

TreeGraph build_t_star(const ModelParams& p) {
  guard(star_order(p), p, "build_t_star");
  return iterate(new_single_edge(), GrowthOp::star_fractal(p.m), p.t);
}

TreeGraph build_model(ModelKind kind, const ModelParams& p) {
  return kind == ModelKind::Odot ? build_t_odot(p) : build_t_star(p);
}

BigCount odot_wiener(const ModelParams& p) {
  require_m(p, "odot_wiener");
  if (p.t == 0) return 1;
  const BigCount m = p.m;
  const BigCount t = p.t;
  return pow_big(m + 1, p.t - 1) * (2 + (4 * m * t + m - 1) * pow_big(m + 1, p.t));
}

BigCount star_wiener(const ModelParams& p) {
  require_m(p, "star_wiener");
  if (p.t == 0) return 1;
  const BigCount m = p.m;
  const BigCount base = m + 2;
  const BigCount lead = pow_big(2 * base * base, p.t);
  const BigCount middle = (pow_big(2, p.t) - 1) * pow_big(base, 2 * std::uint64_t{p.t} - 1);
  const BigCount tail =
      exact_div((m + 1) * pow_big(base, p.t) * (pow_big(2 * base, p.t) - 1), 2 * m + 3, "star_wiener");
  return lead - middle - tail;
}

BigCount star_wiener_recursive(const ModelParams& p) {
  require_m(p, "star_wiener_recursive");
  return iterate_closed_form({1, 2}, GrowthOp::star_fractal(p.m), p.t).s;
}

BigCount odot_wiener_recursive(const ModelParams& p) {
  require_m(p, "odot_wiener_recursive");
  return iterate_closed_form({1, 2}, GrowthOp::vertex_op(p.m), p.t).s;
}

Rational odot_mfpt_closed(const ModelParams& p) {
  require_m(p, "odot_mfpt_closed");
  if (p.t == 0) throw InvalidArgument("odot_mfpt_closed: defined for t >= 1");
  const BigCount m = p.m;
  const BigCount t = p.t;
  return Rational(2, m + 1) + Rational((4 * m * t + m - 1) * pow_big(m + 1, p.t - 1));
}

Dimensions star_dimensions(std::uint32_t m) {
  if (m == 0) throw InvalidArgument("star_dimensions: m must be >= 1");
  Dimensions d;
  const double mm = m;
  d.fractal = std::log(mm + 2) / std::log(2.0);
  d.walk = std::log(2 * (mm + 2)) / std::log(2.0);
  d.spectral = 2 * d.fractal / d.walk;
  return d;
}

ModelReport odot_metrics(const ModelParams& p) {
  ModelReport r;
  r.order = odot_order(p);
  r.wiener = odot_wiener(p);
  r.avg_distance = average_distance(r.wiener, r.order);
  r.diameter = 2 * BigCount(p.t) + 1;
  r.mfpt = mean_first_passage(r.wiener, r.order);
  return r;
}

ModelReport star_metrics(const ModelParams& p) {
  ModelReport r;
  r.order = star_order(p);
  r.wiener = star_wiener(p);
  r.avg_distance = average_distance(r.wiener, r.order);
  r.diameter = pow_big(2, p.t);
  // The mean first-passage time divides by the order (m+2)^t + 1.
  r.mfpt = mean_first_passage(r.wiener, r.order);
  r.dims = star_dimensions(p.m);
  return r;
}

ModelReport model_metrics(ModelKind kind, const ModelParams& p) {
  return kind == ModelKind::Odot ? odot_metrics(p) : star_metrics(p);
}

ModelReport measured_metrics(const TreeGraph& tree) {
  if (tree.order() < 2) throw InvalidArgument("measured_metrics: tree needs at least two vertices");
  ModelReport r;
  r.order = tree.order();
  r.wiener = wiener_subtree(tree);
  r.avg_distance = average_distance(r.wiener, r.order);
  r.diameter = diameter(tree);
  r.mfpt = exact_mean_hitting(tree);
  return r;
}

std::vector<DegreeClass> odot_degree_profile(const ModelParams& p) {
  require_m(p, "odot_degree_profile");
  if (p.t == 0) throw InvalidArgument("odot_degree_profile: t must be >= 1");
  const TreeGraph tree = build_t_odot(p);

  std::map<std::uint32_t, DegreeClass> classes;
  for (VertexId v = 0; v < tree.order(); ++v) {
    const auto step = tree.meta(v).birth_step;
    const std::size_t deg = tree.degree(v);
    auto [it, fresh] = classes.try_emplace(step);
    DegreeClass& c = it->second;
    if (fresh) {
      c.birth_step = step;
      c.degree = deg;
      c.stated_degree = 2 * (static_cast<std::size_t>(p.t) - step + 1);
    } else if (c.degree != deg) {
      c.uniform = false;
    }
    ++c.count;
  }

  std::vector<DegreeClass> out;
  out.reserve(classes.size());
  std::uint64_t running = 0;
  for (auto& [step, c] : classes) {
    running += c.count;
    c.cumulative_fraction = Rational(BigCount(running), BigCount(tree.order()));
    out.push_back(c);
  }
  return out;
}

double power_law_exponent(double alpha, double beta) {
  if (beta == 0) throw InvalidArgument("power_law_exponent: beta must be nonzero");
  return 1 - alpha / beta;
}

}  // namespace treewiener
