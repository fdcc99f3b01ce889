#pragma once

#include "treewiener/big_count.hpp"
#include "treewiener/tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace treewiener {

enum class ModelKind { Odot, Star };

const char* to_string(ModelKind kind);

/// Generation t and operation parameter m of a model instance.
/// `max_order` caps the number of vertices a build may allocate.
struct ModelParams {
  std::uint32_t t = 0;
  std::uint32_t m = 1;
  std::uint64_t max_order = 1'000'000;
};

struct Dimensions {
  double fractal = 0;   // ln(m+2) / ln 2
  double walk = 0;      // ln(2(m+2)) / ln 2
  double spectral = 0;  // 2 d_f / d_w
};

/// Analytic description of a model instance.
struct ModelReport {
  BigCount order;
  BigCount wiener;
  Rational avg_distance;  // wiener / (order (order-1) / 2)
  BigCount diameter;
  Rational mfpt;          // 2 wiener / order
  std::optional<Dimensions> dims;
};

/// Vertex count 2(m+1)^t of the vertex-operation model.
BigCount odot_order(const ModelParams& p);
/// Vertex count (m+2)^t + 1 of the star-fractal model.
BigCount star_order(const ModelParams& p);

/// t rounds of m-vertex-operation on a single edge. Throws TooLargeError
/// when 2(m+1)^t exceeds p.max_order.
TreeGraph build_t_odot(const ModelParams& p);
/// t rounds of (1,m)-star-fractal on a single edge. Throws TooLargeError
/// when (m+2)^t + 1 exceeds p.max_order.
TreeGraph build_t_star(const ModelParams& p);
TreeGraph build_model(ModelKind kind, const ModelParams& p);

/// (m+1)^{t-1} [2 + (4mt + m - 1)(m+1)^t]; 1 at t = 0.
BigCount odot_wiener(const ModelParams& p);

/// [2(m+2)^2]^t - (2^t - 1)(m+2)^{2t-1} - (m+1)(m+2)^t ([2(m+2)]^t - 1)/(2m+3); 1 at t = 0.
BigCount star_wiener(const ModelParams& p);

/// Same quantity by iterating the one-step star-fractal recurrence from (1, 2).
BigCount star_wiener_recursive(const ModelParams& p);
/// Same quantity by iterating the one-step vertex-operation recurrence from (1, 2).
BigCount odot_wiener_recursive(const ModelParams& p);

/// 2/(m+1) + (4mt + m - 1)(m+1)^{t-1}, the closed form of 2S/N for t >= 1.
Rational odot_mfpt_closed(const ModelParams& p);

Dimensions star_dimensions(std::uint32_t m);

ModelReport odot_metrics(const ModelParams& p);
ModelReport star_metrics(const ModelParams& p);
ModelReport model_metrics(ModelKind kind, const ModelParams& p);

/// Same fields measured on an actual graph (diameter by BFS, mfpt as
/// exact mean hitting time). dims is left empty.
ModelReport measured_metrics(const TreeGraph& tree);

/// One birth class of the vertex-operation model.
struct DegreeClass {
  std::uint32_t birth_step = 0;
  std::uint64_t count = 0;
  std::size_t degree = 0;         // measured; valid when `uniform`
  bool uniform = true;            // every vertex in the class has `degree`
  std::size_t stated_degree = 0;  // 2(t - step + 1), printed for comparison only
  Rational cumulative_fraction;   // share of vertices born at or before this step
};

/// Builds T_odot(t, m) and groups its vertices by birth step.
std::vector<DegreeClass> odot_degree_profile(const ModelParams& p);

/// Exponent 1 - alpha/beta of the power law obtained from an exponential
/// degree law exp(alpha k) under weights exp(beta k).
double power_law_exponent(double alpha, double beta);

}  // namespace treewiener
