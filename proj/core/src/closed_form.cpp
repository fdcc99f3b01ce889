#include "treewiener/closed_form.hpp"

#include "treewiener/errors.hpp"

#include <string>

namespace treewiener {
namespace {

void require_m(std::uint32_t m, const char* who) {
  if (m == 0) throw InvalidArgument(std::string(who) + ": m must be >= 1");
}

void expect_total(const BigCount& pieces, const BigCount& closed, const char* where) {
  if (pieces != closed) {
    throw IntegrityError(std::string(where) + ": case sums give " + pieces.str() +
                         ", closed form gives " + closed.str());
  }
}

// sum_{i=1}^{k} (k + 1 - i) = k(k+1)/2
BigCount triangular(const BigCount& k) { return exact_div(k * (k + 1), 2, "triangular"); }

}  // namespace

BigCount exact_div(const BigCount& a, const BigCount& b, const char* where) {
  BigCount q;
  BigCount r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw IntegrityError(std::string(where) + ": " + a.str() + " not divisible by " + b.str());
  }
  return q;
}

void check_state(const WienerState& state) {
  const BigCount& n = state.n;
  if (n < 2) throw InvalidArgument("WienerState: n must be >= 2, got " + n.str());
  if (state.s < n - 1) {
    throw InvalidArgument("WienerState: s=" + state.s.str() + " below the star minimum n-1");
  }
  const BigCount path = exact_div((n - 1) * n * (n + 1), 6, "path Wiener bound");
  if (state.s > path) {
    throw InvalidArgument("WienerState: s=" + state.s.str() + " above the path maximum " +
                          path.str());
  }
}

WienerState state_of(const TreeGraph& tree) { return {wiener_subtree(tree), tree.order()}; }

SubdivisionCases subdivision_cases(const WienerState& state) {
  const BigCount pairs2 = state.n * (state.n - 1);
  SubdivisionCases c;
  c.original_pairs = 2 * state.s;
  c.new_pairs = c.original_pairs - pairs2;
  c.mixed_pairs = 2 * c.original_pairs - pairs2;
  return c;
}

WienerState subdivision_wiener(const WienerState& state) {
  check_state(state);
  const BigCount& n = state.n;
  WienerState out{8 * state.s - 2 * n * (n - 1), 2 * n - 1};
  const auto c = subdivision_cases(state);
  expect_total(c.original_pairs + c.new_pairs + c.mixed_pairs, out.s, "subdivision_wiener");
  return out;
}

WienerState subdivision_wiener_t(const WienerState& state, std::uint32_t t) {
  check_state(state);
  if (t == 0) return state;
  const BigCount e = state.n - 1;
  const BigCount p1 = pow_big(2, t);
  const BigCount p2 = p1 * p1;
  const BigCount p3 = p2 * p1;
  // 2^{3t} - 2^t = 2^t (4^t - 1) and 3 | 4^t - 1.
  const BigCount linear = exact_div(p3 - p1, 3, "subdivision_wiener_t");
  // 2^{2t-1} - 2^{3t-1}, integral for t >= 1.
  const BigCount quad = p2 / 2 - p3 / 2;
  return {p3 * state.s - linear * e + quad * e * e, p1 * e + 1};
}

VertexOpCases vertexop_cases(const WienerState& state, std::uint32_t m) {
  const BigCount& n = state.n;
  const BigCount mm = m;
  VertexOpCases c;
  c.original_pairs = state.s;
  c.same_host_leaves = n * mm * (mm - 1);
  // sum_{i=1}^{n-1} 2 m^2 (n - i) = 2 m^2 (n-1) n / 2
  c.different_host_leaves = mm * mm * state.s + 2 * mm * mm * triangular(n - 1);
  c.leaf_to_original = mm * n * n + 2 * mm * state.s;
  return c;
}

WienerState vertexop_wiener(const WienerState& state, std::uint32_t m) {
  require_m(m, "vertexop_wiener");
  check_state(state);
  const BigCount& n = state.n;
  const BigCount mm = m;
  WienerState out{(1 + mm) * (1 + mm) * state.s + mm * (mm + 1) * n * n - mm * n, (mm + 1) * n};
  const auto c = vertexop_cases(state, m);
  expect_total(c.original_pairs + c.same_host_leaves + c.different_host_leaves + c.leaf_to_original,
               out.s, "vertexop_wiener");
  return out;
}

StarFractalCases starfractal_cases(const WienerState& state, std::uint32_t m) {
  const BigCount& n = state.n;
  const BigCount mm = m;
  const BigCount pairs2 = n * (n - 1);
  StarFractalCases c;
  c.original_pairs = 2 * state.s;
  c.same_star_leaves = (n - 1) * mm * (mm - 1);
  c.midpoint_pairs = c.original_pairs - pairs2;
  c.original_to_midpoint = 2 * c.midpoint_pairs + pairs2;
  // sum_{i=1}^{n-2} 2 m^2 (n - 1 - i) = 2 m^2 (n-2)(n-1)/2
  c.cross_star_leaves = mm * mm * c.midpoint_pairs + 2 * mm * mm * triangular(n - 2);
  c.original_to_leaf = mm * c.original_to_midpoint + mm * pairs2;
  c.leaf_to_midpoint = 2 * mm * c.midpoint_pairs + mm * (n - 1) * (n - 1);
  return c;
}

WienerState starfractal_wiener(const WienerState& state, std::uint32_t m) {
  require_m(m, "starfractal_wiener");
  check_state(state);
  const BigCount& n = state.n;
  const BigCount mm = m;
  WienerState out{2 * (mm + 2) * (mm + 2) * state.s - (mm + 2) * (n - 1) * (mm + n),
                  n + (1 + mm) * (n - 1)};
  const auto c = starfractal_cases(state, m);
  expect_total(c.original_pairs + c.same_star_leaves + c.midpoint_pairs + c.original_to_midpoint +
                   c.cross_star_leaves + c.original_to_leaf + c.leaf_to_midpoint,
               out.s, "starfractal_wiener");
  return out;
}

WienerState apply_closed_form(const WienerState& state, const GrowthOp& op) {
  switch (op.kind) {
    case OpKind::Subdivision: return subdivision_wiener(state);
    case OpKind::StarFractal: return starfractal_wiener(state, op.m);
    case OpKind::VertexOp: return vertexop_wiener(state, op.m);
  }
  throw InvalidArgument("unknown growth operation");
}

WienerState iterate_closed_form(const WienerState& state, const GrowthOp& op, std::uint32_t t) {
  check_state(state);
  WienerState current = state;
  for (std::uint32_t i = 0; i < t; ++i) current = apply_closed_form(current, op);
  return current;
}

}  // namespace treewiener
