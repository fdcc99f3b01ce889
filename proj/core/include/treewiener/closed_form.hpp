#pragma once

#include "treewiener/big_count.hpp"
#include "treewiener/growth.hpp"

#include <cstdint>

namespace treewiener {

/// Distance sum `s` of a tree together with its order `n`. The transforms
/// below need the current order, so both travel together.
struct WienerState {
  BigCount s;
  BigCount n;

  friend bool operator==(const WienerState&, const WienerState&) = default;
};

/// Throws InvalidArgument unless n >= 2 and n-1 <= s <= (n-1)n(n+1)/6,
/// the star and path extremes among trees of order n.
void check_state(const WienerState& state);

WienerState state_of(const TreeGraph& tree);

// Single-step transforms. Each also evaluates the per-pair-class
// decomposition from the proof and throws IntegrityError if the pieces do
// not add up to the closed form.

/// s' = 8s - 2n(n-1), n' = 2n - 1.
WienerState subdivision_wiener(const WienerState& state);

/// t steps of subdivision in one shot:
/// s_t = 8^t s - (2^{3t} - 2^t)(n-1)/3 + (2^{2t-1} - 2^{3t-1})(n-1)^2.
WienerState subdivision_wiener_t(const WienerState& state, std::uint32_t t);

/// s' = (1+m)^2 s + m(m+1) n^2 - m n, n' = (m+1) n.
WienerState vertexop_wiener(const WienerState& state, std::uint32_t m);

/// s' = 2(m+2)^2 s - (m+2)(n-1)(m+n), n' = n + (1+m)(n-1).
WienerState starfractal_wiener(const WienerState& state, std::uint32_t m);

WienerState apply_closed_form(const WienerState& state, const GrowthOp& op);

/// t-fold application of the single-step transform matching `op`.
WienerState iterate_closed_form(const WienerState& state, const GrowthOp& op, std::uint32_t t);

/// Pair-class pieces of each transform, exposed for tests and the CLI report.
struct SubdivisionCases {
  BigCount original_pairs;  // both endpoints old
  BigCount new_pairs;       // both endpoints midpoints
  BigCount mixed_pairs;
};
SubdivisionCases subdivision_cases(const WienerState& state);

struct VertexOpCases {
  BigCount original_pairs;
  BigCount same_host_leaves;
  BigCount different_host_leaves;
  BigCount leaf_to_original;
};
VertexOpCases vertexop_cases(const WienerState& state, std::uint32_t m);

/// The seven pair classes of the star-fractal transform: old-old,
/// leaf-leaf in one star, midpoint-midpoint, old-midpoint, leaf-leaf across
/// stars, old-leaf, leaf-midpoint.
struct StarFractalCases {
  BigCount original_pairs;
  BigCount same_star_leaves;
  BigCount midpoint_pairs;
  BigCount original_to_midpoint;
  BigCount cross_star_leaves;
  BigCount original_to_leaf;
  BigCount leaf_to_midpoint;
};
StarFractalCases starfractal_cases(const WienerState& state, std::uint32_t m);

/// a / b, throwing IntegrityError when the remainder is nonzero.
BigCount exact_div(const BigCount& a, const BigCount& b, const char* where);

}  // namespace treewiener
