#pragma once

#include "treewiener/growth.hpp"
#include "treewiener/models.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treewiener::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Entry point shared by main() and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Building blocks, exposed for tests.

struct Range {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
};

/// "3", "1..5" or "t=1..5" (any "<name>=" prefix is dropped).
Range parse_range(std::string_view text);

ModelKind parse_model(std::string_view name);
GrowthOp parse_op(std::string_view name, std::uint32_t m);

struct SweepOptions {
  ModelKind model = ModelKind::Odot;
  Range t;
  Range m;
  std::uint64_t max_build_order = 20'000;
};

/// Full CSV text, header included, rows sorted by (t, m) with the analytic
/// row before the built row.
std::string sweep_csv(const SweepOptions& opts);

struct VerifyOptions {
  std::string suite = "all";
  std::uint32_t trials = 100;
  std::uint32_t max_n = 200;
  std::uint64_t rng_seed = 7;
  std::uint64_t max_build_order = 20'000;
  std::uint64_t mc_walks = 100'000;
};

struct VerifyResult {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

/// Runs the named property suites, writing one JSON object per line.
VerifyResult verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace treewiener::cli
