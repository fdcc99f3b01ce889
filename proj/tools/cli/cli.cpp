#include "cli.hpp"

#include "treewiener/errors.hpp"
#include "treewiener/random_walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace treewiener::cli {
namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t parse_u32(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(12) << to_double(r);
  return s.str();
}

json report_json(const ModelReport& r) {
  json j;
  j["order"] = to_string(r.order);
  j["wiener"] = to_string(r.wiener);
  j["avg_distance"] = to_string(r.avg_distance);
  j["avg_distance_decimal"] = to_double(r.avg_distance);
  j["diameter"] = to_string(r.diameter);
  j["mfpt"] = to_string(r.mfpt);
  j["mfpt_decimal"] = to_double(r.mfpt);
  if (r.dims) {
    j["dims"] = {{"fractal", r.dims->fractal},
                 {"walk", r.dims->walk},
                 {"spectral", r.dims->spectral}};
  }
  return j;
}

json histogram_json(const TreeGraph& tree) {
  json h = json::object();
  for (auto [deg, count] : degree_histogram(tree)) h[std::to_string(deg)] = count;
  return h;
}

// Seed tree plus the operation to grow it with, for the "custom" model.
struct CustomSpec {
  std::string seed_file;
  std::string op = "subdivision";
};

TreeGraph build_any(const std::string& model, std::uint32_t t, std::uint32_t m,
                    const CustomSpec& custom, std::uint64_t max_order) {
  if (model == "custom") {
    if (custom.seed_file.empty()) throw InvalidArgument("custom model requires --seed FILE");
    const TreeGraph seed = from_edge_list(read_file(custom.seed_file));
    const GrowthOp op = parse_op(custom.op, m);
    const auto predicted = predicted_counts(seed.order(), seed.size(), op, t);
    if (predicted.order > max_order) {
      throw TooLargeError("custom build would have " + predicted.order.str() +
                          " vertices, above max order " + std::to_string(max_order));
    }
    return iterate(seed, op, t);
  }
  return build_model(parse_model(model), {t, m, max_order});
}

std::string csv_row(std::string_view model, std::uint32_t t, std::uint32_t m, const ModelReport& r,
                    std::string_view source) {
  std::ostringstream row;
  row << model << ',' << t << ',' << m << ',' << to_string(r.order) << ',' << to_string(r.wiener)
      << ',' << to_string(r.avg_distance) << ',' << to_string(r.diameter) << ','
      << to_string(r.mfpt) << ',' << source << ',' << decimal(r.avg_distance) << ','
      << decimal(r.mfpt) << '\n';
  return row.str();
}

}  // namespace

Range parse_range(std::string_view text) {
  if (const auto eq = text.find('='); eq != std::string_view::npos) text = text.substr(eq + 1);
  Range r;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    r.first = parse_u32(text.substr(0, dots), "range start");
    r.last = parse_u32(text.substr(dots + 2), "range end");
  } else {
    r.first = r.last = parse_u32(text, "range");
  }
  if (r.first > r.last) throw InvalidArgument("empty range " + std::string(text));
  return r;
}

ModelKind parse_model(std::string_view name) {
  if (name == "odot") return ModelKind::Odot;
  if (name == "star") return ModelKind::Star;
  throw InvalidArgument("unknown model '" + std::string(name) + "' (expected odot or star)");
}

GrowthOp parse_op(std::string_view name, std::uint32_t m) {
  if (name == "subdivision") return GrowthOp::subdivision();
  if (name == "star") return GrowthOp::star_fractal(m);
  if (name == "vertex") return GrowthOp::vertex_op(m);
  throw InvalidArgument("unknown op '" + std::string(name) + "' (expected subdivision, star or vertex)");
}

std::string sweep_csv(const SweepOptions& opts) {
  std::string csv =
      "model,t,m,order,wiener,avg_distance,diameter,mfpt,source,avg_distance_decimal,mfpt_decimal\n";
  const char* name = to_string(opts.model);
  for (std::uint32_t t = opts.t.first; t <= opts.t.last; ++t) {
    for (std::uint32_t m = opts.m.first; m <= opts.m.last; ++m) {
      const ModelParams p{t, m, opts.max_build_order};
      const ModelReport analytic = model_metrics(opts.model, p);
      csv += csv_row(name, t, m, analytic, "analytic");
      if (analytic.order <= opts.max_build_order) {
        csv += csv_row(name, t, m, measured_metrics(build_model(opts.model, p)), "built");
      }
    }
  }
  return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Wiener indices of grown trees", "treewiener"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string model;
  std::uint32_t t = 0;
  std::uint32_t m = 1;
  CustomSpec custom;
  std::string out_path = "-";
  std::string in_path;
  std::uint64_t max_order = 1'000'000;
  std::uint64_t max_build = 20'000;

  auto* gen = app.add_subcommand("gen", "Write a model tree as an edge list");
  gen->add_option("model", model, "odot | star | custom")->required();
  gen->add_option("t", t, "generations")->required();
  gen->add_option("m", m, "operation parameter")->required();
  gen->add_option("--seed", custom.seed_file, "seed edge list (custom)");
  gen->add_option("--op", custom.op, "subdivision | star | vertex (custom)");
  gen->add_option("--out", out_path, "output file, - for stdout");
  gen->add_option("--max-order", max_order, "vertex budget");

  auto* metrics = app.add_subcommand("metrics", "Analytic and measured metrics as JSON");
  metrics->add_option("model", model, "odot | star | custom");
  metrics->add_option("t", t, "generations");
  metrics->add_option("m", m, "operation parameter");
  metrics->add_option("--seed", custom.seed_file, "seed edge list (custom)");
  metrics->add_option("--op", custom.op, "subdivision | star | vertex (custom)");
  metrics->add_option("--in", in_path, "measure an edge-list file instead of a model");
  metrics->add_option("--max-build-order", max_build, "build and measure only up to this order");

  VerifyOptions vopts;
  auto* ver = app.add_subcommand("verify", "Run exact property suites against the oracles");
  ver->add_option("suite", vopts.suite, "theorems | models | walks | all")
      ->check(CLI::IsMember({"theorems", "models", "walks", "all"}));
  ver->add_option("trials", vopts.trials, "random seed trees");
  ver->add_option("max_n", vopts.max_n, "largest random seed order")->check(CLI::Range(2U, 100000U));
  ver->add_option("rng_seed", vopts.rng_seed, "master seed");
  ver->add_option("--max-build-order", vopts.max_build_order, "largest graph built");
  ver->add_option("--mc-walks", vopts.mc_walks, "walks per Monte Carlo check");

  std::string t_range;
  std::string m_range;
  auto* sweep = app.add_subcommand("sweep", "CSV of analytic and built metrics over a (t, m) grid");
  sweep->add_option("model", model, "odot | star")->required();
  sweep->add_option("t_range", t_range, "e.g. 1..5 or t=1..5")->required();
  sweep->add_option("m_range", m_range, "e.g. 1..2 or m=1..2")->required();
  sweep->add_option("--out", out_path, "output file, - for stdout");
  sweep->add_option("--max-build-order", max_build, "add built rows up to this order");

  WalkConfig wcfg;
  auto* walk = app.add_subcommand("walk", "Exact and Monte Carlo mean hitting time");
  walk->add_option("model", model, "odot | star | custom");
  walk->add_option("t", t, "generations");
  walk->add_option("m", m, "operation parameter");
  walk->add_option("--seed", custom.seed_file, "seed edge list (custom)");
  walk->add_option("--op", custom.op, "subdivision | star | vertex (custom)");
  walk->add_option("--in", in_path, "edge-list file instead of a model");
  walk->add_option("--walks", wcfg.num_walks, "number of walks");
  walk->add_option("--rng-seed", wcfg.rng_seed, "master seed");
  walk->add_option("--max-steps", wcfg.max_steps, "per-walk step cutoff");
  walk->add_option("--threads", wcfg.threads, "worker threads");
  walk->add_option("--max-order", max_order, "vertex budget");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const TreeGraph tree = build_any(model, t, m, custom, max_order);
      write_output(out_path, to_edge_list(tree), out);
      (out_path == "-" ? err : out) << "order " << tree.order() << " size " << tree.size() << '\n';
      return kOk;
    }

    if (metrics->parsed()) {
      json j;
      if (!in_path.empty()) {
        const TreeGraph tree = from_edge_list(read_file(in_path));
        j = report_json(measured_metrics(tree));
        j["source"] = "built";
        j["size"] = tree.size();
        j["degree_histogram"] = histogram_json(tree);
      } else {
        if (model.empty()) throw InvalidArgument("metrics needs a model or --in FILE");
        j["model"] = model;
        j["t"] = t;
        j["m"] = m;
        if (model != "custom") j["analytic"] = report_json(model_metrics(parse_model(model), {t, m}));
        const TreeGraph tree = build_any(model, t, m, custom, max_build);
        j["built"] = report_json(measured_metrics(tree));
        j["built"]["degree_histogram"] = histogram_json(tree);
      }
      out << j.dump() << '\n';
      return kOk;
    }

    if (ver->parsed()) {
      const auto result = verify(vopts, out);
      return result.failures == 0 ? kOk : kVerifyFailed;
    }

    if (sweep->parsed()) {
      SweepOptions s;
      s.model = parse_model(model);
      s.t = parse_range(t_range);
      s.m = parse_range(m_range);
      s.max_build_order = max_build;
      write_output(out_path, sweep_csv(s), out);
      return kOk;
    }

    if (walk->parsed()) {
      if (in_path.empty() && model.empty()) throw InvalidArgument("walk needs a model or --in FILE");
      const TreeGraph tree = in_path.empty() ? build_any(model, t, m, custom, max_order)
                                             : from_edge_list(read_file(in_path));
      const Rational exact = exact_mean_hitting(tree);
      const WalkEstimate est = mc_mean_hitting(tree, wcfg);
      json j{{"order", tree.order()},
             {"exact", to_string(exact)},
             {"exact_decimal", to_double(exact)},
             {"two_s_over_n", to_string(Rational(2 * wiener_subtree(tree), BigCount(tree.order())))},
             {"estimate", est.estimate},
             {"stderr", est.std_error},
             {"walks", wcfg.num_walks},
             {"completed", est.completed},
             {"truncated", est.truncated},
             {"rng_seed", wcfg.rng_seed}};
      out << j.dump() << '\n';
      return kOk;
    }
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace treewiener::cli
