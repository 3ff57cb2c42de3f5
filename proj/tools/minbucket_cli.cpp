// minbucket: degree sequences, random graphs, triangle enumeration, bounds and
// the Monte Carlo work experiment from the command line.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "minbucket/bounds.hpp"
#include "minbucket/degrees.hpp"
#include "minbucket/enumerate.hpp"
#include "minbucket/error.hpp"
#include "minbucket/graphgen.hpp"
#include "minbucket/harness.hpp"

namespace mb = minbucket;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kResourceError = 3,
  kIoError = 4,
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mb::IoError("cannot write " + path);
  out << text;
  if (!out) throw mb::IoError("write failed for " + path);
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct GenDegreesArgs {
  std::string model = "powerlaw";
  double alpha = 2.4;
  std::uint64_t n = 0;
  std::optional<mb::Degree> dmax;
  mb::Seed seed = 1;
  std::string in;
  std::string out;
  bool strict = false;
};

int run_gen_degrees(const GenDegreesArgs& a) {
  mb::DegreeSequence seq;
  auto cap = [&] {
    if (a.dmax) return *a.dmax;
    return static_cast<mb::Degree>(std::max(1.0, std::floor(std::sqrt(static_cast<double>(a.n)))));
  };
  if (a.model == "powerlaw") {
    seq = mb::power_law_sequence({a.alpha, a.n, cap()});
  } else if (a.model == "iid-powerlaw") {
    if (a.n == 0) throw mb::ParameterError("--n must be positive");
    seq = mb::sample_iid_degrees(mb::ReferenceDistribution::power_law(a.alpha, cap()), a.n, a.seed);
  } else {
    if (a.in.empty()) throw mb::ParameterError("--model file needs --in PATH");
    seq = mb::read_degree_file(a.in);
  }
  const mb::TruncationReport trunc = mb::validate_truncation(seq, a.strict);
  mb::write_degree_file(seq, a.out);
  std::cout << "n=" << seq.size() << "\nm=" << seq.edge_count() << "\nmax_degree=" << seq.max_degree()
            << "\nparity_adjusted=" << (seq.parity_adjusted() ? "true" : "false")
            << "\nbelow_half_sqrt_m=" << (trunc.below_half_sqrt_m ? "true" : "false")
            << "\nbelow_quarter_sqrt_m=" << (trunc.below_quarter_sqrt_m ? "true" : "false") << '\n';
  if (!trunc.message.empty()) std::cerr << "warning: " << trunc.message << '\n';
  return kOk;
}

struct GenGraphArgs {
  std::string model = "ecm";
  std::string degrees;
  mb::Seed seed = 1;
  std::string out;
  bool trace = false;
  bool fast = false;
};

int run_gen_graph(const GenGraphArgs& a) {
  const mb::DegreeSequence seq = mb::read_degree_file(a.degrees);
  const mb::GeneratedGraph gen =
      a.model == "ecm" ? mb::generate_ecm(seq, a.seed)
                       : mb::generate_chung_lu(seq, a.seed, a.fast ? mb::ChungLuMethod::kSkipping : mb::ChungLuMethod::kPairwise);
  mb::save_graph(gen.graph, a.out);
  if (a.trace) {
    const mb::GenerationTrace& t = gen.trace;
    std::cout << "model=" << mb::to_string(t.model) << "\nseed=" << t.seed << "\nvertices=" << t.vertices
              << "\ntarget_edges=" << t.target_edges << "\nedges=" << t.edges
              << "\nself_loops_erased=" << t.self_loops_erased << "\nmulti_edges_erased=" << t.multi_edges_erased
              << "\nclamped_pairs=" << t.clamped_pairs << '\n';
  }
  return kOk;
}

struct TrianglesArgs {
  std::string graph;
  std::string algo = "minbucket";
  std::string tie = "consistent";
  std::string list_out;
  std::string stats_out;
  std::optional<std::size_t> n;
  std::size_t list_limit = 10'000'000;
  unsigned workers = 1;
};

int run_triangles(const TrianglesArgs& a) {
  const mb::SimpleGraph g = mb::load_graph(a.graph, a.n);
  nlohmann::ordered_json stats;
  std::vector<mb::Triangle> listing;
  bool overflow = false;
  stats["algorithm"] = a.algo;
  if (a.algo == "oracle") {
    listing = mb::oracle_triangles(g);
    stats["wedges_enumerated"] = nullptr;
    stats["closed_wedges"] = nullptr;
    stats["triangle_count"] = listing.size();
    stats["max_bucket"] = nullptr;
    if (listing.size() > a.list_limit) {
      listing.resize(a.list_limit);
      overflow = true;
    }
  } else {
    mb::EnumerateOptions opts;
    opts.tie_mode = mb::parse_tie_mode(a.tie);
    opts.list_triangles = !a.list_out.empty();
    opts.list_limit = a.list_limit;
    opts.workers = a.workers;
    const mb::WorkReport r = a.algo == "trivial" ? mb::trivial_enumerate(g, opts) : mb::minbucket_enumerate(g, opts);
    stats["tie"] = a.algo == "minbucket" ? a.tie : "n/a";
    stats["wedges_enumerated"] = r.wedges_enumerated;
    stats["closed_wedges"] = r.closed_wedges;
    stats["triangle_count"] = r.triangle_count;
    stats["max_bucket"] = r.max_bucket;
    listing = r.triangles;
    overflow = r.listing_overflow;
  }
  stats["listing_overflow"] = overflow;
  if (!a.list_out.empty()) {
    std::string text;
    for (const auto& t : listing) {
      text += std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
    }
    write_file(a.list_out, text);
  }
  const std::string record = stats.dump() + '\n';
  if (a.stats_out.empty()) {
    std::cout << record;
  } else {
    write_file(a.stats_out, record);
  }
  return kOk;
}

int run_bounds(const std::string& degrees, std::optional<double> alpha) {
  const mb::DegreeSequence seq = mb::read_degree_file(degrees);
  const mb::BoundReport r = mb::bound_report(seq, alpha);
  const mb::TruncationReport trunc = mb::validate_truncation(seq);
  std::cout << "# bound expressions, constants suppressed\n"
            << "n=" << r.n << "\nm=" << r.m << "\ntrivial_bound=" << mb::to_string(r.trivial_bound)
            << "\nminbucket_bound=" << fixed(r.minbucket_bound, 3)
            << "\nbelow_half_sqrt_m=" << (trunc.below_half_sqrt_m ? "true" : "false") << '\n';
  if (r.power_law) {
    const mb::PowerLawPrediction& p = *r.power_law;
    std::cout << "alpha=" << p.alpha << "\nd_max=" << p.d_max << "\ntrivial_exponent=" << fixed(p.trivial_exponent)
              << "\ntrivial_prediction=" << fixed(p.trivial, 3) << "\ntrivial_growth=" << mb::to_string(p.trivial_growth)
              << "\nminbucket_exponent=" << fixed(p.minbucket_exponent)
              << "\nminbucket_prediction=" << fixed(p.minbucket, 3)
              << "\nminbucket_growth=" << mb::to_string(p.minbucket_growth) << '\n';
  }
  if (r.limit_constant) {
    if (r.limit_constant->divergent) {
      std::cout << "limit_constant=divergent\n";
    } else {
      std::cout << "limit_constant=" << fixed(r.limit_constant->value, 9) << '\n';
    }
  }
  return kOk;
}

int run_limit_constant(double alpha, double tol, std::optional<mb::Degree> cap) {
  const auto dist = mb::ReferenceDistribution::power_law(alpha, cap);
  const mb::SeriesResult c = mb::limit_constant(dist, tol);
  std::cout << "alpha=" << alpha << '\n';
  if (cap) std::cout << "cap=" << *cap << '\n';
  if (c.divergent) {
    std::cout << "divergent=true\n";
    return kOk;
  }
  std::cout << "divergent=false\nC=" << fixed(c.value, 9) << "\nbracket_lo=" << fixed(c.bracket.lo, 12)
            << "\nbracket_hi=" << fixed(c.bracket.hi, 12) << "\nterms=" << c.terms_summed << '\n';
  return kOk;
}

int run_experiment_command(mb::ExperimentSettings settings) {
  mb::ExperimentConfig& cfg = settings.config;
  const mb::ExperimentResult result = mb::run_experiment(cfg, [](const mb::SizeSummary& s) {
    std::cerr << "n=" << s.n << " mean_work/n=" << fixed(s.mean_ratio) << " sd=" << fixed(s.stddev_ratio) << '\n';
  });
  if (settings.csv) mb::emit_csv(result, *settings.csv);
  if (settings.plot_data) mb::emit_plot_data(result, *settings.plot_data);
  if (!settings.csv) std::cout << mb::format_csv(result);
  if (!result.complete) {
    std::cerr << "aborted: " << result.abort_reason << " (completed sizes flushed)\n";
    return kResourceError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MinBucket triangle enumeration and random-graph toolkit"};
  app.require_subcommand(1);

  GenDegreesArgs gd;
  auto* gen_degrees = app.add_subcommand("gen-degrees", "Write a degree sequence file");
  gen_degrees->add_option("--model", gd.model)->check(CLI::IsMember({"powerlaw", "iid-powerlaw", "file"}));
  gen_degrees->add_option("--alpha", gd.alpha, "power-law exponent");
  gen_degrees->add_option("--n", gd.n, "vertex count");
  gen_degrees->add_option("--dmax", gd.dmax, "degree cap (default floor(sqrt(n)))");
  gen_degrees->add_option("--seed", gd.seed);
  gen_degrees->add_option("--in", gd.in, "input degree file for --model file");
  gen_degrees->add_option("--out", gd.out)->required();
  gen_degrees->add_flag("--strict", gd.strict, "fail unless max degree < sqrt(m)/2");

  GenGraphArgs gg;
  auto* gen_graph = app.add_subcommand("gen-graph", "Realize a random simple graph");
  gen_graph->add_option("--model", gg.model)->check(CLI::IsMember({"ecm", "chung-lu"}));
  gen_graph->add_option("--degrees", gg.degrees)->required();
  gen_graph->add_option("--seed", gg.seed);
  gen_graph->add_option("--out", gg.out)->required();
  gen_graph->add_flag("--trace", gg.trace, "print the generation trace");
  gen_graph->add_flag("--fast", gg.fast, "Chung-Lu via edge skipping instead of per-pair trials");

  TrianglesArgs tr;
  auto* triangles = app.add_subcommand("triangles", "Enumerate triangles and report wedge work");
  triangles->add_option("--graph", tr.graph)->required();
  triangles->add_option("--algo", tr.algo)->check(CLI::IsMember({"trivial", "minbucket", "oracle"}));
  triangles->add_option("--tie", tr.tie)->check(CLI::IsMember({"consistent", "both"}));
  triangles->add_option("--list-out", tr.list_out, "write triangles, one 'a b c' per line");
  triangles->add_option("--stats-out", tr.stats_out, "write the stats record here instead of stdout");
  triangles->add_option("--list-limit", tr.list_limit);
  triangles->add_option("--n", tr.n, "vertex count (default: max id + 1)");
  triangles->add_option("--workers", tr.workers)->check(CLI::PositiveNumber);

  std::string bounds_degrees;
  std::optional<double> bounds_alpha;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the runtime bound expressions");
  bounds->add_option("--degrees", bounds_degrees)->required();
  bounds->add_option("--alpha", bounds_alpha, "also report power-law predictions");

  double lc_alpha = 2.4;
  double lc_tol = 1e-9;
  std::optional<mb::Degree> lc_cap;
  auto* limit = app.add_subcommand("limit-constant", "Limiting work per vertex for a power law");
  limit->add_option("--alpha", lc_alpha)->required();
  limit->add_option("--tol", lc_tol);
  limit->add_option("--cap", lc_cap, "truncate the degree law at this value");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo work-per-vertex experiment");
  std::string config_path;
  experiment->add_option("--config", config_path, "key=value settings file; flags override it");
  const std::vector<std::pair<std::string, std::string>> keys{
      {"alpha", "power-law exponent"},
      {"n-list", "comma-separated vertex counts, e.g. 1e4,1e5,1e6"},
      {"trials", "trials per n"},
      {"tie", "consistent | both"},
      {"cap", "sqrt-n | sqrt-n-over-log2 | integer"},
      {"seed", "master seed"},
      {"workers", "parallel trials (default $MINBUCKET_WORKERS or 1)"},
      {"csv", "per-trial CSV path"},
      {"plot-data", "aggregated plot data path"},
      {"degree-model", "iid | powerlaw"},
      {"fixed-sequence", "reuse one degree sequence per n (true/false)"},
      {"bucket-degrees", "realized | target"},
      {"verify", "cross-check instrumented counters (true/false)"},
      {"memory-limit-mb", "abort before a size whose estimated footprint exceeds this"},
  };
  std::vector<std::pair<std::string, CLI::Option*>> experiment_options;
  std::vector<std::string> experiment_values(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    experiment_options.emplace_back(keys[i].first,
                                    experiment->add_option("--" + keys[i].first, experiment_values[i], keys[i].second));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*gen_degrees) return run_gen_degrees(gd);
    if (*gen_graph) return run_gen_graph(gg);
    if (*triangles) return run_triangles(tr);
    if (*bounds) return run_bounds(bounds_degrees, bounds_alpha);
    if (*limit) return run_limit_constant(lc_alpha, lc_tol, lc_cap);
    if (*experiment) {
      mb::ExperimentSettings settings;
      settings.config.workers = mb::default_worker_count();
      if (!config_path.empty()) mb::read_settings_file(config_path, settings);
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (experiment_options[i].second->count() > 0) mb::apply_setting(settings, keys[i].first, experiment_values[i]);
      }
      settings.config.validate();
      return run_experiment_command(std::move(settings));
    }
  } catch (const mb::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const mb::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const mb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const mb::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const mb::TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
