#include "minbucket/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "minbucket/error.hpp"
#include "minbucket/graphgen.hpp"

namespace minbucket {

Degree CapSpec::apply(std::uint64_t n) const {
  if (n < 2) throw ParameterError("experiments need n >= 2");
  double cap = 0.0;
  switch (rule) {
    case CapRule::kSqrtN:
      cap = std::floor(std::sqrt(static_cast<double>(n)));
      break;
    case CapRule::kSqrtNOverLog2: {
      const double ln = std::log(static_cast<double>(n));
      cap = std::floor(std::sqrt(static_cast<double>(n)) / (ln * ln));
      break;
    }
    case CapRule::kFixed:
      cap = static_cast<double>(fixed);
      break;
  }
  cap = std::clamp(cap, 1.0, static_cast<double>(n - 1));
  return static_cast<Degree>(cap);
}

void ExperimentConfig::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be a finite value > 1");
  if (n_values.empty()) throw ParameterError("n-list is empty");
  if (!std::is_sorted(n_values.begin(), n_values.end()) ||
      std::adjacent_find(n_values.begin(), n_values.end()) != n_values.end()) {
    throw ParameterError("n-list must be strictly ascending");
  }
  if (n_values.front() < 2) throw ParameterError("every n must be at least 2");
  if (n_values.back() > 0xffffffffULL) throw ParameterError("n exceeds 32-bit vertex ids");
  if (trials < 1) throw ParameterError("trials must be at least 1");
  if (workers < 1) throw ParameterError("workers must be at least 1");
  if (cap.rule == CapRule::kFixed && cap.fixed < 1) throw ParameterError("fixed cap must be at least 1");
}

Seed trial_seed(Seed master, std::uint64_t n, unsigned trial) {
  return derive_seed(master, {n, static_cast<std::uint64_t>(trial)});
}

std::uint64_t estimate_trial_bytes(const ExperimentConfig& cfg, std::uint64_t n) {
  const auto dist = ReferenceDistribution::power_law(cfg.alpha, cfg.cap.apply(n));
  const double mean = moment(dist, 1.0).value;
  const double stubs = mean * static_cast<double>(n) + 1.0;
  // degrees + sorted view + ids, stub array, pair keys, CSR, buckets, rank copy
  const double bytes = 12.0 * n + 4.0 * stubs + 8.0 * stubs / 2 + (8.0 * n + 4.0 * stubs) + (8.0 * n + 4.0 * stubs) +
                       4.0 * n;
  return static_cast<std::uint64_t>(bytes);
}

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, const ReferenceDistribution& dist, Degree cap,
                      const DegreeSequence* shared, std::uint64_t n, unsigned t) {
  TrialRecord rec;
  rec.n = n;
  rec.trial = t;
  rec.seed = trial_seed(cfg.master_seed, n, t);

  DegreeSequence local;
  const DegreeSequence* seq = shared;
  if (seq == nullptr) {
    if (cfg.degree_model == DegreeModel::kIid) {
      local = sample_iid_degrees(dist, n, derive_seed(rec.seed, {0}));
    } else {
      local = power_law_sequence({cfg.alpha, n, cap});
    }
    seq = &local;
  }

  const GeneratedGraph gen = generate_ecm(*seq, derive_seed(rec.seed, {1}));
  const SimpleGraph& g = gen.graph;

  EnumerateOptions opts;
  opts.tie_mode = cfg.tie_mode;
  if (cfg.bucket_by_target) opts.rank_degrees = seq->per_vertex();
  const WorkReport report = minbucket_enumerate(g, opts);

  rec.work = report.wedges_enumerated;
  rec.trivial_work = trivial_wedge_total(g);
  rec.edges = g.edge_count();
  rec.mean_degree = 2.0 * static_cast<double>(rec.edges) / static_cast<double>(n);

  if (cfg.verify_identities) {
    IdentityCheck check;
    check.bucket_formula = bucket_wedge_total(BucketAssignment(g, cfg.tie_mode, opts.rank_degrees));
    check.trivial_counter = trivial_enumerate(g).wedges_enumerated;
    EnumerateOptions other = opts;
    other.tie_mode = cfg.tie_mode == TieMode::kConsistent ? TieMode::kBoth : TieMode::kConsistent;
    const std::uint64_t other_work = minbucket_enumerate(g, other).wedges_enumerated;
    check.consistent_work = cfg.tie_mode == TieMode::kConsistent ? rec.work : other_work;
    check.both_work = cfg.tie_mode == TieMode::kBoth ? rec.work : other_work;
    check.triangles = report.triangle_count;
    rec.check = check;
  }
  return rec;
}

}  // namespace

std::vector<SizeSummary> summarize(const std::vector<TrialRecord>& trials, std::optional<double> limit_constant) {
  std::vector<SizeSummary> out;
  std::size_t i = 0;
  while (i < trials.size()) {
    std::size_t j = i;
    while (j < trials.size() && trials[j].n == trials[i].n) ++j;
    SizeSummary s;
    s.n = trials[i].n;
    s.trials = static_cast<unsigned>(j - i);
    CompensatedSum sum;
    for (std::size_t k = i; k < j; ++k) sum += static_cast<double>(trials[k].work);
    s.mean_work = sum.value() / s.trials;
    if (s.trials > 1) {
      CompensatedSum sq;
      for (std::size_t k = i; k < j; ++k) {
        const double dev = static_cast<double>(trials[k].work) - s.mean_work;
        sq += dev * dev;
      }
      s.stddev_work = std::sqrt(sq.value() / (s.trials - 1));
    }
    const double n = static_cast<double>(s.n);
    s.mean_ratio = s.mean_work / n;
    s.stddev_ratio = s.stddev_work / n;
    if (limit_constant) s.reference_cn = *limit_constant * n;
    out.push_back(s);
    i = j;
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  if (cfg.alpha > 7.0 / 3.0) {
    const SeriesResult c = limit_constant(ReferenceDistribution::power_law(cfg.alpha), 1e-9);
    if (!c.divergent) result.limit_constant = c.value;
  }

  for (std::uint64_t n : cfg.n_values) {
    if (cfg.memory_limit_bytes > 0) {
      const std::uint64_t concurrent = std::min<std::uint64_t>(cfg.workers, cfg.trials);
      const std::uint64_t need = estimate_trial_bytes(cfg, n) * concurrent;
      if (need > cfg.memory_limit_bytes) {
        result.complete = false;
        result.abort_reason = "estimated " + std::to_string(need) + " bytes for n = " + std::to_string(n) +
                              " exceeds the memory limit of " + std::to_string(cfg.memory_limit_bytes);
        break;
      }
    }
    const Degree cap = cfg.cap.apply(n);
    const auto dist = ReferenceDistribution::power_law(cfg.alpha, cap);
    std::optional<DegreeSequence> shared;
    if (cfg.fixed_sequence) {
      const Seed seq_seed = derive_seed(cfg.master_seed, {n, ~0ULL});
      shared = cfg.degree_model == DegreeModel::kIid ? sample_iid_degrees(dist, n, seq_seed)
                                                     : power_law_sequence({cfg.alpha, n, cap});
    }

    std::vector<TrialRecord> records(cfg.trials);
    std::atomic<unsigned> next{0};
    auto work = [&] {
      for (;;) {
        const unsigned t = next.fetch_add(1, std::memory_order_relaxed);
        if (t >= cfg.trials) return;
        records[t] = run_trial(cfg, dist, cap, shared ? &*shared : nullptr, n, t);
      }
    };
    const unsigned threads = std::min(cfg.workers, cfg.trials);
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
    }
    result.trials.insert(result.trials.end(), records.begin(), records.end());
    if (progress) progress(summarize(records, result.limit_constant).front());
  }
  result.sizes = summarize(result.trials, result.limit_constant);
  return result;
}

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string format_csv(const ExperimentResult& result) {
  std::string out = "n,alpha,trial,work,trivial_work,edges,ratio\n";
  const std::string alpha = shortest(result.config.alpha);
  for (const TrialRecord& r : result.trials) {
    out += std::to_string(r.n) + ',' + alpha + ',' + std::to_string(r.trial) + ',' + std::to_string(r.work) + ',' +
           std::to_string(r.trivial_work) + ',' + std::to_string(r.edges) + ',' +
           fixed6(static_cast<double>(r.work) / static_cast<double>(r.n)) + '\n';
  }
  return out;
}

std::string format_plot_data(const ExperimentResult& result) {
  std::string out = "n,mean_ratio,stddev,reference_Cn\n";
  for (const SizeSummary& s : result.sizes) {
    out += std::to_string(s.n) + ',' + fixed6(s.mean_ratio) + ',' + fixed6(s.stddev_ratio) + ',' +
           (s.reference_cn ? fixed6(*s.reference_cn) : std::string()) + '\n';
  }
  return out;
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& path) {
  write_text(format_csv(result), path);
}

void emit_plot_data(const ExperimentResult& result, const std::filesystem::path& path) {
  write_text(format_plot_data(result), path);
}

std::vector<ComparisonRow> compare_bounds(const ExperimentResult& result, const BoundReport& report) {
  if (!report.alpha || std::fabs(*report.alpha - result.config.alpha) > 1e-12) {
    throw UsageError("bound report exponent does not match the experiment");
  }
  if (report.n > 0 && std::find(result.config.n_values.begin(), result.config.n_values.end(), report.n) ==
                          result.config.n_values.end()) {
    throw UsageError("bound report size n = " + std::to_string(report.n) + " is not among the experiment sizes");
  }
  std::optional<double> c;
  if (report.limit_constant && !report.limit_constant->divergent) c = report.limit_constant->value;

  std::vector<ComparisonRow> rows;
  for (const SizeSummary& s : result.sizes) {
    ComparisonRow row;
    row.n = s.n;
    row.mean_work = s.mean_work;
    row.work_ratio = s.mean_ratio;
    if (c) {
      row.predicted = *c * static_cast<double>(s.n);
      row.ratio = s.mean_work / *row.predicted;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::uint64_t> parse_n_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(pos, end - pos));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || !(value >= 1.0) ||
        value != std::floor(value) || value > 1e15) {
      throw ParameterError("bad vertex count '" + token + "' in n-list");
    }
    out.push_back(static_cast<std::uint64_t>(value));
    pos = end + 1;
  }
  return out;
}

CapSpec parse_cap(std::string_view text) {
  if (text == "sqrt-n") return {CapRule::kSqrtN, 0};
  if (text == "sqrt-n-over-log2") return {CapRule::kSqrtNOverLog2, 0};
  Degree k = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec == std::errc{} && ptr == text.data() + text.size() && k >= 1) return {CapRule::kFixed, k};
  throw ParameterError("cap must be sqrt-n, sqrt-n-over-log2 or a positive integer, got '" + std::string(text) + "'");
}

TieMode parse_tie_mode(std::string_view text) {
  if (text == "consistent") return TieMode::kConsistent;
  if (text == "both") return TieMode::kBoth;
  throw ParameterError("tie mode must be consistent or both, got '" + std::string(text) + "'");
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParameterError("bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_flag(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ParameterError("bad boolean '" + std::string(value) + "' for " + std::string(key));
}

}  // namespace

void apply_setting(ExperimentSettings& settings, std::string_view key, std::string_view value) {
  ExperimentConfig& cfg = settings.config;
  if (key == "alpha") {
    cfg.alpha = parse_number<double>(key, value);
  } else if (key == "n-list") {
    cfg.n_values = parse_n_list(value);
  } else if (key == "trials") {
    cfg.trials = parse_number<unsigned>(key, value);
  } else if (key == "tie") {
    cfg.tie_mode = parse_tie_mode(value);
  } else if (key == "cap") {
    cfg.cap = parse_cap(value);
  } else if (key == "seed") {
    cfg.master_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "workers") {
    cfg.workers = parse_number<unsigned>(key, value);
  } else if (key == "csv") {
    settings.csv = std::filesystem::path(value);
  } else if (key == "plot-data") {
    settings.plot_data = std::filesystem::path(value);
  } else if (key == "degree-model") {
    if (value == "iid") {
      cfg.degree_model = DegreeModel::kIid;
    } else if (value == "powerlaw") {
      cfg.degree_model = DegreeModel::kDeterministicPowerLaw;
    } else {
      throw ParameterError("degree-model must be iid or powerlaw");
    }
  } else if (key == "fixed-sequence") {
    cfg.fixed_sequence = parse_flag(key, value);
  } else if (key == "bucket-degrees") {
    if (value != "realized" && value != "target") throw ParameterError("bucket-degrees must be realized or target");
    cfg.bucket_by_target = value == "target";
  } else if (key == "verify") {
    cfg.verify_identities = parse_flag(key, value);
  } else if (key == "memory-limit-mb") {
    cfg.memory_limit_bytes = parse_number<std::uint64_t>(key, value) << 20;
  } else {
    throw ParameterError("unknown setting '" + std::string(key) + "'");
  }
}

void read_settings_file(const std::filesystem::path& path, ExperimentSettings& settings) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    try {
      apply_setting(settings, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    } catch (const ParameterError& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("MINBUCKET_WORKERS")) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 1;
}

}  // namespace minbucket
