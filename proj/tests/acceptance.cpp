// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "minbucket/bounds.hpp"
#include "minbucket/enumerate.hpp"
#include "minbucket/graphgen.hpp"
#include "minbucket/harness.hpp"

using namespace minbucket;

namespace {

constexpr double kTargetConstant = 0.687935;

struct Outcome {
  int failures = 0;

  void report(int id, const char* name, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] %d. %s: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, name, detail.c_str(), seconds);
    std::fflush(stdout);
    failures += pass ? 0 : 1;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

/// Work identities on one graph: counters equal the closed forms, MinBucket
/// never exceeds trivial, both-mode never below consistent.
bool identities_hold(const SimpleGraph& g) {
  const WorkReport trivial = trivial_enumerate(g);
  const WorkReport consistent = minbucket_enumerate(g);
  EnumerateOptions both_opts;
  both_opts.tie_mode = TieMode::kBoth;
  const WorkReport both = minbucket_enumerate(g, both_opts);
  return trivial.wedges_enumerated == trivial_wedge_total(g) &&
         consistent.wedges_enumerated == bucket_wedge_total(BucketAssignment(g, TieMode::kConsistent)) &&
         both.wedges_enumerated == bucket_wedge_total(BucketAssignment(g, TieMode::kBoth)) &&
         consistent.wedges_enumerated <= trivial.wedges_enumerated && both.wedges_enumerated >= consistent.wedges_enumerated;
}

DegreeSequence mixed_sequence(std::mt19937_64& gen, int kind) {
  const std::size_t n = 10 + gen() % 191;
  switch (kind % 3) {
    case 0: {
      std::vector<Degree> d(n);
      const Degree top = 1 + static_cast<Degree>(gen() % 20);
      for (auto& x : d) x = 1 + static_cast<Degree>(gen() % top);
      return DegreeSequence(d);
    }
    case 1: {
      const double alpha = 2.0 + 1.5 * std::generate_canonical<double, 53>(gen);
      const Degree cap = std::max<Degree>(1, static_cast<Degree>(std::sqrt(double(n))) * 2);
      return sample_iid_degrees(ReferenceDistribution::power_law(alpha, std::min<Degree>(cap, n - 1)), n, gen());
    }
    default: {
      const double alpha = 1.5 + std::generate_canonical<double, 53>(gen);
      return power_law_sequence({alpha, n, static_cast<Degree>(std::max<std::size_t>(1, n / 4))});
    }
  }
}

ExperimentConfig reproduction_config(double alpha, unsigned workers) {
  ExperimentConfig cfg;
  cfg.alpha = alpha;
  cfg.n_values = {10'000, 100'000, 1'000'000};
  cfg.trials = 10;
  cfg.tie_mode = TieMode::kBoth;
  cfg.cap = {CapRule::kSqrtN, 0};
  cfg.degree_model = DegreeModel::kIid;
  cfg.master_seed = 20'240'601;
  cfg.workers = workers;
  cfg.verify_identities = true;
  return cfg;
}

void print_sizes(const ExperimentResult& r) {
  for (const SizeSummary& s : r.sizes) {
    std::printf("       alpha=%.1f n=%-8llu mean work/n = %.6f  (sd %.6f over %u trials)\n", r.config.alpha,
                static_cast<unsigned long long>(s.n), s.mean_ratio, s.stddev_ratio, s.trials);
  }
}

}  // namespace

int main() {
  Outcome out;
  bool identities_ok = true;
  std::uint64_t identity_graphs = 0;

  {  // 1
    Stopwatch sw;
    std::mt19937_64 gen(1);
    int mismatches = 0;
    int duplicate_emissions = 0;
    for (int i = 0; i < 200; ++i) {
      const DegreeSequence seq = mixed_sequence(gen, i);
      const SimpleGraph g = i < 100 ? generate_ecm(seq, gen()).graph : generate_chung_lu(seq, gen()).graph;
      const auto truth = oracle_triangles(g);
      EnumerateOptions opts;
      opts.list_triangles = true;
      const WorkReport mb = minbucket_enumerate(g, opts);
      const WorkReport tr = trivial_enumerate(g, opts);
      mismatches += (mb.triangles != truth || tr.triangles != truth) ? 1 : 0;
      duplicate_emissions += mb.raw_emissions != truth.size() ? 1 : 0;
      identities_ok = identities_ok && identities_hold(g);
      ++identity_graphs;
    }
    out.report(1, "Oracle equivalence", mismatches == 0 && duplicate_emissions == 0,
               fmt("200 graphs, %d set mismatches, %d with repeated emissions", mismatches, duplicate_emissions),
               sw.seconds());
  }

  {  // 2
    Stopwatch sw;
    const SeriesResult c = limit_constant(ReferenceDistribution::power_law(2.4), 1e-6);
    const bool pass = !c.divergent && std::fabs(c.value - kTargetConstant) <= 1e-4;
    out.report(2, "Limit constant alpha=2.4", pass,
               fmt("C = %.7f, bracket [%.9f, %.9f], target %.6f +- 1e-4", c.value, c.bracket.lo, c.bracket.hi,
                   kTargetConstant),
               sw.seconds());
    const SeriesResult capped = limit_constant(ReferenceDistribution::power_law(2.4, 50'000));
    std::printf("       note: the same sum over the pmf truncated at t = 50000 gives %.7f\n", capped.value);
  }

  {  // 3
    Stopwatch sw;
    std::mt19937_64 gen(3);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + gen() % 10'000;
      std::vector<Degree> d(n);
      const Degree top = 1 + static_cast<Degree>(gen() % (i % 2 == 0 ? 10 : 2000));
      for (auto& x : d) x = 1 + static_cast<Degree>(gen() % top);
      violations += holder_relation_holds(DegreeSequence(d)) ? 0 : 1;
    }
    out.report(3, "Hölder relation", violations == 0, fmt("1000 sequences, %d violations", violations), sw.seconds());
  }

  {  // 4
    Stopwatch sw;
    const DegreeSequence seq({2, 2});
    int hits = 0;
    for (int s = 0; s < 10'000; ++s) hits += generate_ecm(seq, static_cast<Seed>(s)).graph.edge_count() == 1;
    const double p = hits / 1e4;
    out.report(4, "ECM(2,2) edge probability", std::fabs(p - 2.0 / 3.0) <= 0.02,
               fmt("P(edge) = %.4f, target 0.6667 +- 0.02", p), sw.seconds());
  }

  ExperimentResult linear;
  {  // 5
    Stopwatch sw;
    linear = run_experiment(reproduction_config(2.4, 1));
    print_sizes(linear);
    const double r5 = linear.sizes[1].mean_ratio;
    const double r6 = linear.sizes[2].mean_ratio;
    const bool pass = r5 < 1.0 && r6 < 1.0 && std::fabs(r6 - kTargetConstant) <= 0.25 * kTargetConstant;
    out.report(5, "Linear regime alpha=2.4", pass,
               fmt("work/n = %.4f at 1e5, %.4f at 1e6; band for 1e6 [%.4f, %.4f]", r5, r6, 0.75 * kTargetConstant,
                   1.25 * kTargetConstant),
               sw.seconds());
    for (const SizeSummary& s : linear.sizes) {
      const Degree cap = linear.config.cap.apply(s.n);
      const SeriesResult c = limit_constant(ReferenceDistribution::power_law(2.4, cap));
      std::printf("       note: n = %llu, cap %u: constant of the capped law %.4f, observed %.4f\n",
                  static_cast<unsigned long long>(s.n), cap, c.value, s.mean_ratio);
    }
    for (const TrialRecord& t : linear.trials) {
      const IdentityCheck& c = *t.check;
      identities_ok = identities_ok && c.bucket_formula == t.work && c.trivial_counter == t.trivial_work &&
                      t.work <= t.trivial_work && c.both_work >= c.consistent_work;
      ++identity_graphs;
    }
  }

  {  // 6
    Stopwatch sw;
    ExperimentConfig cfg = reproduction_config(2.3, 1);
    cfg.verify_identities = false;
    const ExperimentResult r = run_experiment(cfg);
    print_sizes(r);
    const double a = r.sizes[0].mean_ratio;
    const double b = r.sizes[1].mean_ratio;
    const double c = r.sizes[2].mean_ratio;
    out.report(6, "Superlinear regime alpha=2.3", a < b && b < c,
               fmt("work/n = %.4f, %.4f, %.4f at 1e4, 1e5, 1e6", a, b, c), sw.seconds());
  }

  {  // 7
    Stopwatch sw;
    const DegreeSequence seq(std::vector<Degree>(10'000, 50));
    std::uint64_t low = 0;
    for (Seed s = 0; s < 10; ++s) {
      const SimpleGraph g = generate_ecm(seq, 700 + s).graph;
      for (VertexId v = 0; v < g.vertex_count(); ++v) low += g.degree(v) < 25;
    }
    const double frac = double(low) / 1e5;
    out.report(7, "ECM degree concentration", frac < 0.01, fmt("fraction with D_v < d_v/2 = %.5f", frac),
               sw.seconds());
  }

  {  // 8
    out.report(8, "Work dominance and identities", identities_ok,
               fmt("%llu graphs checked", static_cast<unsigned long long>(identity_graphs)), 0.0);
  }

  {  // 9
    Stopwatch sw;
    const ExperimentResult again = run_experiment(reproduction_config(2.4, 8));
    const bool same = format_csv(again) == format_csv(linear);
    out.report(9, "Determinism across worker counts", same,
               same ? "CSV byte-identical for workers 1 and 8" : "CSV differs", sw.seconds());
  }

  std::printf("%d criteria failed\n", out.failures);
  return out.failures == 0 ? 0 : 1;
}
