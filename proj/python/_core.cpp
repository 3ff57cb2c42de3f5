#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "minbucket/bounds.hpp"
#include "minbucket/degrees.hpp"
#include "minbucket/enumerate.hpp"
#include "minbucket/error.hpp"
#include "minbucket/graphgen.hpp"
#include "minbucket/harness.hpp"

namespace py = pybind11;
namespace mb = minbucket;

namespace {

std::vector<mb::Degree> to_vector(std::span<const mb::Degree> s) { return {s.begin(), s.end()}; }

mb::SimpleGraph graph_from_pairs(std::size_t n, const std::vector<std::pair<mb::VertexId, mb::VertexId>>& pairs) {
  std::vector<mb::Edge> edges(pairs.begin(), pairs.end());
  return mb::SimpleGraph::from_edges(n, edges);
}

py::dict report_dict(const mb::WorkReport& r) {
  py::dict d;
  d["algorithm"] = std::string(mb::to_string(r.algorithm));
  d["tie"] = std::string(mb::to_string(r.tie_mode));
  d["wedges_enumerated"] = r.wedges_enumerated;
  d["closed_wedges"] = r.closed_wedges;
  d["triangle_count"] = r.triangle_count;
  d["max_bucket"] = r.max_bucket;
  d["triangles"] = r.triangles;
  d["listing_overflow"] = r.listing_overflow;
  return d;
}

py::dict enumerate(const mb::SimpleGraph& g, const std::string& algorithm, const std::string& tie, bool list,
                   unsigned workers) {
  if (algorithm != "trivial" && algorithm != "minbucket") {
    throw mb::ParameterError("algorithm must be 'trivial' or 'minbucket'");
  }
  mb::EnumerateOptions opts;
  opts.tie_mode = mb::parse_tie_mode(tie);
  opts.list_triangles = list;
  opts.workers = workers;
  mb::WorkReport r;
  {
    py::gil_scoped_release release;
    r = algorithm == "trivial" ? mb::trivial_enumerate(g, opts) : mb::minbucket_enumerate(g, opts);
  }
  return report_dict(r);
}

py::dict series_dict(const mb::SeriesResult& s) {
  py::dict d;
  d["divergent"] = s.divergent;
  if (s.divergent) {
    d["value"] = py::none();
    d["bracket"] = py::none();
  } else {
    d["value"] = s.value;
    d["bracket"] = py::make_tuple(s.bracket.lo, s.bracket.hi);
  }
  d["terms"] = s.terms_summed;
  return d;
}

py::dict run_experiment(const py::dict& settings, const py::object& progress) {
  mb::ExperimentSettings parsed;
  parsed.config.workers = mb::default_worker_count();
  for (auto item : settings) {
    mb::apply_setting(parsed, py::str(item.first).cast<std::string>(), py::str(item.second).cast<std::string>());
  }
  parsed.config.validate();
  mb::ProgressFn fn;
  if (!progress.is_none()) {
    fn = [&progress](const mb::SizeSummary& s) {
      py::gil_scoped_acquire gil;
      progress(s.n, s.mean_ratio, s.stddev_ratio);
    };
  }
  mb::ExperimentResult result;
  {
    py::gil_scoped_release release;
    result = mb::run_experiment(parsed.config, fn);
  }
  if (parsed.csv) mb::emit_csv(result, *parsed.csv);
  if (parsed.plot_data) mb::emit_plot_data(result, *parsed.plot_data);

  py::list trials;
  for (const auto& t : result.trials) {
    py::dict row;
    row["n"] = t.n;
    row["trial"] = t.trial;
    row["seed"] = t.seed;
    row["work"] = t.work;
    row["trivial_work"] = t.trivial_work;
    row["edges"] = t.edges;
    row["ratio"] = static_cast<double>(t.work) / static_cast<double>(t.n);
    trials.append(row);
  }
  py::list sizes;
  for (const auto& s : result.sizes) {
    py::dict row;
    row["n"] = s.n;
    row["trials"] = s.trials;
    row["mean_work"] = s.mean_work;
    row["mean_ratio"] = s.mean_ratio;
    row["stddev_ratio"] = s.stddev_ratio;
    row["reference_cn"] = s.reference_cn ? py::cast(*s.reference_cn) : py::none();
    sizes.append(row);
  }
  py::dict out;
  out["trials"] = trials;
  out["sizes"] = sizes;
  out["limit_constant"] = result.limit_constant ? py::cast(*result.limit_constant) : py::none();
  out["complete"] = result.complete;
  out["abort_reason"] = result.abort_reason;
  out["csv"] = mb::format_csv(result);
  out["plot_data"] = mb::format_plot_data(result);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "MinBucket triangle enumeration on random power-law graphs";

  py::register_exception<mb::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<mb::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mb::TruncationError>(m, "TruncationError", PyExc_ValueError);
  py::register_exception<mb::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<mb::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<mb::ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<mb::DegreeSequence>(m, "DegreeSequence")
      .def(py::init<std::vector<mb::Degree>>(), py::arg("degrees"))
      .def("__len__", &mb::DegreeSequence::size)
      .def("__eq__", [](const mb::DegreeSequence& a, const mb::DegreeSequence& b) { return a == b; })
      .def_property_readonly("degrees", [](const mb::DegreeSequence& s) { return to_vector(s.per_vertex()); })
      .def_property_readonly("sorted", [](const mb::DegreeSequence& s) { return to_vector(s.sorted()); })
      .def_property_readonly("stub_sum", &mb::DegreeSequence::stub_sum)
      .def_property_readonly("edge_count", &mb::DegreeSequence::edge_count)
      .def_property_readonly("max_degree", &mb::DegreeSequence::max_degree)
      .def_property_readonly("parity_adjusted", &mb::DegreeSequence::parity_adjusted)
      .def("save", [](const mb::DegreeSequence& s, const std::filesystem::path& p) { mb::write_degree_file(s, p); })
      .def_static("load", [](const std::filesystem::path& p) { return mb::read_degree_file(p); });

  m.def(
      "power_law_sequence",
      [](double alpha, std::uint64_t n, mb::Degree d_max) { return mb::power_law_sequence({alpha, n, d_max}); },
      py::arg("alpha"), py::arg("n"), py::arg("d_max"));
  m.def(
      "sample_iid_degrees",
      [](double alpha, std::size_t n, std::optional<mb::Degree> cap, mb::Seed seed) {
        return mb::sample_iid_degrees(mb::ReferenceDistribution::power_law(alpha, cap), n, seed);
      },
      py::arg("alpha"), py::arg("n"), py::arg("cap") = py::none(), py::arg("seed") = 1);

  py::class_<mb::SimpleGraph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &mb::SimpleGraph::vertex_count)
      .def_property_readonly("edge_count", &mb::SimpleGraph::edge_count)
      .def("degrees", &mb::SimpleGraph::degrees)
      .def("has_edge", &mb::SimpleGraph::has_edge)
      .def("edges", &mb::SimpleGraph::edges)
      .def("__eq__", [](const mb::SimpleGraph& a, const mb::SimpleGraph& b) { return a == b; })
      .def("save", [](const mb::SimpleGraph& g, const std::filesystem::path& p) { mb::save_graph(g, p); })
      .def_static(
          "load", [](const std::filesystem::path& p, std::optional<std::size_t> n) { return mb::load_graph(p, n); },
          py::arg("path"), py::arg("n") = py::none());

  m.def(
      "generate_graph",
      [](const mb::DegreeSequence& seq, const std::string& model, mb::Seed seed, bool fast) {
        mb::GeneratedGraph gen;
        if (model == "ecm") {
          gen = mb::generate_ecm(seq, seed);
        } else if (model == "chung-lu") {
          gen = mb::generate_chung_lu(seq, seed, fast ? mb::ChungLuMethod::kSkipping : mb::ChungLuMethod::kPairwise);
        } else {
          throw mb::ParameterError("model must be 'ecm' or 'chung-lu'");
        }
        py::dict trace;
        trace["model"] = std::string(mb::to_string(gen.trace.model));
        trace["seed"] = gen.trace.seed;
        trace["target_edges"] = gen.trace.target_edges;
        trace["edges"] = gen.trace.edges;
        trace["self_loops_erased"] = gen.trace.self_loops_erased;
        trace["multi_edges_erased"] = gen.trace.multi_edges_erased;
        trace["clamped_pairs"] = gen.trace.clamped_pairs;
        return py::make_tuple(std::move(gen.graph), trace);
      },
      py::arg("degrees"), py::arg("model") = "ecm", py::arg("seed") = 1, py::arg("fast") = false);

  m.def("enumerate_triangles", &enumerate, py::arg("graph"), py::arg("algorithm") = "minbucket",
        py::arg("tie") = "consistent", py::arg("list_triangles") = false, py::arg("workers") = 1);
  m.def("oracle_triangles", &mb::oracle_triangles, py::arg("graph"));

  m.def("trivial_bound", [](const mb::DegreeSequence& s) { return mb::to_string(mb::trivial_bound(s)); });
  m.def("minbucket_bound", &mb::minbucket_bound);
  m.def(
      "limit_constant",
      [](double alpha, std::optional<mb::Degree> cap, double tol) {
        return series_dict(mb::limit_constant(mb::ReferenceDistribution::power_law(alpha, cap), tol));
      },
      py::arg("alpha"), py::arg("cap") = py::none(), py::arg("tol") = 1e-9);

  m.def("run_experiment", &run_experiment, py::arg("settings") = py::dict(), py::arg("progress") = py::none());
}
