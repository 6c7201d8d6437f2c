#include "gk/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "gk/base_kernels.hpp"
#include "gk/errors.hpp"
#include "gk/shortest_path_kernel.hpp"
#include "gk/subgraph_kernels.hpp"
#include "gk/walk_kernel.hpp"
#include "gk/weighted_vertex.hpp"

namespace gk {

Regime parse_regime(const std::string& s) {
  if (s == "implicit") return Regime::Implicit;
  if (s == "explicit") return Regime::Explicit;
  if (s == "both") return Regime::Both;
  throw ParameterError("unknown regime '" + s + "' (expected implicit, explicit or both)");
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Implicit: return "implicit";
    case Regime::Explicit: return "explicit";
    case Regime::Both: return "both";
  }
  return "?";
}

const std::vector<std::string>& kernel_names() {
  static const std::vector<std::string> names = {"walk",     "maxwalk",        "sp",         "graphlet",
                                                 "subgraph-matching", "graphinvariant", "graphhopper"};
  return names;
}

std::string kernel_list() {
  std::string s;
  for (const auto& n : kernel_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

bool supports_regime(const std::string& kernel, Regime r) {
  if (kernel == "graphlet") return r == Regime::Explicit;
  if (kernel == "subgraph-matching") return r == Regime::Implicit;
  return std::find(kernel_names().begin(), kernel_names().end(), kernel) != kernel_names().end();
}

namespace {

using Clock = std::chrono::steady_clock;

bool all_attributed(const Dataset& ds) {
  return !ds.graphs.empty() &&
         std::all_of(ds.graphs.begin(), ds.graphs.end(), [](const Graph& g) { return g.has_attributes(); });
}

/// Vertex kernel and matching explicit vertex map for a dataset.
struct VertexChoice {
  VertexKernelSpec kernel;
  VertexFeatureMap map;  // empty when no explicit map exists
  std::string describe;
};

VertexChoice choose_vertex_kernel(const Dataset& ds, const KernelParams& p) {
  if (!all_attributed(ds)) return {VertexKernelSpec::dirac_label(), label_onehot_map(), "dirac-label"};
  const int dim = ds.graphs.front().attribute_dim();
  if (p.delta) {
    auto grid = std::make_shared<const BinningGrid>(sample_binning_grid(dim, *p.delta, p.binning, p.seed));
    auto spec = VertexKernelSpec::hat(*p.delta);
    spec.validate();
    return {spec, binning_map(grid), spec.describe() + ",P=" + std::to_string(p.binning)};
  }
  if (p.sigma) {
    auto spec = VertexKernelSpec::rbf(*p.sigma);
    spec.validate();
    return {spec, {}, spec.describe()};
  }
  return {VertexKernelSpec::dirac_attributes(), attribute_onehot_map(), "dirac-attributes"};
}

std::vector<double> walk_weights(const KernelParams& p) {
  if (p.lambda.empty()) return std::vector<double>(static_cast<std::size_t>(std::max(p.length, 0)) + 1, 1.0);
  return p.lambda;
}

void require_explicit_map(const VertexChoice& vc, const std::string& kernel) {
  if (!vc.map) throw ParameterError("kernel " + kernel + " with " + vc.describe + " has no explicit feature map");
}

}  // namespace

GramMatrix compute_gram(const Dataset& ds, const KernelParams& p, Regime regime, int workers) {
  if (regime == Regime::Both) throw ParameterError("compute_gram needs a single regime");
  const std::string& name = p.name;
  if (std::find(kernel_names().begin(), kernel_names().end(), name) == kernel_names().end())
    throw ParameterError("unknown kernel '" + name + "'; available: " + kernel_list());
  if (!supports_regime(name, regime))
    throw ParameterError("kernel " + name + " does not support the " + to_string(regime) + " regime");
  if (p.length < 0) throw ParameterError("walk length must be >= 0");
  if (p.wl_iters < 0) throw ParameterError("WL iteration count must be >= 0");
  if (p.binning < 1) throw ParameterError("binning iterations must be >= 1");

  const bool imp = regime == Regime::Implicit;
  const auto prep_start = Clock::now();
  VertexChoice vc = choose_vertex_kernel(ds, p);
  const auto& graphs = ds.graphs;
  GramMatrix k;
  std::string desc;

  if (name == "walk" || name == "maxwalk") {
    const int len = p.length;
    auto ke = EdgeKernelSpec::dirac_label();
    if (name == "walk") {
      desc = "walk(length=" + std::to_string(len) + "," + vc.describe + ")";
      if (imp) {
        k = gram_implicit(ds, [&](std::size_t i, std::size_t j) {
              return walk_kernel_implicit(graphs[i], graphs[j], vc.kernel, ke, len);
            }, desc, workers);
      } else {
        if (vc.kernel.uses_attributes()) throw ParameterError("explicit walk features need discrete vertex labels");
        k = gram_explicit(ds, [&](std::size_t i) { return walk_features_explicit(graphs[i], len); }, desc, workers);
      }
    } else {
      auto lambda = walk_weights(p);
      desc = "maxwalk(length=" + std::to_string(len) + "," + vc.describe + ")";
      if (imp) {
        k = gram_implicit(ds, [&](std::size_t i, std::size_t j) {
              return max_walk_kernel_implicit(graphs[i], graphs[j], vc.kernel, ke, len, lambda);
            }, desc, workers);
      } else {
        if (vc.kernel.uses_attributes()) throw ParameterError("explicit walk features need discrete vertex labels");
        k = gram_explicit(ds, [&](std::size_t i) { return max_walk_features_explicit(graphs[i], len, lambda); }, desc,
                          workers);
      }
    }
  } else if (name == "sp") {
    auto klen = EdgeKernelSpec::dirac_label();
    desc = "sp(" + vc.describe + ")";
    if (imp) {
      auto transforms = sp_transform_dataset(ds);
      double prep = std::chrono::duration<double>(Clock::now() - prep_start).count();
      k = gram_implicit(ds, [&](std::size_t i, std::size_t j) {
            return sp_kernel_on_transforms(transforms[i], transforms[j], vc.kernel, klen);
          }, desc, workers);
      k.timing.map_seconds += prep;
      k.timing.total_seconds += prep;
      return k;
    }
    if (vc.kernel.kind == VertexKernelSpec::Kind::DiracLabel) {
      k = gram_explicit(ds, [&](std::size_t i) { return sp_features_explicit(graphs[i]); }, desc, workers);
    } else {
      require_explicit_map(vc, name);
      auto len_map = length_onehot_map();
      k = gram_explicit(ds, [&](std::size_t i) { return sp_features_approx(graphs[i], vc.map, len_map); }, desc,
                        workers);
    }
  } else if (name == "graphlet") {
    desc = "graphlet";
    k = gram_explicit(ds, [&](std::size_t i) { return graphlet_features(graphs[i]); }, desc, workers);
  } else if (name == "subgraph-matching") {
    SubgraphMatchingOptions opt;
    opt.max_size = p.max_size;
    opt.connected_only = p.connected_only;
    desc = "subgraph-matching(max_size=" + std::to_string(p.max_size) +
           (p.connected_only ? ",connected" : "") + "," + vc.describe + ")";
    auto ke = EdgeKernelSpec::dirac_label();
    k = gram_implicit(ds, [&](std::size_t i, std::size_t j) {
          return subgraph_matching_kernel(graphs[i], graphs[j], vc.kernel, ke, opt);
        }, desc, workers);
  } else {
    const bool invariant = name == "graphinvariant";
    WeightFeatureMap weights = invariant ? graph_invariant_weight_maps(ds, p.wl_iters) : graphhopper_weight_maps(ds);
    double prep = std::chrono::duration<double>(Clock::now() - prep_start).count();
    desc = invariant ? "graphinvariant(h=" + std::to_string(p.wl_iters) + "," + vc.describe + ")"
                     : "graphhopper(" + vc.describe + ")";
    if (imp) {
      k = gram_implicit(ds, [&](std::size_t i, std::size_t j) {
            return wv_kernel_implicit(graphs[i], weights.of(i), graphs[j], weights.of(j), vc.kernel);
          }, desc, workers);
    } else {
      require_explicit_map(vc, name);
      k = gram_explicit(ds, [&](std::size_t i) { return wv_features_explicit(graphs[i], weights.of(i), vc.map); }, desc,
                        workers);
    }
    k.timing.map_seconds += prep;
    k.timing.total_seconds += prep;
  }
  return k;
}

Dataset load_source(const DataSource& src) {
  if (!src.tu_root.empty()) return load_tu_dataset(src.tu_root, src.tu_name);
  if (src.generator == "labeled")
    return generate_synthetic_labeled(src.count, src.mean_vertices, src.edge_prob, src.pv, src.seed);
  if (src.generator == "alphabet")
    return generate_synthetic_alphabet(src.count, src.mean_vertices, src.edge_prob, src.alphabet, src.seed);
  if (src.generator == "attributed")
    return generate_synthetic_attributed(src.count, src.mean_vertices, src.edge_prob, src.dim, src.levels, src.seed);
  throw ParameterError("unknown generator '" + src.generator + "' (expected labeled, alphabet or attributed)");
}

void ExperimentConfig::apply_sweep_defaults() {
  if (pv_grid.empty()) pv_grid = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9};
  if (size_grid.empty()) {
    if (full_scale) {
      for (int s = 100; s <= 300; s += 20) size_grid.push_back(s);
    } else {
      size_grid = {50, 100, 150};
    }
  }
  if (length_grid.empty()) length_grid = {1, 2, 3, 4, 5, 6, 7};
  if (alphabet_grid.empty()) alphabet_grid = {1, 2, 5, 10, 20, 30};
}

void ExperimentConfig::validate() const {
  if (reps < 1) throw ParameterError("--reps must be >= 1");
  if (workers < 1) throw ParameterError("worker count must be >= 1");
  if (format != "csv" && format != "svm") throw ParameterError("--format must be csv or svm");
  if (axis != "pv" && axis != "length" && axis != "alphabet")
    throw ParameterError("--axis must be pv, length or alphabet");
  for (double pv : pv_grid)
    if (!(pv >= 0.0 && pv <= 1.0)) throw ParameterError("p_V grid values must lie in [0,1]");
  for (int s : size_grid)
    if (s < 1) throw ParameterError("dataset sizes must be >= 1");
  for (int l : length_grid)
    if (l < 0) throw ParameterError("walk lengths must be >= 0");
  for (int a : alphabet_grid)
    if (a < 1) throw ParameterError("alphabet sizes must be >= 1");
}

namespace {

std::string write_matrix(const ExperimentConfig& c, const GramMatrix& k, Regime r) {
  namespace fs = std::filesystem;
  const std::string base = (fs::path(c.out) / ("gram_" + to_string(r))).string();
  const std::string path = base + "." + c.format;
  export_matrix(c.normalize ? normalize(k) : k, c.format == "svm" ? ExportFormat::Svm : ExportFormat::Csv, path);
  return path;
}

std::string write_timing(const ExperimentConfig& c, const GramMatrix& k, Regime r) {
  namespace fs = std::filesystem;
  const std::string path = (fs::path(c.out) / ("timing_" + to_string(r) + ".json")).string();
  std::ofstream out(path);
  if (!out) throw LoadError("cannot open " + path + " for writing");
  write_timing_json(out, k);
  if (!out) throw LoadError("failed writing " + path);
  return path;
}

}  // namespace

ComputeResult cmd_compute(const ExperimentConfig& config) {
  config.validate();
  Dataset ds = load_source(config.data);
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw LoadError("cannot create output directory " + config.out + ": " + ec.message());

  ComputeResult result;
  std::vector<Regime> regimes;
  if (config.regime == Regime::Both) {
    regimes = {Regime::Implicit, Regime::Explicit};
  } else {
    regimes = {config.regime};
  }
  std::vector<GramMatrix> mats;
  for (Regime r : regimes) {
    mats.push_back(compute_gram(ds, config.kernel, r, config.workers));
    result.files.push_back(write_matrix(config, mats.back(), r));
    result.files.push_back(write_timing(config, mats.back(), r));
  }
  if (mats.size() == 2) {
    const GramMatrix a = config.normalize ? normalize(mats[0]) : mats[0];
    const GramMatrix b = config.normalize ? normalize(mats[1]) : mats[1];
    result.discrepancy = max_abs_difference(a, b);
    const std::string path = (std::filesystem::path(config.out) / "discrepancy.txt").string();
    std::ofstream out(path);
    if (!out) throw LoadError("cannot open " + path + " for writing");
    out << format_number(*result.discrepancy) << '\n';
    result.files.push_back(path);
  }
  return result;
}

double median(std::vector<double> v) {
  if (v.empty()) throw ParameterError("median of an empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

namespace {

double timed_gram(const Dataset& ds, const KernelParams& p, Regime r, int workers) {
  auto start = Clock::now();
  compute_gram(ds, p, r, workers);
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Kernels compared in a sweep: the same kernel in both regimes, except the
/// subgraph pair, which compares subgraph matching with graphlets.
std::pair<KernelParams, KernelParams> sweep_kernels(const KernelParams& base) {
  KernelParams imp = base;
  KernelParams exp = base;
  if (base.name == "graphlet" || base.name == "subgraph-matching") {
    imp.name = "subgraph-matching";
    exp.name = "graphlet";
  }
  return {imp, exp};
}

}  // namespace

std::vector<SweepRow> cmd_phase_transition(const ExperimentConfig& input) {
  ExperimentConfig config = input;
  config.apply_sweep_defaults();
  config.validate();
  const int max_size = *std::max_element(config.size_grid.begin(), config.size_grid.end());

  std::vector<double> values;
  if (config.axis == "pv") {
    values = config.pv_grid;
  } else if (config.axis == "length") {
    values.assign(config.length_grid.begin(), config.length_grid.end());
  } else {
    values.assign(config.alphabet_grid.begin(), config.alphabet_grid.end());
  }

  Dataset shared;
  if (config.axis == "length") {
    DataSource src = config.data;
    src.count = std::max(src.count, max_size);
    shared = load_source(src);
  }

  std::vector<SweepRow> rows;
  for (double value : values) {
    Dataset full;
    auto [imp, exp] = sweep_kernels(config.kernel);
    if (config.axis == "pv") {
      full = generate_synthetic_labeled(max_size, config.data.mean_vertices, config.data.edge_prob, value,
                                        config.data.seed);
    } else if (config.axis == "alphabet") {
      full = generate_synthetic_alphabet(max_size, config.data.mean_vertices, config.data.edge_prob,
                                         static_cast<int>(value), config.data.seed);
    } else {
      full = shared;
      imp.length = exp.length = static_cast<int>(value);
      imp.lambda.clear();
      exp.lambda.clear();
    }
    for (int size : config.size_grid) {
      std::vector<std::size_t> idx(std::min<std::size_t>(static_cast<std::size_t>(size), full.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      Dataset ds = subset(full, idx);
      std::vector<double> ti, te;
      for (int r = 0; r < config.reps; ++r) {
        ti.push_back(timed_gram(ds, imp, Regime::Implicit, config.workers));
        te.push_back(timed_gram(ds, exp, Regime::Explicit, config.workers));
      }
      SweepRow row;
      row.axis = config.axis;
      row.value = value;
      row.size = static_cast<int>(ds.size());
      row.reps = config.reps;
      row.implicit_seconds = median(ti);
      row.explicit_seconds = median(te);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows)
    out << r.axis << ',' << format_number(r.value) << ',' << r.size << ',' << r.reps << ','
        << format_number(r.implicit_seconds) << ',' << format_number(r.explicit_seconds) << ',' << r.winner() << '\n';
}

DatasetStats compute_stats(const Dataset& ds) {
  DatasetStats s;
  s.name = ds.name;
  s.graphs = ds.size();
  s.classes = std::set<int>(ds.class_labels.begin(), ds.class_labels.end()).size();
  if (ds.graphs.empty()) return s;
  double v = 0.0, e = 0.0;
  s.vertex_labels = s.edge_labels = true;
  s.attribute_dim = ds.graphs.front().attribute_dim();
  for (const auto& g : ds.graphs) {
    v += g.num_vertices();
    e += static_cast<double>(g.num_edges());
    s.vertex_labels = s.vertex_labels && g.has_vertex_labels();
    s.edge_labels = s.edge_labels && g.has_edge_labels();
    if (g.attribute_dim() != s.attribute_dim) s.attribute_dim = -1;
  }
  s.avg_vertices = v / static_cast<double>(ds.size());
  s.avg_edges = e / static_cast<double>(ds.size());
  return s;
}

void write_stats(std::ostream& out, const DatasetStats& s) {
  if (s.graphs == 0) {
    out << (s.name.empty() ? "dataset" : s.name) << ": 0 graphs\n";
    return;
  }
  std::ostringstream row;
  row << std::fixed << std::setprecision(1);
  out << "dataset\tgraphs\tclasses\tavg_vertices\tavg_edges\tlabels(v/e)\tattributes\n";
  row << (s.name.empty() ? "dataset" : s.name) << '\t' << s.graphs << '\t' << s.classes << '\t' << s.avg_vertices
      << '\t' << s.avg_edges << '\t' << (s.vertex_labels ? '+' : '-') << '/' << (s.edge_labels ? '+' : '-') << '\t';
  if (s.attribute_dim > 0) {
    row << s.attribute_dim;
  } else if (s.attribute_dim < 0) {
    row << "mixed";
  } else {
    row << '-';
  }
  out << row.str() << '\n';
}

}  // namespace gk
