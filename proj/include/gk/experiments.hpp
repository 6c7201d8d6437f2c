#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gk/graph.hpp"
#include "gk/gram.hpp"

namespace gk {

enum class Regime { Implicit, Explicit, Both };

Regime parse_regime(const std::string& s);
std::string to_string(Regime r);

struct KernelParams {
  std::string name = "walk";
  int length = 2;
  int wl_iters = 3;
  std::optional<double> delta;  // hat bandwidth / binning pitch for attributes
  std::optional<double> sigma;  // RBF bandwidth for attributes (implicit only)
  int binning = 16;             // binning iterations P for explicit attribute maps
  int max_size = 3;
  bool connected_only = true;
  std::vector<double> lambda;   // Max-walk weights; all ones when empty
  std::uint64_t seed = 1;
};

/// Names accepted by compute_gram.
const std::vector<std::string>& kernel_names();
std::string kernel_list();
bool supports_regime(const std::string& kernel, Regime r);

/// Gram matrix of one kernel in one regime (Implicit or Explicit). Throws
/// ParameterError for unknown kernels or unsupported regimes. Time spent on
/// per-dataset preprocessing is added to the map phase.
GramMatrix compute_gram(const Dataset& ds, const KernelParams& params, Regime regime, int workers = 1);

struct DataSource {
  std::string tu_root;  // directory with the TU file family; empty means generate
  std::string tu_name;
  std::string generator = "labeled";  // labeled | alphabet | attributed
  int count = 50;
  double mean_vertices = 20.0;
  double edge_prob = 0.1;
  double pv = 0.5;
  int alphabet = 3;
  int dim = 2;
  int levels = 0;
  std::uint64_t seed = 1;
};

Dataset load_source(const DataSource& src);

struct ExperimentConfig {
  KernelParams kernel;
  Regime regime = Regime::Both;
  DataSource data;
  std::string out = "out";
  std::string format = "csv";  // csv | svm
  bool normalize = false;
  int reps = 5;
  int workers = 1;
  bool full_scale = false;
  std::string axis = "pv";  // pv | length | alphabet
  std::vector<double> pv_grid;
  std::vector<int> size_grid;
  std::vector<int> length_grid;
  std::vector<int> alphabet_grid;

  /// Fills empty sweep grids with the desk-scale (or full-scale) defaults.
  void apply_sweep_defaults();
  /// Throws ParameterError describing the first invalid field.
  void validate() const;
};

struct ComputeResult {
  std::vector<std::string> files;
  std::optional<double> discrepancy;
};

/// Writes gram_<regime>.<csv|svm> and timing_<regime>.json into config.out,
/// plus discrepancy.txt for Regime::Both.
ComputeResult cmd_compute(const ExperimentConfig& config);

struct SweepRow {
  std::string axis;
  double value = 0.0;
  int size = 0;
  int reps = 0;
  double implicit_seconds = 0.0;
  double explicit_seconds = 0.0;
  std::string winner() const { return explicit_seconds <= implicit_seconds ? "explicit" : "implicit"; }
};

inline constexpr const char* kSweepHeader = "axis,value,size,reps,implicit_median_s,explicit_median_s,winner";

/// Median timings of both regimes per (axis value, dataset size) cell.
/// Smaller sizes use prefixes of one dataset per axis value.
std::vector<SweepRow> cmd_phase_transition(const ExperimentConfig& config);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct DatasetStats {
  std::string name;
  std::size_t graphs = 0;
  std::size_t classes = 0;
  double avg_vertices = 0.0;
  double avg_edges = 0.0;
  bool vertex_labels = false;
  bool edge_labels = false;
  int attribute_dim = 0;
};

DatasetStats compute_stats(const Dataset& ds);
void write_stats(std::ostream& out, const DatasetStats& s);

double median(std::vector<double> v);

}  // namespace gk
