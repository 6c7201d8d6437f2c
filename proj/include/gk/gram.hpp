#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gk/features.hpp"
#include "gk/graph.hpp"

namespace gk {

struct GramTiming {
  double map_seconds = 0.0;   // feature generation, once per graph
  double pair_seconds = 0.0;  // kernel evaluations or dot products
  double total_seconds = 0.0;
  std::size_t maps = 0;
  std::size_t pairs = 0;
  int workers = 1;
};

/// Symmetric kernel matrix, row-major.
struct GramMatrix {
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<int> class_labels;
  std::string kernel;
  GramTiming timing;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

/// Kernel value for graphs i and j of the dataset.
using PairKernel = std::function<double(std::size_t, std::size_t)>;
/// Feature vector of graph i of the dataset.
using GraphFeatureMap = std::function<FeatureVector(std::size_t)>;

/// Upper triangle including the diagonal, mirrored. A failing pair is
/// rethrown with its indices. Values do not depend on `workers`.
GramMatrix gram_implicit(const Dataset& ds, const PairKernel& k, const std::string& kernel, int workers = 1);

/// One feature vector per graph, then all pairwise dots.
GramMatrix gram_explicit(const Dataset& ds, const GraphFeatureMap& phi, const std::string& kernel, int workers = 1);

/// K_ij / sqrt(K_ii K_jj); rows and columns with K_ii <= 0 become 0.
GramMatrix normalize(const GramMatrix& k);

struct EigenEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Smallest eigenvalue by power iteration on s*I - K, where s is the
/// Gershgorin bound on the spectrum. Stops once the eigen-residual is at
/// most `tol`.
EigenEstimate min_eigenvalue_estimate(const GramMatrix& k, double tol = 1e-10, int max_iterations = 1000000);

/// Largest absolute entrywise difference; throws ContractError on size mismatch.
double max_abs_difference(const GramMatrix& a, const GramMatrix& b);

/// Shortest round-trip decimal representation.
std::string format_number(double x);

void write_csv(std::ostream& out, const GramMatrix& k);
/// `<class> 0:<i+1> 1:<K_i1> ... n:<K_in>` per row.
void write_svm(std::ostream& out, const GramMatrix& k);
/// Timing and descriptor as a JSON object.
void write_timing_json(std::ostream& out, const GramMatrix& k);

enum class ExportFormat { Csv, Svm };
/// Throws LoadError naming the path on I/O failure.
void export_matrix(const GramMatrix& k, ExportFormat format, const std::string& path);

/// Parses a CSV written by write_csv. Throws FormatError on malformed input.
GramMatrix read_csv(std::istream& in);
GramMatrix read_csv_file(const std::string& path);

}  // namespace gk
