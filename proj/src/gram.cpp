#include "gk/gram.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gk/errors.hpp"
#include "gk/rng.hpp"

namespace gk {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs body(i) for i in [0, count) on `workers` threads with a strided
/// split. The first failure is rethrown after all threads finish.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  if (workers < 1) throw ParameterError("worker count must be >= 1");
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> threads;
  const auto w = static_cast<std::size_t>(workers);
  for (std::size_t t = 0; t < w; ++t)
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += w) {
          {
            std::lock_guard lock(mu);
            if (failure) return;
          }
          body(i);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

GramMatrix empty_like(const Dataset& ds, const std::string& kernel, int workers) {
  GramMatrix k;
  k.n = ds.size();
  k.values.assign(k.n * k.n, 0.0);
  k.class_labels = ds.class_labels;
  k.kernel = kernel;
  k.timing.workers = workers;
  return k;
}

}  // namespace

GramMatrix gram_implicit(const Dataset& ds, const PairKernel& kfun, const std::string& kernel, int workers) {
  auto start = Clock::now();
  GramMatrix k = empty_like(ds, kernel, workers);
  parallel_for(k.n, workers, [&](std::size_t i) {
    for (std::size_t j = i; j < k.n; ++j) {
      double v;
      try {
        v = kfun(i, j);
      } catch (const Error& e) {
        rethrow_with_context(e, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      k(i, j) = v;
      k(j, i) = v;
    }
  });
  k.timing.pair_seconds = seconds_since(start);
  k.timing.total_seconds = k.timing.pair_seconds;
  k.timing.pairs = k.n * (k.n + 1) / 2;
  return k;
}

GramMatrix gram_explicit(const Dataset& ds, const GraphFeatureMap& phi, const std::string& kernel, int workers) {
  auto start = Clock::now();
  GramMatrix k = empty_like(ds, kernel, workers);
  std::vector<FeatureVector> features(k.n);
  parallel_for(k.n, workers, [&](std::size_t i) {
    try {
      features[i] = phi(i);
    } catch (const Error& e) {
      rethrow_with_context(e, "graph " + std::to_string(i));
    }
  });
  k.timing.map_seconds = seconds_since(start);
  auto pair_start = Clock::now();
  parallel_for(k.n, workers, [&](std::size_t i) {
    for (std::size_t j = i; j < k.n; ++j) {
      double v = dot(features[i], features[j]);
      k(i, j) = v;
      k(j, i) = v;
    }
  });
  k.timing.pair_seconds = seconds_since(pair_start);
  k.timing.total_seconds = seconds_since(start);
  k.timing.maps = k.n;
  k.timing.pairs = k.n * (k.n + 1) / 2;
  return k;
}

GramMatrix normalize(const GramMatrix& k) {
  GramMatrix out = k;
  std::vector<double> root(k.n);
  for (std::size_t i = 0; i < k.n; ++i) root[i] = k(i, i) > 0.0 ? std::sqrt(k(i, i)) : 0.0;
  for (std::size_t i = 0; i < k.n; ++i)
    for (std::size_t j = 0; j < k.n; ++j)
      out(i, j) = root[i] > 0.0 && root[j] > 0.0 ? k(i, j) / (root[i] * root[j]) : 0.0;
  return out;
}

EigenEstimate min_eigenvalue_estimate(const GramMatrix& k, double tol, int max_iterations) {
  if (k.n == 0) throw ParameterError("eigenvalue estimate needs a non-empty matrix");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  const std::size_t n = k.n;
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(k(i, j));
    shift = std::max(shift, row);
  }
  EigenEstimate est;
  if (shift == 0.0) {
    est.converged = true;
    return est;
  }
  // B = shift*I - K is positive semidefinite; its top eigenvalue is shift - lambda_min.
  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = shift * x[i];
      for (std::size_t j = 0; j < n; ++j) acc -= k(i, j) * x[j];
      y[i] = acc;
    }
  };
  auto norm = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  Rng rng(0x5eed5eedULL);
  std::vector<double> x(n), y(n);
  for (double& xi : x) xi = rng.uniform01() - 0.5;
  double nx = norm(x);
  for (double& xi : x) xi /= nx;
  double mu = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    apply(x, y);
    mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += x[i] * y[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (y[i] - mu * x[i]) * (y[i] - mu * x[i]);
    est.iterations = it;
    est.value = shift - mu;
    if (std::sqrt(res) <= tol) {
      est.converged = true;
      return est;
    }
    double ny = norm(y);
    if (ny == 0.0) {  // x lies in the kernel of B, so every eigenvalue equals shift
      est.value = shift;
      est.converged = true;
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  return est;
}

double max_abs_difference(const GramMatrix& a, const GramMatrix& b) {
  if (a.n != b.n) throw ContractError("matrix sizes differ: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const GramMatrix& k) {
  for (std::size_t i = 0; i < k.n; ++i) {
    for (std::size_t j = 0; j < k.n; ++j) {
      if (j) out << ',';
      out << format_number(k(i, j));
    }
    out << '\n';
  }
}

void write_svm(std::ostream& out, const GramMatrix& k) {
  for (std::size_t i = 0; i < k.n; ++i) {
    out << (i < k.class_labels.size() ? k.class_labels[i] : 0) << " 0:" << i + 1;
    for (std::size_t j = 0; j < k.n; ++j) out << ' ' << j + 1 << ':' << format_number(k(i, j));
    out << '\n';
  }
}

void write_timing_json(std::ostream& out, const GramMatrix& k) {
  nlohmann::ordered_json j;
  j["kernel"] = k.kernel;
  j["graphs"] = k.n;
  j["workers"] = k.timing.workers;
  j["map_seconds"] = k.timing.map_seconds;
  j["pair_seconds"] = k.timing.pair_seconds;
  j["total_seconds"] = k.timing.total_seconds;
  j["feature_maps"] = k.timing.maps;
  j["pair_evaluations"] = k.timing.pairs;
  out << j.dump(2) << '\n';
}

void export_matrix(const GramMatrix& k, ExportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot open " + path + " for writing");
  if (format == ExportFormat::Csv) {
    write_csv(out, k);
  } else {
    write_svm(out, k);
  }
  out.flush();
  if (!out) throw LoadError("failed writing " + path);
}

GramMatrix read_csv(std::istream& in) {
  GramMatrix k;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++row;
    std::size_t count = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      double v;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) throw FormatError("line " + std::to_string(row) + ": malformed number");
      k.values.push_back(v);
      ++count;
      p = next;
      if (p == end) break;
      if (*p != ',') throw FormatError("line " + std::to_string(row) + ": expected ','");
      ++p;
    }
    if (k.n == 0) k.n = count;
    if (count != k.n) throw FormatError("line " + std::to_string(row) + ": ragged row");
  }
  if (row != k.n) throw FormatError("matrix is not square: " + std::to_string(row) + " rows");
  return k;
}

GramMatrix read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  try {
    return read_csv(in);
  } catch (const Error& e) {
    rethrow_with_context(e, path);
  }
}

}  // namespace gk
