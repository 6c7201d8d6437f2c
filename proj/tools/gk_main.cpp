#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "gk/errors.hpp"
#include "gk/experiments.hpp"
#include "gk/graph.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitResource = 4;

int exit_code(gk::ErrorKind kind) {
  switch (kind) {
    case gk::ErrorKind::Parameter: return kExitUsage;
    case gk::ErrorKind::Resource: return kExitResource;
    default: return kExitData;
  }
}

void add_kernel_options(CLI::App* cmd, gk::ExperimentConfig& c, std::string& regime) {
  cmd->add_option("--kernel", c.kernel.name, "Kernel: " + gk::kernel_list());
  cmd->add_option("--regime", regime, "implicit, explicit or both");
  cmd->add_option("--length", c.kernel.length, "Walk length");
  cmd->add_option("--lambda", c.kernel.lambda, "Max-walk weights, one per length 0..l");
  cmd->add_option("--wl-iters", c.kernel.wl_iters, "WL iterations h");
  cmd->add_option("--delta", c.kernel.delta, "Hat-kernel bandwidth and binning pitch for attributes");
  cmd->add_option("--sigma", c.kernel.sigma, "RBF bandwidth for attributes (implicit only)");
  cmd->add_option("--binning", c.kernel.binning, "Binning iterations P for explicit attribute maps");
  cmd->add_option("--max-size", c.kernel.max_size, "Largest clique size for subgraph matching");
  cmd->add_flag("!--all-subgraphs", c.kernel.connected_only, "Also count disconnected subgraphs in subgraph matching");
  cmd->add_option("--workers", c.workers, "Worker threads for pair evaluation");
}

void add_data_options(CLI::App* cmd, gk::DataSource& d) {
  cmd->add_option("--data", d.tu_root, "Directory of a TU dataset (omit to generate)");
  cmd->add_option("--name", d.tu_name, "TU dataset name (file prefix)");
  cmd->add_option("--generator", d.generator, "labeled, alphabet or attributed");
  cmd->add_option("--graphs", d.count, "Number of generated graphs");
  cmd->add_option("--mean-vertices", d.mean_vertices, "Poisson mean of the vertex count");
  cmd->add_option("--edge-prob", d.edge_prob, "Edge probability");
  cmd->add_option("--pv", d.pv, "Label diversity p_V of the labeled generator");
  cmd->add_option("--alphabet", d.alphabet, "Alphabet size of the alphabet generator");
  cmd->add_option("--dim", d.dim, "Attribute dimension of the attributed generator");
  cmd->add_option("--levels", d.levels, "Snap attributes to this many levels (0 = continuous)");
}

/// Dataset name from the single `<name>_A.txt` in `root` when not given.
std::string infer_name(const std::string& root, const std::string& given) {
  if (!given.empty()) return given;
  namespace fs = std::filesystem;
  std::string found;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    const std::string f = entry.path().filename().string();
    const std::string suffix = "_A.txt";
    if (f.size() > suffix.size() && f.compare(f.size() - suffix.size(), suffix.size(), suffix) == 0) {
      if (!found.empty()) throw gk::ParameterError("several datasets in " + root + "; pass --name");
      found = f.substr(0, f.size() - suffix.size());
    }
  }
  if (ec) throw gk::LoadError("cannot read directory " + root + ": " + ec.message());
  return found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph kernels by implicit and explicit feature maps"};
  app.set_config("--config", "", "TOML/INI file with option values; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  gk::ExperimentConfig config;
  std::string regime = "both";
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for generators and binning grids");

  auto* compute = app.add_subcommand("compute", "Compute Gram matrices");
  add_kernel_options(compute, config, regime);
  add_data_options(compute, config.data);
  compute->add_option("--out", config.out, "Output directory");
  compute->add_option("--format", config.format, "csv or svm");
  compute->add_flag("--normalize", config.normalize, "Write the normalized matrix");
  compute->add_option("--seed", seed, "Seed for generators and binning grids");

  auto* sweep = app.add_subcommand("sweep", "Time both regimes over a parameter grid");
  add_kernel_options(sweep, config, regime);
  add_data_options(sweep, config.data);
  sweep->add_option("--out", config.out, "Output CSV file (stdout when omitted or '-')");
  sweep->add_option("--axis", config.axis, "pv, length or alphabet");
  sweep->add_option("--pv-grid", config.pv_grid, "p_V values");
  sweep->add_option("--sizes", config.size_grid, "Dataset sizes");
  sweep->add_option("--lengths", config.length_grid, "Walk lengths");
  sweep->add_option("--alphabets", config.alphabet_grid, "Alphabet sizes");
  sweep->add_option("--reps", config.reps, "Repetitions per cell (median reported)");
  sweep->add_flag("--full-scale", config.full_scale, "Use the full dataset-size grid 100..300");
  sweep->add_option("--seed", seed, "Seed for generators and binning grids");

  std::string stats_root, stats_name;
  auto* stats = app.add_subcommand("stats", "Print dataset statistics");
  stats->add_option("--data", stats_root, "Directory of a TU dataset")->required();
  stats->add_option("--name", stats_name, "TU dataset name (file prefix)");

  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset in TU format");
  add_data_options(generate, config.data);
  generate->add_option("--out", gen_out, "Output directory")->required();
  generate->add_option("--seed", seed, "Seed for generators and binning grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    config.data.seed = seed;
    config.kernel.seed = seed;
    if (*compute) {
      config.regime = gk::parse_regime(regime);
      if (!config.data.tu_root.empty()) config.data.tu_name = infer_name(config.data.tu_root, config.data.tu_name);
      auto result = gk::cmd_compute(config);
      for (const auto& f : result.files) std::cout << "wrote " << f << '\n';
      if (result.discrepancy) std::cout << "max abs discrepancy " << *result.discrepancy << '\n';
    } else if (*sweep) {
      if (sweep->count("--length") == 0 && config.axis != "length") config.kernel.length = 7;
      if (!config.data.tu_root.empty()) config.data.tu_name = infer_name(config.data.tu_root, config.data.tu_name);
      auto rows = gk::cmd_phase_transition(config);
      if (sweep->count("--out") == 0 || config.out == "-") {
        gk::write_sweep_csv(std::cout, rows);
      } else {
        std::ofstream out(config.out);
        if (!out) throw gk::LoadError("cannot open " + config.out + " for writing");
        gk::write_sweep_csv(out, rows);
        std::cout << "wrote " << config.out << '\n';
      }
    } else if (*stats) {
      namespace fs = std::filesystem;
      gk::Dataset ds;
      if (!fs::is_directory(stats_root)) throw gk::LoadError("not a directory: " + stats_root);
      const std::string name = infer_name(stats_root, stats_name);
      if (name.empty()) {
        ds.name = fs::path(stats_root).filename().string();
      } else {
        ds = gk::load_tu_dataset(stats_root, name);
      }
      gk::write_stats(std::cout, gk::compute_stats(ds));
    } else if (*generate) {
      gk::Dataset ds = gk::load_source(config.data);
      gk::write_tu_dataset(ds, gen_out);
      std::cout << "wrote " << ds.size() << " graphs as " << ds.name << " to " << gen_out << '\n';
    }
  } catch (const gk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == gk::ErrorKind::Parameter && e.what() && std::string(e.what()).find("unknown kernel") != std::string::npos)
      std::cerr << "available kernels: " << gk::kernel_list() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
