#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gk/errors.hpp"
#include "gk/graph.hpp"

namespace gk {
namespace {

namespace fs = std::filesystem;

struct TextFile {
  std::string path;
  std::vector<std::string> lines;  // blank lines removed, line_numbers kept in parallel
  std::vector<std::size_t> line_numbers;
};

std::optional<TextFile> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  TextFile f;
  f.path = path.string();
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    f.lines.push_back(std::move(line));
    f.line_numbers.push_back(no);
  }
  return f;
}

TextFile require(const fs::path& root, const std::string& file) {
  auto f = read_lines(root / file);
  if (!f) throw LoadError("missing mandatory file " + (root / file).string());
  return *f;
}

std::string where(const TextFile& f, std::size_t idx) {
  return f.path + ":" + std::to_string(f.line_numbers[idx]);
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::vector<T> parse_row(const TextFile& f, std::size_t idx) {
  std::vector<T> out;
  std::string_view rest = f.lines[idx];
  while (true) {
    auto comma = rest.find(',');
    std::string_view tok = trim(rest.substr(0, comma));
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw FormatError(where(f, idx) + ": cannot parse '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

long long parse_single(const TextFile& f, std::size_t idx) {
  auto row = parse_row<long long>(f, idx);
  if (row.size() != 1) throw FormatError(where(f, idx) + ": expected a single integer");
  return row[0];
}

void write_real(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

Dataset load_tu_dataset(const std::string& root_path, const std::string& name) {
  const fs::path root(root_path);
  TextFile adjacency = require(root, name + "_A.txt");
  TextFile indicator = require(root, name + "_graph_indicator.txt");
  TextFile graph_labels = require(root, name + "_graph_labels.txt");
  auto node_labels = read_lines(root / (name + "_node_labels.txt"));
  auto edge_labels = read_lines(root / (name + "_edge_labels.txt"));
  auto node_attrs = read_lines(root / (name + "_node_attributes.txt"));

  const std::size_t num_graphs = graph_labels.lines.size();
  const std::size_t num_nodes = indicator.lines.size();

  Dataset ds;
  ds.name = name;
  ds.class_labels.reserve(num_graphs);
  for (std::size_t i = 0; i < num_graphs; ++i) ds.class_labels.push_back(static_cast<int>(parse_single(graph_labels, i)));

  // Global node id (0-based) -> owning graph and local index.
  std::vector<std::size_t> owner(num_nodes);
  std::vector<int> local(num_nodes);
  std::vector<int> graph_size(num_graphs, 0);
  for (std::size_t k = 0; k < num_nodes; ++k) {
    long long g = parse_single(indicator, k);
    if (g < 1 || static_cast<std::size_t>(g) > num_graphs)
      throw FormatError(where(indicator, k) + ": graph id " + std::to_string(g) + " outside [1," +
                        std::to_string(num_graphs) + "]");
    owner[k] = static_cast<std::size_t>(g - 1);
    local[k] = graph_size[owner[k]]++;
  }

  if (node_labels && node_labels->lines.size() != num_nodes)
    throw FormatError(node_labels->path + ": " + std::to_string(node_labels->lines.size()) +
                      " labels for " + std::to_string(num_nodes) + " vertices");
  if (edge_labels && edge_labels->lines.size() != adjacency.lines.size())
    throw FormatError(edge_labels->path + ": " + std::to_string(edge_labels->lines.size()) +
                      " labels for " + std::to_string(adjacency.lines.size()) + " edge lines");
  if (node_attrs && node_attrs->lines.size() != num_nodes)
    throw FormatError(node_attrs->path + ": " + std::to_string(node_attrs->lines.size()) +
                      " rows for " + std::to_string(num_nodes) + " vertices");

  // Directed listings per graph: (local u, local v) -> (label, line index).
  std::vector<std::map<std::pair<int, int>, std::pair<int, std::size_t>>> arcs(num_graphs);
  for (std::size_t i = 0; i < adjacency.lines.size(); ++i) {
    auto row = parse_row<long long>(adjacency, i);
    if (row.size() != 2) throw FormatError(where(adjacency, i) + ": expected 'u, v'");
    for (long long id : row)
      if (id < 1 || static_cast<std::size_t>(id) > num_nodes)
        throw FormatError(where(adjacency, i) + ": vertex " + std::to_string(id) + " outside [1," +
                          std::to_string(num_nodes) + "]");
    std::size_t a = static_cast<std::size_t>(row[0] - 1), b = static_cast<std::size_t>(row[1] - 1);
    if (owner[a] != owner[b])
      throw FormatError(where(adjacency, i) + ": vertex " + std::to_string(row[1]) +
                        " lies outside the vertex range of graph " + std::to_string(owner[a] + 1));
    if (a == b) continue;  // self-loops are dropped
    int label = edge_labels ? static_cast<int>(parse_single(*edge_labels, i)) : 0;
    auto [it, inserted] = arcs[owner[a]].emplace(std::pair{local[a], local[b]}, std::pair{label, i});
    if (!inserted && it->second.first != label)
      throw FormatError(where(adjacency, i) + ": duplicate edge listing with a different label");
  }

  const bool has_attrs = node_attrs.has_value();
  int attr_dim = 0;
  std::vector<std::vector<double>> attr_rows;
  if (has_attrs) {
    attr_rows.reserve(num_nodes);
    for (std::size_t k = 0; k < num_nodes; ++k) {
      attr_rows.push_back(parse_row<double>(*node_attrs, k));
      if (k == 0) attr_dim = static_cast<int>(attr_rows[0].size());
      if (static_cast<int>(attr_rows[k].size()) != attr_dim)
        throw FormatError(where(*node_attrs, k) + ": expected " + std::to_string(attr_dim) + " values");
    }
  }

  std::vector<std::vector<int>> labels(num_graphs);
  std::vector<AttributeMatrix> attrs(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    labels[g].resize(graph_size[g]);
    attrs[g].dim = attr_dim;
    attrs[g].values.resize(static_cast<std::size_t>(graph_size[g]) * attr_dim);
  }
  for (std::size_t k = 0; k < num_nodes; ++k) {
    if (node_labels) labels[owner[k]][local[k]] = static_cast<int>(parse_single(*node_labels, k));
    if (has_attrs)
      std::copy(attr_rows[k].begin(), attr_rows[k].end(),
                attrs[owner[k]].values.begin() + static_cast<std::ptrdiff_t>(local[k]) * attr_dim);
  }

  ds.graphs.reserve(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    std::vector<Edge> edges;
    for (const auto& [uv, info] : arcs[g]) {
      auto [u, v] = uv;
      auto back = arcs[g].find({v, u});
      if (back == arcs[g].end())
        throw FormatError(where(adjacency, info.second) + ": edge listed in one direction only");
      if (back->second.first != info.first)
        throw FormatError(where(adjacency, info.second) + ": edge labels differ between directions");
      if (u < v) edges.push_back({u, v, info.first});
    }
    std::optional<std::vector<int>> vl;
    if (node_labels) vl = std::move(labels[g]);
    std::optional<AttributeMatrix> am;
    if (has_attrs && attr_dim > 0) am = std::move(attrs[g]);
    ds.graphs.emplace_back(graph_size[g], std::move(edges), std::move(vl), edge_labels.has_value(), std::move(am));
  }
  ds.label_alphabet_size = count_vertex_alphabet(ds.graphs);
  return ds;
}

void write_tu_dataset(const Dataset& ds, const std::string& root_path) {
  const fs::path root(root_path);
  std::error_code ec;
  fs::create_directories(root, ec);
  auto open = [&](const std::string& suffix) {
    std::ofstream out(root / (ds.name + suffix));
    if (!out) throw LoadError("cannot write " + (root / (ds.name + suffix)).string());
    return out;
  };
  const bool vlabels = !ds.graphs.empty() &&
                       std::all_of(ds.graphs.begin(), ds.graphs.end(), [](const Graph& g) { return g.has_vertex_labels(); });
  const bool elabels = !ds.graphs.empty() &&
                       std::all_of(ds.graphs.begin(), ds.graphs.end(), [](const Graph& g) { return g.has_edge_labels(); });
  const bool attrs = !ds.graphs.empty() &&
                     std::all_of(ds.graphs.begin(), ds.graphs.end(), [](const Graph& g) { return g.has_attributes(); });

  auto a_out = open("_A.txt");
  auto ind_out = open("_graph_indicator.txt");
  auto gl_out = open("_graph_labels.txt");
  std::ofstream nl_out, el_out, na_out;
  if (vlabels) nl_out = open("_node_labels.txt");
  if (elabels) el_out = open("_edge_labels.txt");
  if (attrs) na_out = open("_node_attributes.txt");

  std::size_t base = 1;
  for (std::size_t gi = 0; gi < ds.graphs.size(); ++gi) {
    const Graph& g = ds.graphs[gi];
    gl_out << ds.class_labels.at(gi) << '\n';
    for (int v = 0; v < g.num_vertices(); ++v) {
      ind_out << gi + 1 << '\n';
      if (vlabels) nl_out << g.vertex_label(v) << '\n';
      if (attrs) {
        auto row = g.attributes(v);
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) na_out << ", ";
          write_real(na_out, row[j]);
        }
        na_out << '\n';
      }
      auto nbrs = g.neighbors(v);
      auto labs = g.incident_edge_labels(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        a_out << base + v << ", " << base + nbrs[i] << '\n';
        if (elabels) el_out << labs[i] << '\n';
      }
    }
    base += static_cast<std::size_t>(g.num_vertices());
  }
}

}  // namespace gk
