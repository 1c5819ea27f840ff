#include "hypercount/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

HgFile load_hg(std::istream& in, const std::string& origin) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(tok);
    ids.emplace(tok, id);
    return id;
  };

  std::vector<Edge> edges;
  std::unordered_map<int, int> colors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (toks[0] == "e") {
      if (toks.size() < 3)
        throw input_error(where + ": hyperedge lines need arity >= 2");
      Edge e;
      for (size_t i = 1; i < toks.size(); ++i) e.push_back(intern(toks[i]));
      Edge sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error(where + ": repeated vertex within one hyperedge");
      edges.push_back(std::move(e));
    } else if (toks[0] == "c") {
      if (toks.size() != 3)
        throw input_error(where + ": color lines are 'c <vertex> <integer>'");
      int v = intern(toks[1]);
      try {
        size_t used = 0;
        int col = std::stoi(toks[2], &used);
        if (used != toks[2].size()) throw std::invalid_argument("");
        colors[v] = col;
      } catch (const std::exception&) {
        throw input_error(where + ": color must be an integer, got '" + toks[2] + "'");
      }
    } else {
      throw input_error(where + ": unknown directive '" + toks[0] + "'");
    }
  }

  HgFile file;
  file.hg = Hypergraph(static_cast<int>(labels.size()), std::move(edges));
  file.labels = std::move(labels);
  file.colors = std::move(colors);
  return file;
}

HgFile load_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  return load_hg(in, path);
}

void save_hg(const HgFile& file, std::ostream& out) {
  for (const auto& e : file.hg.edges()) {
    out << 'e';
    for (Vertex v : e) out << ' ' << file.labels[v];
    out << '\n';
  }
  std::vector<std::pair<int, int>> colored(file.colors.begin(), file.colors.end());
  std::sort(colored.begin(), colored.end());
  for (auto [v, col] : colored) out << "c " << file.labels[v] << ' ' << col << '\n';
}

void save_hg_file(const HgFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file '" + path + "' for writing");
  save_hg(file, out);
}

HgFile to_hg_file(const Hypergraph& hg) {
  HgFile file;
  file.hg = hg;
  file.labels.reserve(hg.vertex_count());
  for (int v = 0; v < hg.vertex_count(); ++v) file.labels.push_back("v" + std::to_string(v));
  return file;
}

HgFile to_hg_file(const ColoredHypergraph& chg) {
  HgFile file = to_hg_file(chg.hg);
  for (int v = 0; v < chg.hg.vertex_count(); ++v) file.colors[v] = chg.color[v];
  return file;
}

ColoredHypergraph to_colored(const HgFile& file) {
  ColoredHypergraph chg;
  chg.hg = file.hg;
  chg.color.assign(file.hg.vertex_count(), 0);
  for (int v = 0; v < file.hg.vertex_count(); ++v) {
    auto it = file.colors.find(v);
    if (it == file.colors.end())
      throw input_error("vertex '" + file.labels[v] + "' has no color assigned");
    chg.color[v] = it->second;
  }
  return chg;
}

}  // namespace hypercount
