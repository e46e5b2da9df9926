#include "estar/io.hpp"

#include <fstream>
#include <sstream>

namespace estar {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    if (n < 0) {
      if (!(ls >> n >> m)) {
        std::string probe;
        if (ls >> probe) throw InputError("bad header line: " + line);
        continue;  // blank or comment-only line before the header
      }
      if (n < 0 || m < 0) throw InputError("negative counts in header");
      continue;
    }
    long u, v;
    if (!(ls >> u >> v)) {
      std::string probe;
      std::istringstream again(strip_comment(line));
      if (again >> probe) throw InputError("bad edge line: " + line);
      continue;
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw InputError("missing \"n m\" header");
  if (static_cast<long>(pairs.size()) != m)
    throw InputError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(pairs.size()));
  return build_graph(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << " " << g.m() << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) out << "  " << g.label(v) << ";\n";
  for (auto [u, v] : g.edges) out << "  " << g.label(u) << " -- " << g.label(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace estar
