#include "walklab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "walklab/error.hpp"

namespace walklab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected nonnegative integer for ") + what + ", got '" +
                               std::string(s) + "'");
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  Multigraph::EdgeMap edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (!have_header) {
      if (tokens[0] != "mgraph" || tokens.size() != 2)
        throw ParseError(line_no, "expected header 'mgraph <n>'");
      n = parse_u64(tokens[1], line_no, "n");
      if (n == 0) throw ParseError(line_no, "graph must have at least one vertex");
      have_header = true;
      continue;
    }
    std::uint64_t u = 0, v = 0, mult = 0;
    if (tokens[0] == "e" && tokens.size() == 4) {
      u = parse_u64(tokens[1], line_no, "u");
      v = parse_u64(tokens[2], line_no, "v");
      mult = parse_u64(tokens[3], line_no, "mult");
      if (u == v) throw ParseError(line_no, "edge line with u == v; use 'l <v> <mult>' for loops");
    } else if (tokens[0] == "l" && tokens.size() == 3) {
      u = v = parse_u64(tokens[1], line_no, "v");
      mult = parse_u64(tokens[2], line_no, "mult");
    } else {
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    }
    if (u >= n || v >= n) throw ParseError(line_no, "vertex id >= n=" + std::to_string(n));
    if (mult == 0) throw ParseError(line_no, "multiplicity must be positive");
    auto key = std::make_pair(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
    if (!edges.emplace(key, mult).second) throw ParseError(line_no, "duplicate entry for pair");
  }
  if (!have_header) throw ParseError(line_no, "missing 'mgraph <n>' header");
  return Multigraph(n, std::move(edges));
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "mgraph " << g.size() << '\n';
  for (const auto& [key, mult] : g.edges()) {
    if (key.first == key.second)
      out << "l " << key.first << ' ' << mult << '\n';
    else
      out << "e " << key.first << ' ' << key.second << ' ' << mult << '\n';
  }
  return out.str();
}

Multigraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace walklab
