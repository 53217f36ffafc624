#include "walklab/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "walklab/error.hpp"
#include "walklab/rng.hpp"

namespace walklab {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilies{{
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::multipath, "multipath"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::random_regular, "random_regular"},
    {Family::lollipop, "lollipop"},
    {Family::mangrove, "mangrove"},
}};

std::size_t param(const GeneratorSpec& spec, const std::string& key, std::int64_t min_value) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw PreconditionError("generator " + std::string(family_name(spec.family)) +
                            " requires parameter '" + key + "'");
  }
  if (it->second < min_value) {
    throw PreconditionError("generator parameter " + key + "=" + std::to_string(it->second) +
                            " must be >= " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(it->second);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("bad integer '" + std::string(s) + "' in generator spec");
  return value;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilies)
    if (family == f) return name;
  return "unknown";
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  if (text.starts_with("gen:")) text.remove_prefix(4);
  GeneratorSpec spec;
  auto comma = text.find(',');
  auto name = text.substr(0, comma);
  auto found = std::find_if(kFamilies.begin(), kFamilies.end(),
                            [&](const auto& f) { return f.second == name; });
  if (found == kFamilies.end())
    throw PreconditionError("unknown generator family '" + std::string(name) + "'");
  spec.family = found->first;
  while (comma != std::string_view::npos) {
    text.remove_prefix(comma + 1);
    comma = text.find(',');
    auto item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw PreconditionError("generator parameter '" + std::string(item) + "' lacks '='");
    std::string key(item.substr(0, eq));
    auto value = item.substr(eq + 1);
    if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(parse_int(value));
    } else {
      spec.params[key] = parse_int(value);
    }
  }
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  std::string out = "gen:" + std::string(family_name(spec.family));
  for (const auto& [k, v] : spec.params) out += "," + k + "=" + std::to_string(v);
  if (spec.family == Family::random_regular) out += ",seed=" + std::to_string(spec.seed);
  return out;
}

Multigraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::cycle:
      return cycle(param(spec, "n", 3));
    case Family::path:
      return path(param(spec, "n", 1));
    case Family::multipath:
      return multipath(param(spec, "n", 1), param(spec, "mult", 1));
    case Family::complete:
      return complete(param(spec, "n", 1));
    case Family::complete_bipartite:
      return complete_bipartite(param(spec, "a", 1), param(spec, "b", 1));
    case Family::star:
      return star(param(spec, "n", 1));
    case Family::random_regular:
      return random_regular(param(spec, "n", 1), param(spec, "d", 1), spec.seed);
    case Family::lollipop:
      return lollipop(param(spec, "d", 2), param(spec, "n", 1));
    case Family::mangrove:
      return mangrove(param(spec, "d", 4), param(spec, "n", 2));
  }
  throw PreconditionError("unhandled generator family");
}

Multigraph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return b.build();
}

Multigraph path(std::size_t n) { return multipath(n, 1); }

Multigraph multipath(std::size_t n, Multiplicity mult) {
  if (n < 1 || mult < 1) throw PreconditionError("multipath requires n >= 1 and mult >= 1");
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), mult);
  return b.build();
}

Multigraph complete(std::size_t n) {
  if (n < 1) throw PreconditionError("complete requires n >= 1");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build();
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw PreconditionError("complete_bipartite requires a, b >= 1");
  GraphBuilder g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  return g.build();
}

Multigraph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Multigraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1 || d >= n) throw PreconditionError("random_regular requires 1 <= d < n");
  if ((n * d) % 2 != 0) throw PreconditionError("random_regular requires n*d even");
  Rng rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  for (int round = 0; round < 1000; ++round) {
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng.below(i)]);
    std::set<std::pair<Vertex, Vertex>> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      simple = u != v && seen.insert({u, v}).second;
    }
    if (simple) {
      GraphBuilder b(n);
      for (const auto& [u, v] : seen) b.add_edge(u, v);
      return b.build();
    }
  }
  throw GenerationError("random_regular: no simple pairing within 1000 rounds");
}

Multigraph lollipop(std::size_t d, std::size_t n) {
  if (d < 2 || n < 1) throw PreconditionError("lollipop requires d >= 2 and n >= 1");
  GraphBuilder b(d + 1 + n);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  for (std::size_t i = 1; i <= n; ++i)
    b.add_edge(lollipop_path_vertex(d, i - 1), lollipop_path_vertex(d, i));
  return b.build();
}

MangroveLayout mangrove_layout(std::size_t d, std::size_t n) {
  if (d < 4 || d % 2 != 0) throw PreconditionError("mangrove requires even d >= 4");
  if (n < 2) throw PreconditionError("mangrove requires n >= 2");
  MangroveLayout layout;
  layout.path_length = n;
  std::size_t depth = 0;
  for (std::size_t reach = 1; reach < n; reach *= d - 1) ++depth;
  layout.depth = depth;
  Vertex next = static_cast<Vertex>(n);
  for (auto& tree : layout.levels) {
    tree.assign(depth + 1, {});
    tree[0].push_back(next++);
    for (std::size_t level = 1; level <= depth; ++level) {
      const std::size_t children = level == 1 ? d / 2 : d - 1;
      for (std::size_t p = 0; p < tree[level - 1].size(); ++p)
        for (std::size_t c = 0; c < children; ++c) tree[level].push_back(next++);
    }
  }
  layout.vertex_count = next;
  return layout;
}

Multigraph mangrove(std::size_t d, std::size_t n) {
  const auto layout = mangrove_layout(d, n);
  GraphBuilder b(layout.vertex_count);
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), d / 2);
  const std::array<Vertex, 2> ends{0, static_cast<Vertex>(n - 1)};
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& tree = layout.levels[t];
    b.add_edge(tree[0][0], ends[t], d / 2);
    for (std::size_t level = 1; level <= layout.depth; ++level) {
      const std::size_t children = level == 1 ? d / 2 : d - 1;
      for (std::size_t i = 0; i < tree[level].size(); ++i)
        b.add_edge(tree[level - 1][i / children], tree[level][i]);
    }
  }
  return b.build();
}

}  // namespace walklab
