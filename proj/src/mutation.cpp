#include "qwc/mutation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qwc {

char direction_symbol(Direction d) { return d == Direction::Plus ? '+' : '-'; }

namespace {

void require_cut(const QuiverWithCycles& q, const Cut& c) {
  if (!is_cut(q, c)) throw PreconditionError("arrow set is not a cut");
}

// Membership flags for the cut; `flags` is reused across calls.
void fill_membership(const Quiver& q, const Cut& c, std::vector<char>& flags) {
  flags.assign(q.arrow_count(), 0);
  for (auto a : c.arrows()) flags[a] = 1;
}

bool is_source_in(const Quiver& q, const std::vector<char>& member, VertexIndex v) {
  if (q.incoming(v).empty() && q.outgoing(v).empty()) return false;
  for (auto a : q.incoming(v)) {
    if (!member[a]) return false;
  }
  for (auto a : q.outgoing(v)) {
    if (member[a]) return false;
  }
  return true;
}

bool is_sink_in(const Quiver& q, const std::vector<char>& member, VertexIndex v) {
  if (q.incoming(v).empty() && q.outgoing(v).empty()) return false;
  for (auto a : q.outgoing(v)) {
    if (!member[a]) return false;
  }
  for (auto a : q.incoming(v)) {
    if (member[a]) return false;
  }
  return true;
}

Cut swap_sides(const Cut& c, std::span<const ArrowIndex> remove, std::span<const ArrowIndex> add) {
  std::vector<ArrowIndex> out;
  out.reserve(c.size() + add.size());
  for (auto a : c.arrows()) {
    if (std::find(remove.begin(), remove.end(), a) == remove.end()) out.push_back(a);
  }
  out.insert(out.end(), add.begin(), add.end());
  return Cut(std::move(out));
}

std::optional<std::uint32_t> node_of(const std::vector<Cut>& nodes, const Cut& c) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
  if (it == nodes.end() || *it != c) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes.begin());
}

// Edges leaving one node, in (direction, vertex) order. A mutation that
// leaves the node set (it picks up an arrow lying in no cycle when the
// quiver is not covered) contributes no edge.
void node_edges(const QuiverWithCycles& q, const std::vector<Cut>& nodes, std::uint32_t i, std::vector<char>& member,
                std::vector<MutationEdge>& out) {
  const auto& quiver = q.quiver();
  const auto& cut = nodes[i];
  fill_membership(quiver, cut, member);
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    if (!is_source_in(quiver, member, v)) continue;
    if (auto j = node_of(nodes, swap_sides(cut, quiver.incoming(v), quiver.outgoing(v)))) {
      out.push_back({i, *j, v, Direction::Plus});
    }
  }
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    if (!is_sink_in(quiver, member, v)) continue;
    if (auto j = node_of(nodes, swap_sides(cut, quiver.outgoing(v), quiver.incoming(v)))) {
      out.push_back({i, *j, v, Direction::Minus});
    }
  }
}

void prepare(std::vector<Cut>& nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

}  // namespace

std::vector<VertexIndex> strict_sources(const QuiverWithCycles& q, const Cut& c) {
  require_cut(q, c);
  std::vector<char> member;
  fill_membership(q.quiver(), c, member);
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < q.quiver().vertex_count(); ++v) {
    if (is_source_in(q.quiver(), member, v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> strict_sinks(const QuiverWithCycles& q, const Cut& c) {
  require_cut(q, c);
  std::vector<char> member;
  fill_membership(q.quiver(), c, member);
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < q.quiver().vertex_count(); ++v) {
    if (is_sink_in(q.quiver(), member, v)) out.push_back(v);
  }
  return out;
}

Cut mutate_plus(const QuiverWithCycles& q, const Cut& c, VertexIndex x) {
  require_cut(q, c);
  const auto& quiver = q.quiver();
  if (x >= quiver.vertex_count()) throw PreconditionError("unknown vertex index");
  std::vector<char> member;
  fill_membership(quiver, c, member);
  if (!is_source_in(quiver, member, x)) {
    throw PreconditionError("vertex " + quiver.vertex(x).str() + " is not a strict source of the cut");
  }
  return swap_sides(c, quiver.incoming(x), quiver.outgoing(x));
}

Cut mutate_minus(const QuiverWithCycles& q, const Cut& c, VertexIndex x) {
  require_cut(q, c);
  const auto& quiver = q.quiver();
  if (x >= quiver.vertex_count()) throw PreconditionError("unknown vertex index");
  std::vector<char> member;
  fill_membership(quiver, c, member);
  if (!is_sink_in(quiver, member, x)) {
    throw PreconditionError("vertex " + quiver.vertex(x).str() + " is not a strict sink of the cut");
  }
  return swap_sides(c, quiver.outgoing(x), quiver.incoming(x));
}

Cut mutate(const QuiverWithCycles& q, const Cut& c, VertexIndex x, Direction d) {
  return d == Direction::Plus ? mutate_plus(q, c, x) : mutate_minus(q, c, x);
}

MutationGraph mutation_graph_serial(const QuiverWithCycles& q, std::vector<Cut> nodes) {
  prepare(nodes);
  MutationGraph g;
  std::vector<char> member;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) node_edges(q, nodes, i, member, g.edges);
  g.nodes = std::move(nodes);
  return g;
}

MutationGraph mutation_graph(const QuiverWithCycles& q, std::vector<Cut> nodes) {
  prepare(nodes);
  const auto n = static_cast<std::ptrdiff_t>(nodes.size());
  std::vector<std::vector<MutationEdge>> per_node(nodes.size());
#pragma omp parallel
  {
    std::vector<char> member;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      node_edges(q, nodes, static_cast<std::uint32_t>(i), member, per_node[static_cast<std::size_t>(i)]);
    }
  }
  MutationGraph g;
  std::size_t total = 0;
  for (const auto& e : per_node) total += e.size();
  g.edges.reserve(total);
  for (auto& e : per_node) g.edges.insert(g.edges.end(), e.begin(), e.end());
  g.nodes = std::move(nodes);
  return g;
}

MutationGraph mutation_graph(const QuiverWithCycles& q) { return mutation_graph(q, enumerate_cuts(q)); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> MutationGraph::undirected_edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> MutationGraph::components() const {
  std::vector<std::uint32_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    auto a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::uint32_t>> groups(nodes.size());
  for (std::uint32_t i = 0; i < nodes.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.push_back(std::move(grp));
  }
  return out;
}

bool is_transitive(const MutationGraph& g) { return g.components().size() <= 1; }

bool is_transitive(const QuiverWithCycles& q) { return is_transitive(mutation_graph(q)); }

}  // namespace qwc
