#pragma once

#include <utility>
#include <vector>

#include "qwc/cuts.hpp"

namespace qwc {

enum class Direction { Plus, Minus };

char direction_symbol(Direction d);

/// Vertices with at least one incident arrow whose incoming arrows all lie
/// in the cut and whose outgoing arrows all lie outside it.
std::vector<VertexIndex> strict_sources(const QuiverWithCycles& q, const Cut& c);
/// Dual: outgoing arrows all in the cut, incoming arrows all outside.
std::vector<VertexIndex> strict_sinks(const QuiverWithCycles& q, const Cut& c);

/// Replace the arrows ending at x by the arrows starting at x.
/// Throws PreconditionError unless x is a strict source of the cut c.
Cut mutate_plus(const QuiverWithCycles& q, const Cut& c, VertexIndex x);
/// Replace the arrows starting at x by the arrows ending at x.
Cut mutate_minus(const QuiverWithCycles& q, const Cut& c, VertexIndex x);
Cut mutate(const QuiverWithCycles& q, const Cut& c, VertexIndex x, Direction d);

struct MutationEdge {
  std::uint32_t from;
  std::uint32_t to;
  VertexIndex vertex;
  Direction direction;

  friend bool operator==(const MutationEdge&, const MutationEdge&) = default;
};

/// Nodes are all cuts (sorted); edges are single mutations, labelled and
/// directed, ordered by (from, direction, vertex).
struct MutationGraph {
  std::vector<Cut> nodes;
  std::vector<MutationEdge> edges;

  /// Each unordered pair {from, to} once, from < to, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> undirected_edges() const;
  /// Connected components as sorted node lists.
  std::vector<std::vector<std::uint32_t>> components() const;
};

MutationGraph mutation_graph(const QuiverWithCycles& q);
MutationGraph mutation_graph(const QuiverWithCycles& q, std::vector<Cut> nodes);
/// Single-threaded reference; identical output.
MutationGraph mutation_graph_serial(const QuiverWithCycles& q, std::vector<Cut> nodes);

/// At most one component (an empty cut set counts as transitive).
bool is_transitive(const QuiverWithCycles& q);
bool is_transitive(const MutationGraph& g);

}  // namespace qwc
