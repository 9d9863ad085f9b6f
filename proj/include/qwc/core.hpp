#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwc/ids.hpp"

namespace qwc {

/// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value did not satisfy the precondition of an operation (unknown id,
/// a set that is not a cut, a vertex that is not a strict source, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Construction of a quiver or quiver with cycles failed; carries every
/// violation found, each naming the offending identifier.
class InvalidQuiver : public Error {
 public:
  explicit InvalidQuiver(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct Arrow {
  ArrowId id;
  VertexId source;
  VertexId target;
  std::optional<std::string> label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A distinguished cycle as written by a user: arrow ids in path order.
struct CycleSpec {
  std::vector<ArrowId> arrows;
  std::optional<int> sign;

  friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};

/// Unchecked raw data, e.g. straight out of a document. `validate` reports
/// what is wrong with it; `QuiverWithCycles::from_description` accepts it.
struct QuiverDescription {
  std::vector<VertexId> vertices;
  std::vector<Arrow> arrows;
  std::vector<CycleSpec> cycles;
};

/// Finite directed multigraph. Vertices and arrows are kept sorted by id;
/// algorithms address them by their position in that order.
class Quiver {
 public:
  Quiver() = default;
  /// Throws InvalidQuiver on duplicate ids or arrows with undeclared ends.
  Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const VertexId& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  VertexIndex source(ArrowIndex a) const { return source_[a]; }
  VertexIndex target(ArrowIndex a) const { return target_[a]; }

  std::optional<VertexIndex> find_vertex(const VertexId& id) const;
  std::optional<ArrowIndex> find_arrow(const ArrowId& id) const;
  /// As find_*, but throws PreconditionError for unknown ids.
  VertexIndex vertex_index(const VertexId& id) const;
  ArrowIndex arrow_index(const ArrowId& id) const;

  /// Arrows leaving / entering a vertex, ascending by arrow index.
  std::span<const ArrowIndex> outgoing(VertexIndex v) const;
  std::span<const ArrowIndex> incoming(VertexIndex v) const;

  /// The quiver on the same vertices with the given arrows removed.
  Quiver without_arrows(std::span<const ArrowIndex> removed) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<VertexIndex> source_;
  std::vector<VertexIndex> target_;
  // CSR adjacency: out_[out_offset_[v] .. out_offset_[v+1]).
  std::vector<std::uint32_t> out_offset_, in_offset_;
  std::vector<ArrowIndex> out_, in_;
};

/// One step of a walk: an arrow traversed forward (+1) or backward (-1).
struct Step {
  ArrowIndex arrow;
  int direction;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Walk {
  std::vector<Step> steps;

  Walk inverse() const;
  friend bool operator==(const Walk&, const Walk&) = default;
};

VertexIndex step_start(const Quiver& q, Step s);
VertexIndex step_end(const Quiver& q, Step s);
/// Consecutive steps chain. Empty walks are valid.
bool is_valid_walk(const Quiver& q, const Walk& w);
/// Valid and the last step ends where the first begins.
bool is_cyclic_walk(const Quiver& q, const Walk& w);
/// Net number of forward minus backward traversals of each arrow.
std::vector<long long> signed_arrow_counts(const Quiver& q, const Walk& w);

/// Directed closed path in canonical (least) rotation.
struct Cycle {
  std::vector<ArrowIndex> arrows;
  std::optional<int> sign;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Least rotation of a closed directed path. Throws PreconditionError when
/// the sequence is empty, does not chain, or does not close up.
Cycle canonicalize_cycle(const Quiver& q, std::span<const ArrowIndex> arrows,
                         std::optional<int> sign = std::nullopt);
Cycle canonicalize_cycle(const Quiver& q, std::span<const ArrowId> arrows,
                         std::optional<int> sign = std::nullopt);

/// A quiver plus its distinguished cycles Q2, canonicalized, deduplicated
/// and sorted.
class QuiverWithCycles {
 public:
  QuiverWithCycles() = default;
  /// Cycles are canonicalized. Repeats of the same cycle with the same sign
  /// collapse to one; a repeat with a different sign is rejected.
  QuiverWithCycles(Quiver quiver, std::vector<Cycle> cycles);

  /// Builds from raw data; throws InvalidQuiver listing every violation
  /// except disconnectedness, which is reported by validate() only.
  static QuiverWithCycles from_description(const QuiverDescription& d);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  /// Indices of the cycles that contain the arrow (each listed once).
  std::span<const std::uint32_t> cycles_through(ArrowIndex a) const;

  QuiverDescription describe() const;

  friend bool operator==(const QuiverWithCycles& a, const QuiverWithCycles& b) {
    return a.quiver_ == b.quiver_ && a.cycles_ == b.cycles_;
  }

 private:
  Quiver quiver_;
  std::vector<Cycle> cycles_;
  std::vector<std::uint32_t> through_offset_;
  std::vector<std::uint32_t> through_;
};

/// Every invariant violation of raw data, plus "not connected".
std::vector<std::string> validate(const QuiverDescription& d);
/// For an already constructed value only connectivity can fail.
std::vector<std::string> validate(const QuiverWithCycles& q);

/// Components of the underlying undirected graph, each sorted, ordered by
/// their smallest vertex.
std::vector<std::vector<VertexIndex>> connected_components(const Quiver& q);
bool is_connected(const Quiver& q);

/// Restriction of q to one set of vertices (arrows and cycles inside it).
QuiverWithCycles induced_subquiver(const QuiverWithCycles& q, std::span<const VertexIndex> vertices);

bool is_acyclic(const Quiver& q);

/// BFS spanning forest of the underlying undirected graph: each component is
/// rooted at its smallest vertex and neighbours are visited by ascending
/// arrow index.
struct SpanningForest {
  std::vector<bool> tree_arrow;  // per arrow
  std::vector<std::optional<ArrowIndex>> parent_arrow;  // per vertex; empty at roots
  std::vector<std::uint32_t> depth;  // per vertex
};

SpanningForest spanning_forest(const Quiver& q);

/// Walk along tree arrows from `from` to `to` (same component).
Walk tree_path(const Quiver& q, const SpanningForest& forest, VertexIndex from, VertexIndex to);

/// One cyclic walk per chord of the spanning forest: the chord followed by
/// the tree path back. Works per component; `cycle_space_basis` additionally
/// insists on a connected quiver.
std::vector<Walk> fundamental_cycles(const Quiver& q);
std::vector<Walk> cycle_space_basis(const Quiver& q);

}  // namespace qwc
