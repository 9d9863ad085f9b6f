#pragma once

#include <map>
#include <span>
#include <vector>

#include "qwc/core.hpp"

namespace qwc {

/// A set of arrows of a fixed quiver, stored as ascending arrow indices.
/// Ordering is lexicographic on that sorted list.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<ArrowIndex> arrows);

  const std::vector<ArrowIndex>& arrows() const noexcept { return arrows_; }
  bool contains(ArrowIndex a) const;
  std::size_t size() const noexcept { return arrows_.size(); }
  bool empty() const noexcept { return arrows_.empty(); }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut&, const Cut&) = default;

 private:
  std::vector<ArrowIndex> arrows_;
};

Cut cut_from_ids(const Quiver& q, std::span<const ArrowId> ids);
std::vector<ArrowId> cut_ids(const Quiver& q, const Cut& c);

/// Integer degree per arrow (indexed by arrow position).
struct Grading {
  std::vector<int> degree;
};

/// Indicator grading of a set of arrows. Throws PreconditionError if the
/// set refers to arrows outside q.
Grading grading_from_cut(const QuiverWithCycles& q, const Cut& c);
/// Signed sum of step degrees.
long long walk_degree(const Grading& g, const Walk& w);

/// Every distinguished cycle contains exactly one member, counted with
/// multiplicity.
bool is_cut(const QuiverWithCycles& q, const Cut& s);

/// All cuts, built only from arrows that lie on some distinguished cycle,
/// sorted and duplicate free. Parallel over the top levels of the search.
std::vector<Cut> enumerate_cuts(const QuiverWithCycles& q);
/// Single-threaded reference implementation with identical output.
std::vector<Cut> enumerate_cuts_serial(const QuiverWithCycles& q);

/// Arrows lying in no distinguished cycle; empty iff covered.
std::vector<ArrowIndex> uncovered_arrows(const QuiverWithCycles& q);
bool is_covered(const QuiverWithCycles& q);
bool has_enough_cuts(const QuiverWithCycles& q);
bool has_enough_cuts(const QuiverWithCycles& q, std::span<const Cut> cuts);

/// Degrees of the cut grading on the fundamental cycles of the spanning
/// forest. Two cuts are compatible iff these tuples agree.
std::vector<long long> basis_degrees(const QuiverWithCycles& q, const Cut& c);

bool are_compatible(const QuiverWithCycles& q, const Cut& c1, const Cut& c2);
bool is_fully_compatible(const QuiverWithCycles& q);
bool is_fully_compatible(const QuiverWithCycles& q, std::span<const Cut> cuts);

/// Q_C: the same vertices with the cut arrows removed.
Quiver truncated_quiver(const QuiverWithCycles& q, const Cut& c);

/// One relation term: the cycle sign and the rest of the cycle after the cut
/// arrow, as a path from the cut arrow's target back to its source.
struct RelationTerm {
  std::optional<int> sign;
  std::vector<ArrowId> path;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct TruncatedPresentation {
  Quiver truncated_quiver;
  std::map<ArrowId, std::vector<RelationTerm>> relations;
};

TruncatedPresentation truncated_presentation(const QuiverWithCycles& q, const Cut& c);

}  // namespace qwc
