#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwc/cuts.hpp"

namespace qwc {

/// Morita-relevant part of a vertex algebra: the base field, or an extension
/// whose tensor square splits into `split_count` simple blocks.
struct DivisionLabel {
  enum class Kind { Base, Ext };

  Kind kind = Kind::Base;
  int split_count = 1;

  static DivisionLabel base() { return {Kind::Base, 1}; }
  static DivisionLabel ext(int split_count) { return {Kind::Ext, split_count}; }

  friend bool operator==(const DivisionLabel&, const DivisionLabel&) = default;
};

std::string to_string(DivisionLabel::Kind k);

struct LabeledQuiver {
  Quiver quiver;
  std::vector<DivisionLabel> labels;  // per vertex index
};

enum class DynkinType { A, B, C, D, E, F, G };

/// A Dynkin diagram with an orientation. Vertices are numbered 1..rank as
/// in the standard figures; for D the fork tips are 1 and 2 (joined to 3),
/// for E the branch vertex is `rank`, joined to 3.
struct LabeledDynkinSpec {
  DynkinType type = DynkinType::A;
  int rank = 1;
  std::vector<std::pair<int, int>> orientation;  // directed (from, to) per diagram edge
  int split_count = 2;                           // for the Ext-labelled vertices

  std::string name() const;
};

/// Undirected diagram edges (i < j), sorted.
std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank);
/// Throws PreconditionError if the rank is illegal for the type.
void check_dynkin_rank(DynkinType type, int rank);
/// Linear orientation i -> i+1 for A, B, C, D, F, G (D's fork tips point
/// inward at 3). For E both arms run into vertex 3 and 3 -> rank, as drawn in
/// the catalog figure; this orientation is Nakayama-stable.
LabeledDynkinSpec default_dynkin(DynkinType type, int rank, int split_count = 2);

/// Vertices "1".."rank", arrows "a1".. in edge order, with the catalog's
/// vertex labels. Throws PreconditionError on illegal rank or an orientation
/// that does not direct every edge exactly once.
LabeledQuiver dynkin_quiver(const LabeledDynkinSpec& spec);

/// The Nakayama permutation of the diagram (1-based, index 0 unused).
std::vector<int> nakayama_permutation(DynkinType type, int rank);
/// l when the orientation is stable under the Nakayama permutation and the
/// table value is integral; nullopt otherwise.
std::optional<int> l_homogeneity(const LabeledDynkinSpec& spec);

/// Which standard cut an arrow of a tensor quiver belongs to.
enum class ArrowClass { Vertical, Horizontal, Diagonal };

/// Carried by quivers built with tensor_qwc / morita_split.
struct TensorProvenance {
  std::vector<ArrowClass> arrow_class;                                // per arrow index
  std::vector<std::pair<DivisionLabel, DivisionLabel>> factor_labels;  // per vertex index
  bool split = false;
};

struct LabeledQuiverWithCycles {
  QuiverWithCycles qwc;
  std::vector<std::optional<DivisionLabel>> labels;  // per vertex index
  std::optional<TensorProvenance> tensor;
};

/// Label of a tensor vertex seen as one algebra: Base iff both factors are.
DivisionLabel combine_labels(const DivisionLabel& left, const DivisionLabel& right);

/// Q1 (x) Q2 with its two signed 3-cycles per arrow pair. Vertex ids
/// "(i,j)"; arrows "(i,b)" vertical, "(a,j)" horizontal, "(a*,b*)" diagonal.
LabeledQuiverWithCycles tensor_qwc(const LabeledQuiver& q1, const LabeledQuiver& q2);

/// C1 (vertical), C2 (horizontal), C3 (diagonal). Throws PreconditionError
/// for quivers without tensor provenance.
std::array<Cut, 3> standard_cuts(const LabeledQuiverWithCycles& t);

/// Splits every vertex whose two factor labels are both Ext into
/// split_count copies; arrows between two split vertices keep only their
/// diagonal copies. Throws PreconditionError for non-tensor input, input
/// that is already split, or inconsistent split counts.
LabeledQuiverWithCycles morita_split(const LabeledQuiverWithCycles& t);

}  // namespace qwc
