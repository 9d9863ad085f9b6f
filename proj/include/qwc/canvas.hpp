#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwc/core.hpp"

namespace qwc {

struct Letter {
  std::uint32_t generator;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Edge-path group of the canvas: one generator per chord of the spanning
/// forest, one relator per distinguished cycle (tree arrows erased).
struct GroupPresentation {
  std::vector<ArrowId> generators;
  std::vector<Word> relators;
};

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each dividing the next

  bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  std::string describe() const;
};

enum class Verdict { Yes, No, Unknown };

struct SimplyConnectedVerdict {
  Verdict status = Verdict::Unknown;
  std::string evidence;
};

std::string to_string(Verdict v);

inline constexpr std::size_t kDefaultCosetBudget = 1'000'000;

/// |Q0| - |Q1| + |Q2|.
long long euler_characteristic(const QuiverWithCycles& q);

/// Presentation of the fundamental group at `basepoint`. Throws
/// PreconditionError for a disconnected quiver or an unknown basepoint.
GroupPresentation pi1_presentation(const QuiverWithCycles& q, const VertexId& basepoint);
GroupPresentation pi1_presentation(const QuiverWithCycles& q);

/// Invariant factors (nonzero diagonal of the Smith normal form), ascending
/// by divisibility. Throws Error on 64-bit overflow.
std::vector<long long> smith_invariants(std::vector<std::vector<long long>> matrix);

AbelianGroup abelianization(const GroupPresentation& p);
/// First homology of the canvas (connected quiver).
AbelianGroup h1(const QuiverWithCycles& q);

/// Three-tier decision: nontrivial H1 -> No; otherwise coset enumeration of
/// the trivial subgroup with at most `budget` live cosets. Disconnected
/// quivers are decided per component.
SimplyConnectedVerdict is_simply_connected(const QuiverWithCycles& q, std::size_t budget = kDefaultCosetBudget);

}  // namespace qwc
