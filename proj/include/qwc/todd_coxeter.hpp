#pragma once

#include <cstddef>
#include <span>

#include "qwc/canvas.hpp"

namespace qwc {

struct CosetEnumeration {
  bool closed = false;        // the table completed within budget
  std::size_t cosets = 0;     // live cosets in the completed table (the group order)
  std::size_t defined = 0;    // total cosets ever defined
};

/// HLT coset enumeration of the trivial subgroup over `generator_count`
/// generators and the given relators, never holding more than `budget` live
/// cosets. A closed result with one coset proves the group trivial.
CosetEnumeration enumerate_cosets(std::size_t generator_count, std::span<const Word> relators, std::size_t budget);

}  // namespace qwc
