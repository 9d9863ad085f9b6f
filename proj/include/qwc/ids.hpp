#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace qwc {

/// Orders strings so that embedded digit runs compare numerically
/// ("a2" < "a10"). Ties fall back to plain byte order, so the result is a
/// strict total order consistent with string equality.
std::strong_ordering natural_compare(std::string_view lhs, std::string_view rhs);

namespace detail {

template <typename Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend std::strong_ordering operator<=>(const Identifier& a, const Identifier& b) {
    return natural_compare(a.value_, b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Identifier& id) { return os << id.value_; }

 private:
  std::string value_;
};

}  // namespace detail

struct VertexTag;
struct ArrowTag;

using VertexId = detail::Identifier<VertexTag>;
using ArrowId = detail::Identifier<ArrowTag>;

/// Position of a vertex in the sorted vertex list of its quiver.
using VertexIndex = std::uint32_t;
/// Position of an arrow in the sorted arrow list of its quiver.
using ArrowIndex = std::uint32_t;

}  // namespace qwc

template <typename Tag>
struct std::hash<qwc::detail::Identifier<Tag>> {
  std::size_t operator()(const qwc::detail::Identifier<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
