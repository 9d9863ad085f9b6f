#include "qwc/todd_coxeter.hpp"

#include <cstdint>
#include <vector>

namespace qwc {

namespace {

constexpr std::int32_t kUndefined = -1;

// Coset table with column 2g for generator g and 2g+1 for its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::size_t budget)
      : columns_(2 * generator_count), budget_(budget) {
    add_row();
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::size_t live() const noexcept { return live_; }
  std::size_t rows() const noexcept { return parent_.size(); }
  bool is_live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::int32_t& at(std::int32_t c, std::size_t x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }

  static std::size_t column(const Letter& l) { return 2 * l.generator + (l.exponent < 0 ? 1 : 0); }
  static std::size_t inverse(std::size_t x) { return x ^ 1U; }

  /// New coset d with c.x = d. False once the live budget is reached.
  bool define(std::int32_t c, std::size_t x) {
    if (live_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    const auto d = add_row();
    at(c, x) = d;
    at(d, inverse(x)) = c;
    return true;
  }

  /// Trace the relator from c in both directions, defining cosets to close
  /// the gap. False only when the budget runs out.
  bool scan_and_fill(std::int32_t c, const Word& w) {
    if (w.empty()) return true;
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, column(w[static_cast<std::size_t>(i)])) != kUndefined) {
        f = at(f, column(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inverse(column(w[static_cast<std::size_t>(j)]))) != kUndefined) {
        b = at(b, inverse(column(w[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const auto x = column(w[static_cast<std::size_t>(i)]);
        at(f, x) = b;
        at(b, inverse(x)) = f;
        return true;
      }
      if (!define(f, column(w[static_cast<std::size_t>(i)]))) return false;
    }
  }

  bool fill_row(std::int32_t c) {
    for (std::size_t x = 0; x < columns_ && is_live(c); ++x) {
      if (at(c, x) == kUndefined && !define(c, x)) return false;
    }
    return true;
  }

 private:
  std::int32_t add_row() {
    const auto d = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + columns_, kUndefined);
    ++live_;
    return d;
  }

  std::int32_t rep(std::int32_t k) {
    auto r = k;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(k)] != r) {
      auto next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto e = queue[qi];
      for (std::size_t x = 0; x < columns_; ++x) {
        const auto f = at(e, x);
        if (f == kUndefined) continue;
        at(f, inverse(x)) = kUndefined;
        const auto e1 = rep(e);
        const auto f1 = rep(f);
        if (at(e1, x) != kUndefined) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inverse(x)) != kUndefined) {
          merge(e1, at(f1, inverse(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inverse(x)) = e1;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t budget_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::size_t live_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CosetEnumeration enumerate_cosets(std::size_t generator_count, std::span<const Word> relators, std::size_t budget) {
  CosetEnumeration result;
  if (budget == 0) return result;
  CosetTable table(generator_count, budget);
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < table.rows(); ++c) {
    for (const auto& r : relators) {
      if (!table.is_live(c)) break;
      if (!table.scan_and_fill(c, r)) {
        result.defined = table.rows();
        return result;
      }
    }
    if (table.is_live(c) && !table.fill_row(c)) {
      result.defined = table.rows();
      return result;
    }
  }
  result.closed = true;
  result.cosets = table.live();
  result.defined = table.rows();
  return result;
}

}  // namespace qwc
