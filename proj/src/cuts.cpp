#include "qwc/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwc {

Cut::Cut(std::vector<ArrowIndex> arrows) : arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
}

bool Cut::contains(ArrowIndex a) const { return std::binary_search(arrows_.begin(), arrows_.end(), a); }

Cut cut_from_ids(const Quiver& q, std::span<const ArrowId> ids) {
  std::vector<ArrowIndex> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(q.arrow_index(id));
  return Cut(std::move(idx));
}

std::vector<ArrowId> cut_ids(const Quiver& q, const Cut& c) {
  std::vector<ArrowId> ids;
  ids.reserve(c.size());
  for (auto a : c.arrows()) ids.push_back(q.arrow(a).id);
  return ids;
}

namespace {

void require_in_quiver(const QuiverWithCycles& q, const Cut& c) {
  if (!c.empty() && c.arrows().back() >= q.quiver().arrow_count()) {
    throw PreconditionError("arrow set refers to an arrow outside the quiver");
  }
}

void require_cut(const QuiverWithCycles& q, const Cut& c) {
  require_in_quiver(q, c);
  if (!is_cut(q, c)) throw PreconditionError("arrow set is not a cut");
}

// ---------------------------------------------------------------------------
// Exact-one backtracking over bit masks.

using Mask = std::vector<std::uint64_t>;

inline bool test(const Mask& m, std::size_t i) { return (m[i >> 6] >> (i & 63)) & 1U; }
inline void set(Mask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct Search {
  std::size_t arrow_words = 0;
  std::size_t cycle_words = 0;
  std::vector<std::vector<ArrowIndex>> candidates;  // per cycle, ascending, selectable arrows only
  std::vector<Mask> conflict;                       // per arrow: arrows sharing a cycle with it
  std::vector<Mask> touches;                        // per arrow: cycles through it

  struct State {
    Mask forbidden;  // arrows
    Mask satisfied;  // cycles
    std::vector<ArrowIndex> chosen;
  };

  explicit Search(const QuiverWithCycles& q) {
    const auto& quiver = q.quiver();
    const auto& cycles = q.cycles();
    arrow_words = (quiver.arrow_count() + 63) / 64;
    cycle_words = (cycles.size() + 63) / 64;

    // An arrow repeated inside one cycle would give that cycle degree >= 2.
    std::vector<bool> never(quiver.arrow_count(), false);
    for (const auto& c : cycles) {
      auto sorted = c.arrows;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) never[sorted[i]] = true;
      }
    }

    conflict.assign(quiver.arrow_count(), Mask(arrow_words, 0));
    touches.assign(quiver.arrow_count(), Mask(cycle_words, 0));
    candidates.resize(cycles.size());
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      auto arrows = cycles[ci].arrows;
      std::sort(arrows.begin(), arrows.end());
      arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
      for (auto a : arrows) {
        set(touches[a], ci);
        for (auto b : arrows) set(conflict[a], b);
        if (!never[a]) candidates[ci].push_back(a);
      }
    }
  }

  State root() const { return {Mask(arrow_words, 0), Mask(cycle_words, 0), {}}; }

  /// Most constrained unsatisfied cycle, -1 when all are satisfied, -2 when
  /// some unsatisfied cycle has no candidate left.
  long pick(const State& s) const {
    long best = -1;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      if (test(s.satisfied, ci)) continue;
      std::size_t count = 0;
      for (auto a : candidates[ci]) count += !test(s.forbidden, a);
      if (count == 0) return -2;
      if (count < best_count) {
        best_count = count;
        best = static_cast<long>(ci);
      }
    }
    return best;
  }

  State choose(const State& s, ArrowIndex a) const {
    State next = s;
    for (std::size_t w = 0; w < arrow_words; ++w) next.forbidden[w] |= conflict[a][w];
    for (std::size_t w = 0; w < cycle_words; ++w) next.satisfied[w] |= touches[a][w];
    next.chosen.push_back(a);
    return next;
  }

  void run(const State& s, std::vector<Cut>& out) const {
    const long ci = pick(s);
    if (ci == -2) return;
    if (ci == -1) {
      out.emplace_back(s.chosen);
      return;
    }
    for (auto a : candidates[static_cast<std::size_t>(ci)]) {
      if (test(s.forbidden, a)) continue;
      run(choose(s, a), out);
    }
  }

  /// Breadth-first expansion until there are at least `want` open states.
  /// Finished states (complete cuts) go straight to `done`.
  std::vector<State> frontier(std::size_t want, std::vector<Cut>& done) const {
    std::vector<State> level{root()};
    while (!level.empty() && level.size() < want) {
      std::vector<State> next;
      bool expanded = false;
      for (auto& s : level) {
        const long ci = pick(s);
        if (ci == -2) continue;
        if (ci == -1) {
          done.emplace_back(s.chosen);
          continue;
        }
        expanded = true;
        for (auto a : candidates[static_cast<std::size_t>(ci)]) {
          if (!test(s.forbidden, a)) next.push_back(choose(s, a));
        }
      }
      level = std::move(next);
      if (!expanded) break;
    }
    return level;
  }
};

void finish(std::vector<Cut>& cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

}  // namespace

Grading grading_from_cut(const QuiverWithCycles& q, const Cut& c) {
  require_in_quiver(q, c);
  Grading g;
  g.degree.assign(q.quiver().arrow_count(), 0);
  for (auto a : c.arrows()) g.degree[a] = 1;
  return g;
}

long long walk_degree(const Grading& g, const Walk& w) {
  long long total = 0;
  for (const auto& s : w.steps) total += static_cast<long long>(s.direction) * g.degree.at(s.arrow);
  return total;
}

bool is_cut(const QuiverWithCycles& q, const Cut& s) {
  require_in_quiver(q, s);
  for (const auto& c : q.cycles()) {
    std::size_t hits = 0;
    for (auto a : c.arrows) hits += s.contains(a);
    if (hits != 1) return false;
  }
  return true;
}

std::vector<Cut> enumerate_cuts_serial(const QuiverWithCycles& q) {
  Search search(q);
  std::vector<Cut> cuts;
  search.run(search.root(), cuts);
  finish(cuts);
  return cuts;
}

std::vector<Cut> enumerate_cuts(const QuiverWithCycles& q) {
  Search search(q);
  std::vector<Cut> cuts;
#ifdef _OPENMP
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
#else
  const std::size_t threads = 1;
#endif
  if (threads <= 1) {
    search.run(search.root(), cuts);
    finish(cuts);
    return cuts;
  }
  auto tasks = search.frontier(threads * 16, cuts);
  std::vector<std::vector<Cut>> partial(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i) {
    search.run(tasks[static_cast<std::size_t>(i)], partial[static_cast<std::size_t>(i)]);
  }
  for (auto& p : partial) cuts.insert(cuts.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  finish(cuts);
  return cuts;
}

std::vector<ArrowIndex> uncovered_arrows(const QuiverWithCycles& q) {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < q.quiver().arrow_count(); ++a) {
    if (q.cycles_through(a).empty()) out.push_back(a);
  }
  return out;
}

bool is_covered(const QuiverWithCycles& q) { return uncovered_arrows(q).empty(); }

bool has_enough_cuts(const QuiverWithCycles& q, std::span<const Cut> cuts) {
  std::vector<bool> hit(q.quiver().arrow_count(), false);
  for (const auto& c : cuts) {
    for (auto a : c.arrows()) hit.at(a) = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool has_enough_cuts(const QuiverWithCycles& q) { return has_enough_cuts(q, enumerate_cuts(q)); }

std::vector<long long> basis_degrees(const QuiverWithCycles& q, const Cut& c) {
  const auto g = grading_from_cut(q, c);
  std::vector<long long> out;
  for (const auto& w : fundamental_cycles(q.quiver())) out.push_back(walk_degree(g, w));
  return out;
}

bool are_compatible(const QuiverWithCycles& q, const Cut& c1, const Cut& c2) {
  require_cut(q, c1);
  require_cut(q, c2);
  return basis_degrees(q, c1) == basis_degrees(q, c2);
}

bool is_fully_compatible(const QuiverWithCycles& q, std::span<const Cut> cuts) {
  if (cuts.size() <= 1) return true;
  // Degree of a cut on a walk = sum over members of the walk's net arrow count.
  std::vector<std::vector<long long>> counts;
  for (const auto& w : fundamental_cycles(q.quiver())) counts.push_back(signed_arrow_counts(q.quiver(), w));
  auto tuple = [&](const Cut& c) {
    std::vector<long long> t(counts.size(), 0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      for (auto a : c.arrows()) t[i] += counts[i][a];
    }
    return t;
  };
  const auto first = tuple(cuts.front());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (tuple(cuts[i]) != first) return false;
  }
  return true;
}

bool is_fully_compatible(const QuiverWithCycles& q) { return is_fully_compatible(q, enumerate_cuts(q)); }

Quiver truncated_quiver(const QuiverWithCycles& q, const Cut& c) {
  require_cut(q, c);
  return q.quiver().without_arrows(c.arrows());
}

TruncatedPresentation truncated_presentation(const QuiverWithCycles& q, const Cut& c) {
  require_cut(q, c);
  const auto& quiver = q.quiver();
  TruncatedPresentation p{quiver.without_arrows(c.arrows()), {}};
  for (auto alpha : c.arrows()) {
    auto& terms = p.relations[quiver.arrow(alpha).id];
    for (auto ci : q.cycles_through(alpha)) {
      const auto& cycle = q.cycles()[ci];
      const auto n = cycle.arrows.size();
      const auto pos = static_cast<std::size_t>(std::find(cycle.arrows.begin(), cycle.arrows.end(), alpha) -
                                                cycle.arrows.begin());
      RelationTerm term{cycle.sign, {}};
      for (std::size_t k = 1; k < n; ++k) term.path.push_back(quiver.arrow(cycle.arrows[(pos + k) % n]).id);
      terms.push_back(std::move(term));
    }
  }
  return p;
}

}  // namespace qwc
