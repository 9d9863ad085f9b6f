#pragma once

// Shared helpers for the test binaries: fixture loading, brute-force
// oracles, random instance generators and a labelled isomorphism check.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qwc/canvas.hpp"
#include "qwc/io.hpp"

#ifndef QWC_FIXTURE_DIR
#define QWC_FIXTURE_DIR "tests/fixtures"
#endif

namespace qwc::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(QWC_FIXTURE_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline LabeledQuiverWithCycles fixture(const std::string& name) { return parse_quiver(read_fixture(name)); }

inline Cut cut_of(const Quiver& q, std::initializer_list<const char*> ids) {
  std::vector<ArrowId> v;
  for (auto id : ids) v.emplace_back(id);
  return cut_from_ids(q, v);
}

inline VertexIndex vx(const Quiver& q, const char* id) { return q.vertex_index(VertexId(id)); }

// Every subset of the arrows that lie on some cycle, filtered by the
// exact-one condition counted with multiplicity.
inline std::vector<Cut> brute_force_cuts(const QuiverWithCycles& q) {
  std::vector<ArrowIndex> cyclic;
  for (ArrowIndex a = 0; a < q.quiver().arrow_count(); ++a) {
    if (!q.cycles_through(a).empty()) cyclic.push_back(a);
  }
  if (cyclic.size() > 24) throw std::runtime_error("brute force too large");
  std::vector<Cut> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cyclic.size()); ++mask) {
    std::vector<bool> in(q.quiver().arrow_count(), false);
    std::vector<ArrowIndex> chosen;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      if (mask >> i & 1) {
        in[cyclic[i]] = true;
        chosen.push_back(cyclic[i]);
      }
    }
    bool ok = true;
    for (const auto& c : q.cycles()) {
      int hits = 0;
      for (auto a : c.arrows) hits += in[a];
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(chosen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Plain DFS cycle detection, independent of the library's Kahn ordering.
inline bool dfs_acyclic(const Quiver& q) {
  std::vector<int> state(q.vertex_count(), 0);
  std::function<bool(VertexIndex)> visit = [&](VertexIndex v) {
    state[v] = 1;
    for (auto a : q.outgoing(v)) {
      const auto w = q.target(a);
      if (state[w] == 1) return false;
      if (state[w] == 0 && !visit(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (state[v] == 0 && !visit(v)) return false;
  }
  return true;
}

// Random tree on n vertices "1".."n" with random orientation and random
// Base/Ext labels.
inline LabeledQuiver random_tree(std::mt19937& rng, int n, int split_count = 2) {
  std::vector<VertexId> vertices;
  for (int i = 1; i <= n; ++i) vertices.emplace_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (int i = 2; i <= n; ++i) {
    const int parent = std::uniform_int_distribution<int>(1, i - 1)(rng);
    const bool down = rng() & 1;
    const auto a = VertexId(std::to_string(down ? parent : i));
    const auto b = VertexId(std::to_string(down ? i : parent));
    arrows.push_back({ArrowId("a" + std::to_string(i - 1)), a, b, std::nullopt});
  }
  LabeledQuiver out{Quiver(std::move(vertices), std::move(arrows)), {}};
  for (int i = 0; i < n; ++i) {
    out.labels.push_back(rng() % 3 == 0 ? DivisionLabel::ext(split_count) : DivisionLabel::base());
  }
  return out;
}

inline LabeledQuiver relabel(LabeledQuiver q, std::vector<DivisionLabel> labels) {
  q.labels = std::move(labels);
  return q;
}

// Random quiver with random cycles taken from its closed directed walks.
inline QuiverWithCycles random_quiver_with_cycles(std::mt19937& rng, int n, int m, int cycles) {
  std::vector<VertexId> vertices;
  for (int i = 1; i <= n; ++i) vertices.emplace_back("v" + std::to_string(i));
  std::vector<Arrow> arrows;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    // a spanning path first keeps the quiver connected
    const int s = i < n - 1 ? i : pick(rng);
    const int t = i < n - 1 ? i + 1 : pick(rng);
    arrows.push_back({ArrowId("x" + std::to_string(i)), vertices[s], vertices[t], std::nullopt});
  }
  Quiver q(vertices, arrows);
  std::vector<Cycle> found;
  for (int attempt = 0; attempt < 200 && static_cast<int>(found.size()) < cycles; ++attempt) {
    VertexIndex start = pick(rng), v = start;
    std::vector<ArrowIndex> walk;
    for (int step = 0; step < 6; ++step) {
      const auto out = q.outgoing(v);
      if (out.empty()) break;
      const auto a = out[rng() % out.size()];
      walk.push_back(a);
      v = q.target(a);
      if (v == start) {
        found.push_back(canonicalize_cycle(q, std::span<const ArrowIndex>(walk), (rng() & 1) ? 1 : -1));
        break;
      }
    }
  }
  // keep one sign per arrow sequence
  std::map<std::vector<ArrowIndex>, Cycle> unique;
  for (auto& c : found) unique.emplace(c.arrows, c);
  std::vector<Cycle> cs;
  for (auto& [k, c] : unique) cs.push_back(c);
  return QuiverWithCycles(q, cs);
}

// Labelled isomorphism of quivers with cycles by backtracking over vertex
// bijections; arrows are matched as a multiset per (source, target) pair and
// cycles compared through their vertex sequences and signs. Arrow ids and
// vertex ids are ignored; `labels` are compared by kind only.
inline bool isomorphic(const LabeledQuiverWithCycles& x, const LabeledQuiverWithCycles& y) {
  const auto& qx = x.qwc.quiver();
  const auto& qy = y.qwc.quiver();
  const auto n = qx.vertex_count();
  if (n != qy.vertex_count() || qx.arrow_count() != qy.arrow_count() ||
      x.qwc.cycles().size() != y.qwc.cycles().size()) {
    return false;
  }
  auto kind = [](const LabeledQuiverWithCycles& q, VertexIndex v) {
    return v < q.labels.size() && q.labels[v] ? static_cast<int>(q.labels[v]->kind) : -1;
  };
  auto multiplicity = [](const Quiver& q) {
    std::map<std::pair<VertexIndex, VertexIndex>, int> m;
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) ++m[{q.source(a), q.target(a)}];
    return m;
  };
  const auto mx = multiplicity(qx), my = multiplicity(qy);
  // Cycles as (sign, rotation-minimal vertex sequence); only meaningful on
  // quivers without parallel arrows, which is all the golden tests need.
  auto cycle_keys = [](const LabeledQuiverWithCycles& q, const std::vector<VertexIndex>& map) {
    std::multiset<std::pair<int, std::vector<VertexIndex>>> keys;
    for (const auto& c : q.qwc.cycles()) {
      std::vector<VertexIndex> seq;
      for (auto a : c.arrows) seq.push_back(map[q.qwc.quiver().source(a)]);
      auto best = seq;
      for (std::size_t r = 1; r < seq.size(); ++r) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
        best = std::min(best, seq);
      }
      keys.emplace(c.sign.value_or(0), best);
    }
    return keys;
  };
  std::vector<VertexIndex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const auto target_keys = cycle_keys(y, identity);

  std::vector<VertexIndex> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(VertexIndex)> extend = [&](VertexIndex v) {
    if (v == n) return cycle_keys(x, map) == target_keys;
    for (VertexIndex w = 0; w < n; ++w) {
      if (used[w] || kind(x, v) != kind(y, w)) continue;
      map[v] = w;
      bool ok = true;
      for (VertexIndex u = 0; u <= v && ok; ++u) {
        auto count = [](const auto& m, VertexIndex a, VertexIndex b) {
          auto it = m.find({a, b});
          return it == m.end() ? 0 : it->second;
        };
        ok = count(mx, u, v) == count(my, map[u], w) && count(mx, v, u) == count(my, w, map[u]);
      }
      if (!ok) continue;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace qwc::testing
