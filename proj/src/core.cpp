#include "qwc/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qwc {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::strong_ordering natural_compare(std::string_view lhs, std::string_view rhs) {
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t ie = i, je = j;
      while (ie < lhs.size() && is_digit(lhs[ie])) ++ie;
      while (je < rhs.size() && is_digit(rhs[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && lhs[is] == '0') ++is;
      while (js + 1 < je && rhs[js] == '0') ++js;
      const std::size_t li = ie - is, lj = je - js;
      if (li != lj) return li <=> lj;
      if (auto c = lhs.substr(is, li).compare(rhs.substr(js, lj)); c != 0) return c <=> 0;
      i = ie;
      j = je;
      continue;
    }
    if (lhs[i] != rhs[j]) {
      return static_cast<unsigned char>(lhs[i]) <=> static_cast<unsigned char>(rhs[j]);
    }
    ++i;
    ++j;
  }
  if (lhs.size() - i != rhs.size() - j) return (lhs.size() - i) <=> (rhs.size() - j);
  return lhs.compare(rhs) <=> 0;
}

InvalidQuiver::InvalidQuiver(std::vector<std::string> violations)
    : Error("invalid quiver: " + join(violations, "; ")), violations_(std::move(violations)) {}

// ---------------------------------------------------------------------------
// Quiver

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });

  std::vector<std::string> violations;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i - 1]) violations.push_back("duplicate vertex id " + vertices_[i].str());
  }
  for (std::size_t i = 1; i < arrows_.size(); ++i) {
    if (arrows_[i].id == arrows_[i - 1].id) violations.push_back("duplicate arrow id " + arrows_[i].id.str());
  }
  source_.resize(arrows_.size());
  target_.resize(arrows_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    auto s = find_vertex(arrows_[a].source);
    auto t = find_vertex(arrows_[a].target);
    if (!s) violations.push_back("arrow " + arrows_[a].id.str() + " has undeclared source vertex " + arrows_[a].source.str());
    if (!t) violations.push_back("arrow " + arrows_[a].id.str() + " has undeclared target vertex " + arrows_[a].target.str());
    source_[a] = s.value_or(0);
    target_[a] = t.value_or(0);
  }
  if (!violations.empty()) throw InvalidQuiver(std::move(violations));

  const auto n = vertices_.size();
  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    ++out_offset_[source_[a] + 1];
    ++in_offset_[target_[a] + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  out_.resize(arrows_.size());
  in_.resize(arrows_.size());
  auto out_fill = out_offset_;
  auto in_fill = in_offset_;
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    out_[out_fill[source_[a]]++] = a;
    in_[in_fill[target_[a]]++] = a;
  }
}

std::optional<VertexIndex> Quiver::find_vertex(const VertexId& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<ArrowIndex> Quiver::find_arrow(const ArrowId& id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, const ArrowId& key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<ArrowIndex>(it - arrows_.begin());
}

VertexIndex Quiver::vertex_index(const VertexId& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw PreconditionError("unknown vertex " + id.str());
}

ArrowIndex Quiver::arrow_index(const ArrowId& id) const {
  if (auto a = find_arrow(id)) return *a;
  throw PreconditionError("unknown arrow " + id.str());
}

std::span<const ArrowIndex> Quiver::outgoing(VertexIndex v) const {
  return {out_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
}

std::span<const ArrowIndex> Quiver::incoming(VertexIndex v) const {
  return {in_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
}

Quiver Quiver::without_arrows(std::span<const ArrowIndex> removed) const {
  std::vector<bool> drop(arrows_.size(), false);
  for (auto a : removed) drop.at(a) = true;
  std::vector<Arrow> kept;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (!drop[a]) kept.push_back(arrows_[a]);
  }
  return Quiver(vertices_, std::move(kept));
}

// ---------------------------------------------------------------------------
// Walks

Walk Walk::inverse() const {
  Walk w;
  w.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.steps.push_back({it->arrow, -it->direction});
  return w;
}

VertexIndex step_start(const Quiver& q, Step s) { return s.direction > 0 ? q.source(s.arrow) : q.target(s.arrow); }
VertexIndex step_end(const Quiver& q, Step s) { return s.direction > 0 ? q.target(s.arrow) : q.source(s.arrow); }

bool is_valid_walk(const Quiver& q, const Walk& w) {
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    if (s.arrow >= q.arrow_count() || (s.direction != 1 && s.direction != -1)) return false;
    if (i > 0 && step_end(q, w.steps[i - 1]) != step_start(q, s)) return false;
  }
  return true;
}

bool is_cyclic_walk(const Quiver& q, const Walk& w) {
  if (!is_valid_walk(q, w)) return false;
  if (w.steps.empty()) return true;
  return step_end(q, w.steps.back()) == step_start(q, w.steps.front());
}

std::vector<long long> signed_arrow_counts(const Quiver& q, const Walk& w) {
  std::vector<long long> counts(q.arrow_count(), 0);
  for (const auto& s : w.steps) counts.at(s.arrow) += s.direction;
  return counts;
}

// ---------------------------------------------------------------------------
// Cycles

Cycle canonicalize_cycle(const Quiver& q, std::span<const ArrowIndex> arrows, std::optional<int> sign) {
  if (arrows.empty()) throw PreconditionError("cycle has no arrows");
  for (auto a : arrows) {
    if (a >= q.arrow_count()) throw PreconditionError("cycle refers to an arrow outside the quiver");
  }
  const std::size_t n = arrows.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = arrows[i];
    const auto b = arrows[(i + 1) % n];
    if (q.target(a) != q.source(b)) {
      throw PreconditionError("cycle is not a closed path: arrow " + q.arrow(a).id.str() + " is not followed by " +
                              q.arrow(b).id.str());
    }
  }
  if (sign && *sign != 1 && *sign != -1) throw PreconditionError("cycle sign must be +1 or -1");

  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = arrows[(r + k) % n];
      const auto y = arrows[(best + k) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  Cycle c;
  c.arrows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.arrows.push_back(arrows[(best + k) % n]);
  c.sign = sign;
  return c;
}

Cycle canonicalize_cycle(const Quiver& q, std::span<const ArrowId> arrows, std::optional<int> sign) {
  std::vector<ArrowIndex> idx;
  idx.reserve(arrows.size());
  for (const auto& id : arrows) idx.push_back(q.arrow_index(id));
  return canonicalize_cycle(q, idx, sign);
}

// ---------------------------------------------------------------------------
// QuiverWithCycles

QuiverWithCycles::QuiverWithCycles(Quiver quiver, std::vector<Cycle> cycles) : quiver_(std::move(quiver)) {
  for (auto& c : cycles) c = canonicalize_cycle(quiver_, c.arrows, c.sign);
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.arrows < b.arrows; });
  std::vector<std::string> violations;
  for (auto& c : cycles) {
    if (!cycles_.empty() && cycles_.back().arrows == c.arrows) {
      if (cycles_.back().sign != c.sign) {
        std::string name;
        for (auto a : c.arrows) name += (name.empty() ? "" : ",") + quiver_.arrow(a).id.str();
        violations.push_back("cycle [" + name + "] listed twice with different signs");
      }
      continue;
    }
    cycles_.push_back(std::move(c));
  }
  if (!violations.empty()) throw InvalidQuiver(std::move(violations));

  std::vector<std::vector<std::uint32_t>> through(quiver_.arrow_count());
  for (std::uint32_t ci = 0; ci < cycles_.size(); ++ci) {
    for (auto a : cycles_[ci].arrows) {
      if (through[a].empty() || through[a].back() != ci) through[a].push_back(ci);
    }
  }
  through_offset_.assign(1, 0);
  for (auto& t : through) {
    through_.insert(through_.end(), t.begin(), t.end());
    through_offset_.push_back(static_cast<std::uint32_t>(through_.size()));
  }
}

std::span<const std::uint32_t> QuiverWithCycles::cycles_through(ArrowIndex a) const {
  return {through_.data() + through_offset_[a], through_offset_[a + 1] - through_offset_[a]};
}

QuiverWithCycles QuiverWithCycles::from_description(const QuiverDescription& d) {
  std::vector<std::string> violations;
  for (auto& v : validate(d)) {
    if (v != "quiver is not connected") violations.push_back(std::move(v));
  }
  if (!violations.empty()) throw InvalidQuiver(std::move(violations));
  Quiver q(d.vertices, d.arrows);
  std::vector<Cycle> cycles;
  cycles.reserve(d.cycles.size());
  for (const auto& c : d.cycles) cycles.push_back(canonicalize_cycle(q, c.arrows, c.sign));
  return QuiverWithCycles(std::move(q), std::move(cycles));
}

QuiverDescription QuiverWithCycles::describe() const {
  QuiverDescription d;
  d.vertices = quiver_.vertices();
  d.arrows = quiver_.arrows();
  for (const auto& c : cycles_) {
    CycleSpec spec;
    for (auto a : c.arrows) spec.arrows.push_back(quiver_.arrow(a).id);
    spec.sign = c.sign;
    d.cycles.push_back(std::move(spec));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::vector<std::vector<VertexIndex>> components_from_edges(std::size_t n,
                                                            const std::vector<std::pair<VertexIndex, VertexIndex>>& edges) {
  std::vector<VertexIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<VertexIndex, std::vector<VertexIndex>> groups;
  for (VertexIndex v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<VertexIndex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<std::string> validate(const QuiverDescription& d) {
  std::vector<std::string> violations;

  std::set<VertexId> vertices;
  for (const auto& v : d.vertices) {
    if (!vertices.insert(v).second) violations.push_back("duplicate vertex id " + v.str());
  }
  std::map<ArrowId, const Arrow*> arrows;
  for (const auto& a : d.arrows) {
    if (!arrows.emplace(a.id, &a).second) violations.push_back("duplicate arrow id " + a.id.str());
    if (!vertices.count(a.source)) {
      violations.push_back("arrow " + a.id.str() + " has undeclared source vertex " + a.source.str());
    }
    if (!vertices.count(a.target)) {
      violations.push_back("arrow " + a.id.str() + " has undeclared target vertex " + a.target.str());
    }
  }

  // Cycles: existence, chaining, sign, distinctness after canonicalization.
  std::map<std::vector<ArrowId>, std::optional<int>> seen;
  for (std::size_t ci = 0; ci < d.cycles.size(); ++ci) {
    const auto& c = d.cycles[ci];
    const std::string where = "cycle " + std::to_string(ci);
    if (c.arrows.empty()) {
      violations.push_back(where + " has no arrows");
      continue;
    }
    bool known = true;
    for (const auto& a : c.arrows) {
      if (!arrows.count(a)) {
        violations.push_back(where + " refers to unknown arrow " + a.str());
        known = false;
      }
    }
    if (c.sign && *c.sign != 1 && *c.sign != -1) violations.push_back(where + " has sign other than +1/-1");
    if (!known) continue;
    bool closed = true;
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
      const auto* a = arrows.at(c.arrows[i]);
      const auto* b = arrows.at(c.arrows[(i + 1) % c.arrows.size()]);
      if (a->target != b->source) {
        violations.push_back(where + " is not a closed path: arrow " + a->id.str() + " is not followed by " + b->id.str());
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    // least rotation by id
    std::vector<ArrowId> best = c.arrows;
    for (std::size_t r = 1; r < c.arrows.size(); ++r) {
      std::vector<ArrowId> rot(c.arrows.begin() + static_cast<std::ptrdiff_t>(r), c.arrows.end());
      rot.insert(rot.end(), c.arrows.begin(), c.arrows.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = std::move(rot);
    }
    auto [it, fresh] = seen.emplace(best, c.sign);
    if (!fresh && it->second != c.sign) {
      std::string name;
      for (const auto& a : best) name += (name.empty() ? "" : ",") + a.str();
      violations.push_back(where + " [" + name + "] repeats an earlier cycle with a different sign");
    }
  }

  if (violations.empty() && d.vertices.size() > 1) {
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    auto index_of = [&](const VertexId& v) {
      return static_cast<VertexIndex>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    for (const auto& a : d.arrows) edges.emplace_back(index_of(a.source), index_of(a.target));
    if (components_from_edges(sorted.size(), edges).size() > 1) violations.push_back("quiver is not connected");
  }
  return violations;
}

std::vector<std::string> validate(const QuiverWithCycles& q) {
  if (is_connected(q.quiver())) return {};
  return {"quiver is not connected"};
}

std::vector<std::vector<VertexIndex>> connected_components(const Quiver& q) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  edges.reserve(q.arrow_count());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) edges.emplace_back(q.source(a), q.target(a));
  return components_from_edges(q.vertex_count(), edges);
}

bool is_connected(const Quiver& q) { return connected_components(q).size() <= 1; }

QuiverWithCycles induced_subquiver(const QuiverWithCycles& q, std::span<const VertexIndex> vertices) {
  const auto& quiver = q.quiver();
  std::vector<bool> keep(quiver.vertex_count(), false);
  std::vector<VertexId> ids;
  for (auto v : vertices) {
    keep.at(v) = true;
    ids.push_back(quiver.vertex(v));
  }
  std::vector<Arrow> arrows;
  std::vector<bool> keep_arrow(quiver.arrow_count(), false);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (keep[quiver.source(a)] && keep[quiver.target(a)]) {
      keep_arrow[a] = true;
      arrows.push_back(quiver.arrow(a));
    }
  }
  Quiver sub(std::move(ids), std::move(arrows));
  std::vector<Cycle> cycles;
  for (const auto& c : q.cycles()) {
    if (!std::all_of(c.arrows.begin(), c.arrows.end(), [&](ArrowIndex a) { return keep_arrow[a]; })) continue;
    Cycle mapped;
    for (auto a : c.arrows) mapped.arrows.push_back(sub.arrow_index(quiver.arrow(a).id));
    mapped.sign = c.sign;
    cycles.push_back(std::move(mapped));
  }
  return QuiverWithCycles(std::move(sub), std::move(cycles));
}

bool is_acyclic(const Quiver& q) {
  std::vector<std::uint32_t> indegree(q.vertex_count(), 0);
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) ++indegree[q.target(a)];
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (auto a : q.outgoing(v)) {
      if (--indegree[q.target(a)] == 0) ready.push_back(q.target(a));
    }
  }
  return removed == q.vertex_count();
}

// ---------------------------------------------------------------------------
// Spanning forest and cycle basis

SpanningForest spanning_forest(const Quiver& q) {
  const auto n = q.vertex_count();
  SpanningForest f;
  f.tree_arrow.assign(q.arrow_count(), false);
  f.parent_arrow.assign(n, std::nullopt);
  f.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<ArrowIndex> incident;
  for (VertexIndex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      incident.assign(q.outgoing(u).begin(), q.outgoing(u).end());
      incident.insert(incident.end(), q.incoming(u).begin(), q.incoming(u).end());
      std::sort(incident.begin(), incident.end());
      for (auto a : incident) {
        const auto w = q.source(a) == u ? q.target(a) : q.source(a);
        if (seen[w]) continue;
        seen[w] = true;
        f.tree_arrow[a] = true;
        f.parent_arrow[w] = a;
        f.depth[w] = f.depth[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return f;
}

Walk tree_path(const Quiver& q, const SpanningForest& forest, VertexIndex from, VertexIndex to) {
  // Climb from both ends to the common ancestor; `up` is read forwards,
  // `down` is collected backwards.
  std::vector<Step> up, down;
  auto parent_of = [&](VertexIndex v, ArrowIndex a) { return q.source(a) == v ? q.target(a) : q.source(a); };
  auto x = from, y = to;
  while (x != y) {
    if (forest.depth[x] >= forest.depth[y] && forest.parent_arrow[x]) {
      const auto a = *forest.parent_arrow[x];
      up.push_back({a, q.source(a) == x ? 1 : -1});
      x = parent_of(x, a);
    } else if (forest.parent_arrow[y]) {
      const auto a = *forest.parent_arrow[y];
      // traversed from parent to y
      down.push_back({a, q.target(a) == y ? 1 : -1});
      y = parent_of(y, a);
    } else {
      throw PreconditionError("vertices lie in different components");
    }
  }
  Walk w;
  w.steps = std::move(up);
  w.steps.insert(w.steps.end(), down.rbegin(), down.rend());
  return w;
}

std::vector<Walk> fundamental_cycles(const Quiver& q) {
  const auto forest = spanning_forest(q);
  std::vector<Walk> basis;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (forest.tree_arrow[a]) continue;
    Walk w;
    w.steps.push_back({a, 1});
    auto back = tree_path(q, forest, q.target(a), q.source(a));
    w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Walk> cycle_space_basis(const Quiver& q) {
  if (!is_connected(q)) throw PreconditionError("cycle space basis requires a connected quiver");
  return fundamental_cycles(q);
}

}  // namespace qwc
