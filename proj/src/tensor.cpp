#include "qwc/tensor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qwc {

std::string to_string(DivisionLabel::Kind k) { return k == DivisionLabel::Kind::Base ? "Base" : "Ext"; }

std::string LabeledDynkinSpec::name() const {
  static constexpr const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(type)]) + std::to_string(rank);
}

void check_dynkin_rank(DynkinType type, int rank) {
  bool ok = false;
  switch (type) {
    case DynkinType::A: ok = rank >= 1; break;
    case DynkinType::B:
    case DynkinType::C: ok = rank >= 2; break;
    case DynkinType::D: ok = rank >= 4; break;
    case DynkinType::E: ok = rank >= 6 && rank <= 8; break;
    case DynkinType::F: ok = rank == 4; break;
    case DynkinType::G: ok = rank == 2; break;
  }
  if (!ok) {
    LabeledDynkinSpec s{type, rank, {}, 1};
    throw PreconditionError("illegal Dynkin rank " + s.name());
  }
}

std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank) {
  check_dynkin_rank(type, rank);
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::D:
      edges = {{1, 3}, {2, 3}};
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinType::E:
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(3, rank);
      break;
    default:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LabeledDynkinSpec default_dynkin(DynkinType type, int rank, int split_count) {
  LabeledDynkinSpec spec{type, rank, {}, split_count};
  for (auto [i, j] : dynkin_edges(type, rank)) {
    if (type == DynkinType::E) {
      // the figure's E orientation: both arms run into vertex 3, which
      // points at the branch vertex
      if (j == rank || i < 3) {
        spec.orientation.emplace_back(i, j);
      } else {
        spec.orientation.emplace_back(j, i);
      }
    } else {
      // D's fork tips 1, 2 point inward at 3 like the rest of the path
      spec.orientation.emplace_back(i, j);
    }
  }
  return spec;
}

namespace {

DivisionLabel catalog_label(const LabeledDynkinSpec& spec, int vertex) {
  const auto ext = DivisionLabel::ext(spec.split_count);
  const auto base = DivisionLabel::base();
  switch (spec.type) {
    case DynkinType::B: return vertex == 1 ? base : ext;
    case DynkinType::C: return vertex == 1 ? ext : base;
    case DynkinType::F: return vertex <= 2 ? ext : base;
    case DynkinType::G: return vertex == 1 ? ext : base;
    default: return base;
  }
}

std::set<std::pair<int, int>> oriented_edges(const LabeledDynkinSpec& spec) {
  const auto edges = dynkin_edges(spec.type, spec.rank);
  std::set<std::pair<int, int>> seen;
  for (auto [from, to] : spec.orientation) {
    const std::pair<int, int> e{std::min(from, to), std::max(from, to)};
    if (!std::binary_search(edges.begin(), edges.end(), e)) {
      throw PreconditionError("orientation " + std::to_string(from) + "->" + std::to_string(to) +
                              " is not an edge of " + spec.name());
    }
    if (!seen.insert(e).second) {
      throw PreconditionError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " of " +
                              spec.name() + " is oriented twice");
    }
  }
  if (seen.size() != edges.size()) throw PreconditionError("orientation of " + spec.name() + " is incomplete");
  return {spec.orientation.begin(), spec.orientation.end()};
}

}  // namespace

LabeledQuiver dynkin_quiver(const LabeledDynkinSpec& spec) {
  if (spec.split_count < 1) throw PreconditionError("split count must be positive");
  const auto arrows_set = oriented_edges(spec);
  const auto edges = dynkin_edges(spec.type, spec.rank);
  std::vector<VertexId> vertices;
  for (int v = 1; v <= spec.rank; ++v) vertices.emplace_back(std::to_string(v));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [i, j] = edges[k];
    const bool forward = arrows_set.count({i, j}) > 0;
    arrows.push_back({ArrowId("a" + std::to_string(k + 1)), VertexId(std::to_string(forward ? i : j)),
                      VertexId(std::to_string(forward ? j : i)), std::nullopt});
  }
  LabeledQuiver out{Quiver(std::move(vertices), std::move(arrows)), {}};
  for (VertexIndex v = 0; v < out.quiver.vertex_count(); ++v) {
    out.labels.push_back(catalog_label(spec, std::stoi(out.quiver.vertex(v).str())));
  }
  return out;
}

std::vector<int> nakayama_permutation(DynkinType type, int rank) {
  check_dynkin_rank(type, rank);
  std::vector<int> sigma(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) sigma[static_cast<std::size_t>(i)] = i;
  if (type == DynkinType::A) {
    for (int i = 1; i <= rank; ++i) sigma[static_cast<std::size_t>(i)] = rank + 1 - i;
  } else if (type == DynkinType::D && rank % 2 == 1) {
    std::swap(sigma[1], sigma[2]);
  } else if (type == DynkinType::E && rank == 6) {
    std::swap(sigma[1], sigma[5]);
    std::swap(sigma[2], sigma[4]);
  }
  return sigma;
}

std::optional<int> l_homogeneity(const LabeledDynkinSpec& spec) {
  const auto arrows = oriented_edges(spec);
  const auto sigma = nakayama_permutation(spec.type, spec.rank);
  for (auto [i, j] : arrows) {
    if (!arrows.count({sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]})) return std::nullopt;
  }
  const int n = spec.rank;
  switch (spec.type) {
    case DynkinType::A:
      if ((n + 1) % 2 != 0) return std::nullopt;
      return (n + 1) / 2;
    case DynkinType::B:
    case DynkinType::C: return n;
    case DynkinType::D: return n - 1;
    case DynkinType::E: return n == 6 ? 6 : n == 7 ? 9 : 15;
    case DynkinType::F: return 6;
    case DynkinType::G: return 3;
  }
  return std::nullopt;
}

DivisionLabel combine_labels(const DivisionLabel& left, const DivisionLabel& right) {
  if (left.kind == DivisionLabel::Kind::Ext) return left;
  if (right.kind == DivisionLabel::Kind::Ext) return right;
  return DivisionLabel::base();
}

LabeledQuiverWithCycles tensor_qwc(const LabeledQuiver& q1, const LabeledQuiver& q2) {
  const auto& a = q1.quiver;
  const auto& b = q2.quiver;
  if (q1.labels.size() != a.vertex_count() || q2.labels.size() != b.vertex_count()) {
    throw PreconditionError("every factor vertex needs a label");
  }
  auto vid = [&](VertexIndex i, VertexIndex j) {
    return VertexId("(" + a.vertex(i).str() + "," + b.vertex(j).str() + ")");
  };
  auto vertical = [&](VertexIndex i, ArrowIndex beta) {
    return ArrowId("(" + a.vertex(i).str() + "," + b.arrow(beta).id.str() + ")");
  };
  auto horizontal = [&](ArrowIndex alpha, VertexIndex j) {
    return ArrowId("(" + a.arrow(alpha).id.str() + "," + b.vertex(j).str() + ")");
  };
  auto diagonal = [&](ArrowIndex alpha, ArrowIndex beta) {
    return ArrowId("(" + a.arrow(alpha).id.str() + "*," + b.arrow(beta).id.str() + "*)");
  };

  std::vector<VertexId> vertices;
  std::map<VertexId, std::pair<VertexIndex, VertexIndex>> factors;
  for (VertexIndex i = 0; i < a.vertex_count(); ++i) {
    for (VertexIndex j = 0; j < b.vertex_count(); ++j) {
      vertices.push_back(vid(i, j));
      factors[vertices.back()] = {i, j};
    }
  }
  std::vector<Arrow> arrows;
  std::map<ArrowId, ArrowClass> klass;
  for (VertexIndex i = 0; i < a.vertex_count(); ++i) {
    for (ArrowIndex beta = 0; beta < b.arrow_count(); ++beta) {
      arrows.push_back({vertical(i, beta), vid(i, b.source(beta)), vid(i, b.target(beta)), std::nullopt});
      klass[arrows.back().id] = ArrowClass::Vertical;
    }
  }
  for (ArrowIndex alpha = 0; alpha < a.arrow_count(); ++alpha) {
    for (VertexIndex j = 0; j < b.vertex_count(); ++j) {
      arrows.push_back({horizontal(alpha, j), vid(a.source(alpha), j), vid(a.target(alpha), j), std::nullopt});
      klass[arrows.back().id] = ArrowClass::Horizontal;
    }
  }
  for (ArrowIndex alpha = 0; alpha < a.arrow_count(); ++alpha) {
    for (ArrowIndex beta = 0; beta < b.arrow_count(); ++beta) {
      arrows.push_back({diagonal(alpha, beta), vid(a.target(alpha), b.target(beta)),
                        vid(a.source(alpha), b.source(beta)), std::nullopt});
      klass[arrows.back().id] = ArrowClass::Diagonal;
    }
  }
  Quiver quiver(std::move(vertices), std::move(arrows));
  if (klass.size() != quiver.arrow_count()) throw PreconditionError("tensor arrow names collide");

  std::vector<Cycle> cycles;
  for (ArrowIndex alpha = 0; alpha < a.arrow_count(); ++alpha) {
    for (ArrowIndex beta = 0; beta < b.arrow_count(); ++beta) {
      const auto d = quiver.arrow_index(diagonal(alpha, beta));
      // (s a, s b) -> (s a, t b) -> (t a, t b) -> back
      const std::vector<ArrowIndex> plus{quiver.arrow_index(vertical(a.source(alpha), beta)),
                                         quiver.arrow_index(horizontal(alpha, b.target(beta))), d};
      // (s a, s b) -> (t a, s b) -> (t a, t b) -> back
      const std::vector<ArrowIndex> minus{quiver.arrow_index(horizontal(alpha, b.source(beta))),
                                          quiver.arrow_index(vertical(a.target(alpha), beta)), d};
      cycles.push_back({plus, 1});
      cycles.push_back({minus, -1});
    }
  }

  LabeledQuiverWithCycles out;
  TensorProvenance prov;
  for (const auto& arrow : quiver.arrows()) prov.arrow_class.push_back(klass.at(arrow.id));
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    const auto [i, j] = factors.at(quiver.vertex(v));
    prov.factor_labels.emplace_back(q1.labels[i], q2.labels[j]);
    out.labels.emplace_back(combine_labels(q1.labels[i], q2.labels[j]));
  }
  out.qwc = QuiverWithCycles(std::move(quiver), std::move(cycles));
  out.tensor = std::move(prov);
  return out;
}

std::array<Cut, 3> standard_cuts(const LabeledQuiverWithCycles& t) {
  if (!t.tensor) throw PreconditionError("standard cuts exist only for tensor quivers");
  std::array<std::vector<ArrowIndex>, 3> classes;
  for (ArrowIndex a = 0; a < t.tensor->arrow_class.size(); ++a) {
    classes[static_cast<std::size_t>(t.tensor->arrow_class[a])].push_back(a);
  }
  return {Cut(classes[0]), Cut(classes[1]), Cut(classes[2])};
}

LabeledQuiverWithCycles morita_split(const LabeledQuiverWithCycles& t) {
  if (!t.tensor) throw PreconditionError("Morita splitting needs a tensor quiver");
  if (t.tensor->split) throw PreconditionError("quiver is already split");
  const auto& q = t.qwc.quiver();
  const auto& prov = *t.tensor;

  std::optional<int> n;
  std::vector<bool> in_v(q.vertex_count(), false);
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    const auto& [l, r] = prov.factor_labels[v];
    if (l.kind != DivisionLabel::Kind::Ext || r.kind != DivisionLabel::Kind::Ext) continue;
    if (l.split_count != r.split_count || (n && *n != l.split_count)) {
      throw PreconditionError("inconsistent split counts at vertex " + q.vertex(v).str());
    }
    n = l.split_count;
    in_v[v] = true;
  }
  auto copies = [&](VertexIndex v) { return in_v[v] ? *n : 1; };
  auto copy_vertex = [&](VertexIndex v, int k) {
    return in_v[v] ? VertexId(q.vertex(v).str() + "#" + std::to_string(k)) : q.vertex(v);
  };
  auto copy_arrow = [&](ArrowIndex a, int k, int k2) {
    if (copies(q.source(a)) == 1 && copies(q.target(a)) == 1) return q.arrow(a).id;
    return ArrowId(q.arrow(a).id.str() + "[" + std::to_string(k) + "," + std::to_string(k2) + "]");
  };
  auto arrow_exists = [&](ArrowIndex a, int k, int k2) {
    return !(in_v[q.source(a)] && in_v[q.target(a)]) || k == k2;
  };

  std::vector<VertexId> vertices;
  std::map<VertexId, VertexIndex> origin_vertex;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    for (int k = 1; k <= copies(v); ++k) {
      vertices.push_back(copy_vertex(v, k));
      origin_vertex[vertices.back()] = v;
    }
  }
  std::vector<Arrow> arrows;
  std::map<ArrowId, ArrowIndex> origin_arrow;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    for (int k = 1; k <= copies(q.source(a)); ++k) {
      for (int k2 = 1; k2 <= copies(q.target(a)); ++k2) {
        if (!arrow_exists(a, k, k2)) continue;
        arrows.push_back({copy_arrow(a, k, k2), copy_vertex(q.source(a), k), copy_vertex(q.target(a), k2),
                          q.arrow(a).label});
        origin_arrow[arrows.back().id] = a;
      }
    }
  }
  Quiver split(std::move(vertices), std::move(arrows));

  // Lift each cycle along every consistent choice of vertex copies.
  std::vector<Cycle> cycles;
  for (const auto& c : t.qwc.cycles()) {
    const auto len = c.arrows.size();
    std::vector<int> k(len, 1);  // copy of the source vertex of arrow i
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == len) {
        Cycle lifted{{}, c.sign};
        for (std::size_t p = 0; p < len; ++p) {
          const auto a = c.arrows[p];
          const auto k2 = k[(p + 1) % len];
          if (!arrow_exists(a, k[p], k2)) return;
          lifted.arrows.push_back(split.arrow_index(copy_arrow(a, k[p], k2)));
        }
        cycles.push_back(std::move(lifted));
        return;
      }
      for (int x = 1; x <= copies(q.source(c.arrows[i])); ++x) {
        k[i] = x;
        assign(i + 1);
      }
    };
    assign(0);
  }

  LabeledQuiverWithCycles out;
  TensorProvenance next;
  next.split = true;
  for (const auto& arrow : split.arrows()) next.arrow_class.push_back(prov.arrow_class[origin_arrow.at(arrow.id)]);
  for (const auto& v : split.vertices()) {
    const auto o = origin_vertex.at(v);
    next.factor_labels.push_back(prov.factor_labels[o]);
    out.labels.push_back(t.labels[o]);
  }
  out.qwc = QuiverWithCycles(std::move(split), std::move(cycles));
  out.tensor = std::move(next);
  return out;
}

}  // namespace qwc
