#include "qwc/canvas.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qwc/todd_coxeter.hpp"

namespace qwc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string AbelianGroup::describe() const {
  std::ostringstream os;
  os << "H1 rank " << free_rank;
  if (!torsion.empty()) {
    os << ", torsion";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? " x " : " ") << "Z/" << torsion[i];
  }
  return os.str();
}

long long euler_characteristic(const QuiverWithCycles& q) {
  return static_cast<long long>(q.quiver().vertex_count()) - static_cast<long long>(q.quiver().arrow_count()) +
         static_cast<long long>(q.cycles().size());
}

GroupPresentation pi1_presentation(const QuiverWithCycles& q) {
  const auto& quiver = q.quiver();
  if (!is_connected(quiver)) throw PreconditionError("fundamental group presentation requires a connected quiver");
  const auto forest = spanning_forest(quiver);
  GroupPresentation p;
  std::vector<std::uint32_t> generator_of(quiver.arrow_count(), 0);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (forest.tree_arrow[a]) continue;
    generator_of[a] = static_cast<std::uint32_t>(p.generators.size());
    p.generators.push_back(quiver.arrow(a).id);
  }
  for (const auto& c : q.cycles()) {
    Word w;
    for (auto a : c.arrows) {
      if (!forest.tree_arrow[a]) w.push_back({generator_of[a], 1});
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

GroupPresentation pi1_presentation(const QuiverWithCycles& q, const VertexId& basepoint) {
  // The tree collapses to the basepoint, so the presentation itself does not
  // depend on it; the basepoint still has to be a vertex.
  q.quiver().vertex_index(basepoint);
  return pi1_presentation(q);
}

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

}  // namespace

std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long long> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const auto f = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(f, m[t][j]));
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const auto f = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(f, m[i][t]));
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] = checked_add(m[t][k], m[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  const auto n = p.generators.size();
  std::vector<std::vector<long long>> matrix;
  for (const auto& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (const auto& l : r) row.at(l.generator) += l.exponent;
    matrix.push_back(std::move(row));
  }
  AbelianGroup g;
  const auto invariants = matrix.empty() ? std::vector<long long>{} : smith_invariants(std::move(matrix));
  g.free_rank = n - invariants.size();
  for (auto d : invariants) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

AbelianGroup h1(const QuiverWithCycles& q) { return abelianization(pi1_presentation(q)); }

namespace {

SimplyConnectedVerdict decide_component(const QuiverWithCycles& q, std::size_t budget) {
  const auto p = pi1_presentation(q);
  if (p.generators.empty()) return {Verdict::Yes, "trivial presentation (no generators)"};
  const auto homology = abelianization(p);
  if (!homology.trivial()) return {Verdict::No, homology.describe()};
  const auto run = enumerate_cosets(p.generators.size(), p.relators, budget);
  if (!run.closed) {
    return {Verdict::Unknown, "budget exhausted at " + std::to_string(budget) + " cosets"};
  }
  if (run.cosets == 1) return {Verdict::Yes, "coset table closed with 1 coset"};
  return {Verdict::No, "coset table closed with " + std::to_string(run.cosets) + " cosets"};
}

}  // namespace

SimplyConnectedVerdict is_simply_connected(const QuiverWithCycles& q, std::size_t budget) {
  const auto components = connected_components(q.quiver());
  if (components.size() <= 1) return decide_component(q, budget);

  SimplyConnectedVerdict overall{Verdict::Yes, ""};
  for (const auto& members : components) {
    const auto sub = induced_subquiver(q, members);
    const auto v = decide_component(sub, budget);
    if (!overall.evidence.empty()) overall.evidence += "; ";
    overall.evidence += "component " + sub.quiver().vertex(0).str() + ": " + v.evidence;
    if (v.status == Verdict::No) {
      overall.status = Verdict::No;
    } else if (v.status == Verdict::Unknown && overall.status == Verdict::Yes) {
      overall.status = Verdict::Unknown;
    }
  }
  return overall;
}

}  // namespace qwc
