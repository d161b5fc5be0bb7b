#include "qmat/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qmat/parallel.hpp"
#include "qmat/rational.hpp"

namespace qmat {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second)
      fail(ErrorKind::InvalidValue, "duplicate vertex '" + v + "'");
  std::set<std::string> arrow_names;
  for (const auto& a : arrows_) {
    if (a.from < 0 || a.from >= vertex_count() || a.to < 0 || a.to >= vertex_count())
      fail(ErrorKind::InvalidValue, "arrow '" + a.name + "' has endpoints outside Q0");
    if (!arrow_names.insert(a.name).second)
      fail(ErrorKind::InvalidValue, "duplicate arrow name '" + a.name + "'");
  }
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == name) return i;
  fail(ErrorKind::InvalidValue, "unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].name == name) return i;
  fail(ErrorKind::InvalidValue, "unknown arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back(Arrow{a.name, a.to, a.from});
  return Quiver(vertices_, std::move(rev));
}

void F1Rep::validate() const {
  if (static_cast<int>(sets.size()) != quiver.vertex_count())
    fail(ErrorKind::InvalidValue, "one pointed set per vertex required");
  if (static_cast<int>(maps.size()) != quiver.arrow_count())
    fail(ErrorKind::InvalidValue, "one linear map per arrow required");
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    const auto& arrow = quiver.arrow(a);
    if (maps[a].source != sets[arrow.from] || maps[a].target != sets[arrow.to])
      fail(ErrorKind::InvalidValue,
           "map of arrow '" + arrow.name + "' does not match its endpoint sets");
    validate_f1_linear(maps[a]);
  }
}

std::vector<int> F1Rep::dimension_vector() const {
  std::vector<int> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

bool F1Rep::labels_globally_unique() const {
  std::set<std::string> seen;
  for (const auto& s : sets)
    for (const auto& l : s.labels())
      if (!seen.insert(l).second) return false;
  return true;
}

std::string F1Rep::element_name(int v, int e) const {
  if (labels_globally_unique()) return sets[v].label(e);
  return quiver.vertex(v) + ":" + sets[v].label(e);
}

F1Rep F1Rep::dual() const {
  F1Rep out;
  out.quiver = quiver.opposite();
  out.sets = sets;
  out.maps.reserve(maps.size());
  for (const auto& m : maps) out.maps.push_back(m.adjoint());
  return out;
}

DimVector complement_dim(const F1Rep& rep, const RankVector& r) {
  if (r.size() != rep.sets.size())
    fail(ErrorKind::InvalidValue, "rank vector length does not match Q0");
  DimVector out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    out[v] = rep.sets[v].size() - r[v];
    if (out[v] < 0 || r[v] < 0)
      fail(ErrorKind::InvalidValue, "rank vector entry out of range");
  }
  return out;
}

Quiver coefficient_quiver(const F1Rep& rep) {
  rep.validate();
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> global(rep.sets.size());
  for (std::size_t v = 0; v < rep.sets.size(); ++v) {
    global[v].resize(rep.sets[v].size());
    for (int e = 0; e < rep.sets[v].size(); ++e) {
      global[v][e] = static_cast<int>(vertices.size());
      vertices.push_back(rep.element_name(static_cast<int>(v), e));
    }
  }
  std::vector<Quiver::Arrow> arrows;
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    for (int j = 0; j < rep.sets[arrow.from].size(); ++j) {
      int i = rep.maps[a].to[j];
      if (i < 0) continue;
      arrows.push_back(Quiver::Arrow{arrow.name + "/" + rep.element_name(arrow.from, j),
                                     global[arrow.from][j], global[arrow.to][i]});
    }
  }
  return Quiver(vertices, arrows);
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  // returns false if already joined (i.e. the edge closes a cycle)
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_tree(const Quiver& gamma) {
  Dsu dsu(gamma.vertex_count());
  for (const auto& a : gamma.arrows())
    if (!dsu.join(a.from, a.to)) return false;
  return true;
}

bool is_primitive_cycle(const Quiver& gamma, const F1Rep& rep) {
  int n = gamma.vertex_count();
  int m = gamma.arrow_count();
  if (n == 0 || m != n) return false;
  std::vector<int> degree(n, 0);
  Dsu dsu(n);
  int components = n;
  for (const auto& a : gamma.arrows()) {
    degree[a.from]++;
    degree[a.to]++;
    if (dsu.join(a.from, a.to)) --components;
  }
  for (int d : degree)
    if (d != 2) return false;
  if (components != 1) return false;
  for (const auto& s : rep.sets)
    if (s.size() > 1) return false;  // #Lambda_v <= 2 including the base point
  return true;
}

namespace {

// Arrow-closure check for the already-chosen prefix of vertices.
bool closed_under_arrows(const F1Rep& rep, const std::vector<Subset>& chosen, int upto) {
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    if (arrow.from > upto || arrow.to > upto) continue;
    for (int j : chosen[arrow.from]) {
      int i = rep.maps[a].to[j];
      if (i >= 0 && !subset_contains(chosen[arrow.to], i)) return false;
    }
  }
  return true;
}

void subrep_dfs(const F1Rep& rep, const DimVector& d, int v, std::vector<Subset>& chosen,
                std::vector<std::vector<Subset>>& out) {
  int nv = rep.quiver.vertex_count();
  if (v == nv) {
    out.push_back(chosen);
    return;
  }
  for (const Subset& omega : subsets_of_size(rep.sets[v].size(), d[v])) {
    chosen[v] = omega;
    if (closed_under_arrows(rep, chosen, v)) subrep_dfs(rep, d, v + 1, chosen, out);
  }
  chosen[v].clear();
}

}  // namespace

std::vector<std::vector<Subset>> subrepresentations(const F1Rep& rep, const DimVector& d) {
  rep.validate();
  if (d.size() != rep.sets.size())
    fail(ErrorKind::InvalidValue, "dimension vector length does not match Q0");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0 || d[v] > rep.sets[v].size())
      fail(ErrorKind::InvalidValue, "dimension vector entry out of range");
  int nv = rep.quiver.vertex_count();
  if (nv == 0) return {{}};
  std::vector<Subset> first = subsets_of_size(rep.sets[0].size(), d[0]);
  std::vector<std::vector<std::vector<Subset>>> buckets(first.size());
  parallel_for(first.size(), [&](std::size_t i) {
    std::vector<Subset> chosen(nv);
    chosen[0] = first[i];
    if (closed_under_arrows(rep, chosen, 0)) subrep_dfs(rep, d, 1, chosen, buckets[i]);
  });
  std::vector<std::vector<Subset>> out;
  for (auto& b : buckets)
    for (auto& s : b) out.push_back(std::move(s));
  // Re-verify arrow closure on every returned tuple.
  for (const auto& tuple : out)
    if (!closed_under_arrows(rep, tuple, nv - 1))
      fail(ErrorKind::InvalidValue, "internal: enumerated tuple not closed under arrows");
  return out;
}

std::vector<std::vector<Subset>> all_subrepresentations(const F1Rep& rep) {
  std::vector<std::vector<Subset>> out;
  DimVector d(rep.sets.size(), 0);
  while (true) {
    auto part = subrepresentations(rep, d);
    out.insert(out.end(), part.begin(), part.end());
    int v = static_cast<int>(d.size()) - 1;
    while (v >= 0 && d[v] == rep.sets[v].size()) d[v--] = 0;
    if (v < 0) break;
    ++d[v];
  }
  return out;
}

Grading Grading::constant(const F1Rep& rep, long long c) {
  Grading g;
  for (const auto& s : rep.sets) g.values.emplace_back(s.size(), c);
  return g;
}

Grading Grading::by_index(const F1Rep& rep) {
  Grading g;
  long long next = 0;
  for (const auto& s : rep.sets) {
    std::vector<long long> row(s.size());
    for (auto& x : row) x = next++;
    g.values.push_back(std::move(row));
  }
  return g;
}

bool is_nice_grading(const Grading& d, const F1Rep& rep) {
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    bool have = false;
    long long drop = 0;
    for (int j = 0; j < rep.sets[arrow.from].size(); ++j) {
      int i = rep.maps[a].to[j];
      if (i < 0) continue;
      long long dj = d.at(arrow.from, j) - d.at(arrow.to, i);
      if (!have) {
        drop = dj;
        have = true;
      } else if (dj != drop) {
        return false;
      }
    }
  }
  return true;
}

bool is_nice_relative(const Grading& d, const std::vector<Grading>& priors, const F1Rep& rep) {
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    for (int j1 = 0; j1 < rep.sets[arrow.from].size(); ++j1) {
      int i1 = rep.maps[a].to[j1];
      if (i1 < 0) continue;
      for (int j2 = j1 + 1; j2 < rep.sets[arrow.from].size(); ++j2) {
        int i2 = rep.maps[a].to[j2];
        if (i2 < 0) continue;
        bool tied = true;
        for (const Grading& p : priors) {
          if (p.at(arrow.from, j1) != p.at(arrow.from, j2) ||
              p.at(arrow.to, i1) != p.at(arrow.to, i2)) {
            tied = false;
            break;
          }
        }
        if (!tied) continue;
        if (d.at(arrow.to, i1) - d.at(arrow.to, i2) !=
            d.at(arrow.from, j1) - d.at(arrow.from, j2))
          return false;
      }
    }
  }
  return true;
}

bool is_nice_sequence(const std::vector<Grading>& seq, const F1Rep& rep) {
  if (seq.empty()) return false;
  if (!is_nice_grading(seq[0], rep)) return false;
  std::vector<Grading> priors{seq[0]};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!is_nice_relative(seq[i], priors, rep)) return false;
    priors.push_back(seq[i]);
  }
  return true;
}

bool distinguishes(const std::vector<Grading>& seq, const F1Rep& rep) {
  std::vector<std::pair<int, int>> elems;
  for (int v = 0; v < rep.quiver.vertex_count(); ++v)
    for (int e = 0; e < rep.sets[v].size(); ++e) elems.emplace_back(v, e);
  for (std::size_t p = 0; p < elems.size(); ++p) {
    for (std::size_t q = p + 1; q < elems.size(); ++q) {
      bool separated = false;
      for (const Grading& g : seq) {
        if (g.at(elems[p].first, elems[p].second) != g.at(elems[q].first, elems[q].second)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

namespace {

struct GammaEdge {
  int arrow;  // Q-arrow index
  int from;   // global element index (source side)
  int to;     // global element index (target side)
};

// Propagates values over the coefficient-quiver forest with a fixed drop per
// Q-arrow and one root offset per connected component.
std::optional<Grading> propagate_forest(const F1Rep& rep,
                                        const std::vector<long long>& drops,
                                        long long root_stride) {
  std::vector<std::pair<int, int>> elems;
  std::vector<std::vector<int>> global(rep.sets.size());
  for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
    global[v].resize(rep.sets[v].size());
    for (int e = 0; e < rep.sets[v].size(); ++e) {
      global[v][e] = static_cast<int>(elems.size());
      elems.emplace_back(v, e);
    }
  }
  std::vector<GammaEdge> edges;
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    for (int j = 0; j < rep.sets[arrow.from].size(); ++j) {
      int i = rep.maps[a].to[j];
      if (i >= 0) edges.push_back(GammaEdge{a, global[arrow.from][j], global[arrow.to][i]});
    }
  }
  std::size_t n = elems.size();
  std::vector<bool> known(n, false);
  std::vector<long long> value(n, 0);
  std::vector<std::vector<std::pair<int, bool>>> adjacency(n);  // (edge, forward?)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adjacency[edges[e].from].emplace_back(e, true);
    adjacency[edges[e].to].emplace_back(e, false);
  }
  long long component = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (known[root]) continue;
    known[root] = true;
    value[root] = component * root_stride;
    ++component;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [e, forward] : adjacency[u]) {
        // edge constraint: value[from] - value[to] = drops[arrow]
        std::size_t other = forward ? edges[e].to : edges[e].from;
        long long expect = forward ? value[u] - drops[edges[e].arrow]
                                   : value[u] + drops[edges[e].arrow];
        if (known[other]) {
          if (value[other] != expect) return std::nullopt;  // cycle conflict
          continue;
        }
        known[other] = true;
        value[other] = expect;
        stack.push_back(other);
      }
    }
  }
  Grading g;
  for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
    std::vector<long long> row(rep.sets[v].size());
    for (int e = 0; e < rep.sets[v].size(); ++e) row[e] = value[global[v][e]];
    g.values.push_back(std::move(row));
  }
  return g;
}

}  // namespace

namespace {

// Exact nullspace basis of the sparse system rows * x = 0 over Q, with one
// variable per element of the disjoint union.
std::vector<std::vector<Rational>> nullspace_basis(std::vector<std::vector<Rational>> rows,
                                                   std::size_t vars) {
  std::size_t pivot_row = 0;
  std::vector<int> pivot_col_of_row;
  for (std::size_t col = 0; col < vars && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == Rational(0)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rational inv_p = Rational(1) / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv_p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == Rational(0)) continue;
      Rational f = rows[r][col];
      for (std::size_t c = 0; c < vars; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  std::vector<bool> is_pivot(vars, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < vars; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(vars, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long long> to_integer_vector(const std::vector<Rational>& v) {
  long long lcm = 1;
  for (const auto& x : v) lcm = std::lcm(lcm, x.denominator());
  std::vector<long long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] * Rational(lcm)).numerator();
  return out;
}

}  // namespace

std::vector<Grading> find_nice_sequence(const F1Rep& rep, int search_bound) {
  rep.validate();
  // Fast path: an injective grading that happens to be nice already
  // distinguishes everything (arrowless quivers, primitive cycles, flags).
  {
    Grading g = Grading::by_index(rep);
    std::vector<Grading> seq{g};
    if (is_nice_grading(g, rep) && distinguishes(seq, rep)) return seq;
  }

  std::vector<std::pair<int, int>> elems;
  std::vector<std::vector<int>> global(rep.sets.size());
  for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
    global[v].resize(rep.sets[v].size());
    for (int e = 0; e < rep.sets[v].size(); ++e) {
      global[v][e] = static_cast<int>(elems.size());
      elems.emplace_back(v, e);
    }
  }
  std::size_t n = elems.size();
  if (n > static_cast<std::size_t>(search_bound))
    fail(ErrorKind::NotFound, "representation exceeds the nice-sequence search bound");

  // Initial nice grading: propagate per-arrow drops over the coefficient
  // quiver. Distinct scales separate as much as a single nice grading can on
  // forests; zero drops are always consistent otherwise.
  std::optional<Grading> start;
  if (is_tree(coefficient_quiver(rep)) && rep.quiver.arrow_count() < 12) {
    long long base = 2 * (static_cast<long long>(n) + 1);
    std::vector<long long> drops(rep.quiver.arrow_count());
    long long scale = base;
    for (auto& d : drops) {
      d = scale;
      scale *= base;
    }
    start = propagate_forest(rep, drops, 1);
  }
  if (!start)
    start = propagate_forest(rep, std::vector<long long>(rep.quiver.arrow_count(), 0),
                             1);
  std::vector<Grading> seq{*start};

  auto value_of = [&](const Grading& g, std::size_t idx) {
    return g.at(elems[idx].first, elems[idx].second);
  };
  for (std::size_t round = 0; round < n; ++round) {
    // Tied pairs under the priors collected so far.
    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        bool tied = true;
        for (const Grading& g : seq)
          if (value_of(g, p) != value_of(g, q)) {
            tied = false;
            break;
          }
        if (tied) ties.emplace_back(p, q);
      }
    }
    if (ties.empty()) break;

    // Relative-niceness constraints: for same-fiber pairs (a,b) tied on both
    // ends, d(a) - d(b) - d(La) + d(Lb) = 0.
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
      const auto& arrow = rep.quiver.arrow(a);
      for (int j1 = 0; j1 < rep.sets[arrow.from].size(); ++j1) {
        int i1 = rep.maps[a].to[j1];
        if (i1 < 0) continue;
        for (int j2 = j1 + 1; j2 < rep.sets[arrow.from].size(); ++j2) {
          int i2 = rep.maps[a].to[j2];
          if (i2 < 0) continue;
          bool tied = true;
          for (const Grading& g : seq) {
            if (g.at(arrow.from, j1) != g.at(arrow.from, j2) ||
                g.at(arrow.to, i1) != g.at(arrow.to, i2)) {
              tied = false;
              break;
            }
          }
          if (!tied) continue;
          std::vector<Rational> row(n, Rational(0));
          row[global[arrow.from][j1]] += Rational(1);
          row[global[arrow.from][j2]] -= Rational(1);
          row[global[arrow.to][i1]] -= Rational(1);
          row[global[arrow.to][i2]] += Rational(1);
          rows.push_back(std::move(row));
        }
      }
    }
    auto basis = nullspace_basis(std::move(rows), n);
    const std::vector<Rational>* separating = nullptr;
    for (const auto& b : basis) {
      for (auto [p, q] : ties) {
        if (b[p] != b[q]) {
          separating = &b;
          break;
        }
      }
      if (separating) break;
    }
    if (!separating)
      fail(ErrorKind::NotFound,
           "relative-nice refinements cannot separate the remaining ties");
    std::vector<long long> vals = to_integer_vector(*separating);
    Grading g;
    for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
      std::vector<long long> row(rep.sets[v].size());
      for (int e = 0; e < rep.sets[v].size(); ++e) row[e] = vals[global[v][e]];
      g.values.push_back(std::move(row));
    }
    seq.push_back(std::move(g));
  }

  if (!is_nice_sequence(seq, rep) || !distinguishes(seq, rep))
    fail(ErrorKind::NotFound, "search produced an invalid sequence");
  return seq;
}

}  // namespace qmat
