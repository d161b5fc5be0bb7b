#include "qmat/quiver_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qmat/parallel.hpp"

namespace qmat {

RankVector QuiverMatroid::rank_vector() const {
  RankVector out;
  out.reserve(vertex_matroids.size());
  for (const auto& m : vertex_matroids) out.push_back(m.rank());
  return out;
}

std::string QuiverMatroid::canonical_key() const {
  std::ostringstream os;
  for (const auto& m : vertex_matroids) os << m.canonical_key() << '#';
  for (const auto& a : arrow_maps) os << a.canonical_key() << '#';
  return os.str();
}

bool QuiverMatroid::operator==(const QuiverMatroid& o) const {
  return quiver == o.quiver && vertex_matroids == o.vertex_matroids &&
         arrow_maps == o.arrow_maps;
}

QuiverMatroid validate_qm(const Quiver& quiver, std::vector<Matroid> vertex_matroids,
                          std::vector<SubmonomialMatrix> arrow_maps) {
  if (static_cast<int>(vertex_matroids.size()) != quiver.vertex_count())
    fail(ErrorKind::InvalidValue, "one matroid per vertex required");
  if (static_cast<int>(arrow_maps.size()) != quiver.arrow_count())
    fail(ErrorKind::InvalidValue, "one matrix per arrow required");
  for (std::size_t v = 1; v < vertex_matroids.size(); ++v)
    if (vertex_matroids[v].idyll() != vertex_matroids[0].idyll())
      fail(ErrorKind::DescriptorMismatch, "vertex matroids must share one idyll");
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    const auto& arrow = quiver.arrow(a);
    MorphismCheck check = check_morphism_pluecker(arrow_maps[a], vertex_matroids[arrow.from],
                                                  vertex_matroids[arrow.to]);
    if (!check.ok)
      fail(ErrorKind::MorphismViolation,
           "arrow '" + arrow.name + "' is not a morphism: " + check.witness->sum);
  }
  return QuiverMatroid{quiver, std::move(vertex_matroids), std::move(arrow_maps)};
}

SubmonomialMatrix induced_arrow_matrix(const F1LinearMap& map, const Idyll& f) {
  SubmonomialMatrix out(map.source, map.target, f);
  for (int j = 0; j < map.source.size(); ++j)
    if (map.to[j] >= 0) out.set_entry(j, map.to[j], IdyllElement::one(f));
  return out;
}

std::vector<QuiverMatroid> enumerate_points(const F1Rep& rep, const RankVector& r,
                                            const Idyll& f, std::uint64_t budget) {
  rep.validate();
  if (!f.finite_carrier())
    fail(ErrorKind::InfiniteCarrier, "cannot enumerate points over " + f.name());
  if (r.size() != rep.sets.size())
    fail(ErrorKind::InvalidValue, "rank vector length does not match Q0");
  int nv = rep.quiver.vertex_count();
  for (int v = 0; v < nv; ++v)
    if (r[v] < 0 || r[v] > rep.sets[v].size())
      fail(ErrorKind::InvalidValue, "rank vector entry out of range at vertex " +
                                        rep.quiver.vertex(v));

  // Per-vertex catalogues, rebound to the representation's label sets.
  std::vector<std::vector<Matroid>> catalogue(nv);
  std::uint64_t tuple_count = 1;
  for (int v = 0; v < nv; ++v) {
    int n = rep.sets[v].size();
    // the K-catalogue scans 2^C(n,r) basis families
    if (binomial(n, r[v]) > 24)
      fail(ErrorKind::BudgetExceeded,
           "catalogue enumeration at vertex " + rep.quiver.vertex(v) + " exceeds 2^24 families");
    for (const Matroid& m : matroid_catalogue(f, n, r[v]))
      catalogue[v].push_back(m.rebound(rep.sets[v]));
    tuple_count *= std::max<std::uint64_t>(1, catalogue[v].size());
    if (tuple_count > budget)
      fail(ErrorKind::BudgetExceeded, "candidate tuple space exceeds the budget");
  }

  std::vector<SubmonomialMatrix> arrow_matrices;
  arrow_matrices.reserve(rep.quiver.arrow_count());
  for (const auto& m : rep.maps) arrow_matrices.push_back(induced_arrow_matrix(m, f));

  // Check arrows as early as the vertex order allows, cheapest first.
  std::vector<int> arrow_order(rep.quiver.arrow_count());
  std::iota(arrow_order.begin(), arrow_order.end(), 0);
  std::stable_sort(arrow_order.begin(), arrow_order.end(), [&](int a, int b) {
    const auto& A = rep.quiver.arrow(a);
    const auto& B = rep.quiver.arrow(b);
    std::uint64_t ca = catalogue[A.from].size() * catalogue[A.to].size();
    std::uint64_t cb = catalogue[B.from].size() * catalogue[B.to].size();
    return ca < cb;
  });
  std::vector<std::vector<int>> arrows_ready_at(nv);
  for (int a : arrow_order) {
    const auto& arrow = rep.quiver.arrow(a);
    arrows_ready_at[std::max(arrow.from, arrow.to)].push_back(a);
  }

  std::function<void(int, std::vector<int>&, std::vector<QuiverMatroid>&)> dfs =
      [&](int v, std::vector<int>& pick, std::vector<QuiverMatroid>& out) {
        if (v == nv) {
          std::vector<Matroid> ms;
          ms.reserve(nv);
          for (int u = 0; u < nv; ++u) ms.push_back(catalogue[u][pick[u]]);
          out.push_back(QuiverMatroid{rep.quiver, std::move(ms), arrow_matrices});
          return;
        }
        for (std::size_t i = 0; i < catalogue[v].size(); ++i) {
          pick[v] = static_cast<int>(i);
          bool ok = true;
          for (int a : arrows_ready_at[v]) {
            const auto& arrow = rep.quiver.arrow(a);
            if (!is_morphism_pluecker(arrow_matrices[a], catalogue[arrow.from][pick[arrow.from]],
                                      catalogue[arrow.to][pick[arrow.to]])) {
              ok = false;
              break;
            }
          }
          if (ok) dfs(v + 1, pick, out);
        }
      };

  std::vector<QuiverMatroid> points;
  if (nv == 0) return points;
  std::vector<std::vector<QuiverMatroid>> buckets(catalogue[0].size());
  parallel_for(catalogue[0].size(), [&](std::size_t i) {
    std::vector<int> pick(nv, 0);
    pick[0] = static_cast<int>(i);
    bool ok = true;
    for (int a : arrows_ready_at[0]) {
      const auto& arrow = rep.quiver.arrow(a);
      if (!is_morphism_pluecker(arrow_matrices[a], catalogue[arrow.from][pick[arrow.from]],
                                catalogue[arrow.to][pick[arrow.to]])) {
        ok = false;
        break;
      }
    }
    if (ok) dfs(1, pick, buckets[i]);
  });
  for (auto& b : buckets)
    for (auto& p : b) points.push_back(std::move(p));
  std::sort(points.begin(), points.end());
  return points;
}

namespace {

// The qr4 sum for one arrow, sorted source (r_s+1)-subset y and sorted
// target (r_t-1)-subset x; T_(0,x) = 0.
FormalSum qr4_sum(const PlueckerVector& nu, const PlueckerVector& mu, const F1LinearMap& map,
                  const Subset& y, const Subset& x) {
  FormalSum sum(nu.idyll());
  std::vector<int> tail;
  tail.reserve(mu.rank());
  for (std::size_t k = 0; k < y.size(); ++k) {
    IdyllElement left = nu.eval_subset(subset_erase_at(y, k));
    if (left.is_zero()) continue;
    int image = map.to[y[k]];
    if (image < 0) continue;
    tail.clear();
    tail.push_back(image);
    tail.insert(tail.end(), x.begin(), x.end());
    IdyllElement right = mu.eval_tuple(tail);
    if (right.is_zero()) continue;
    IdyllElement term = mul(left, right);
    if (k % 2 == 1) term = neg(term);
    sum.add(term);
  }
  return sum;
}

}  // namespace

bool check_qr_relations(const std::vector<PlueckerVector>& plueckers, const F1Rep& rep,
                        const RankVector& r) {
  rep.validate();
  if (plueckers.size() != rep.sets.size())
    fail(ErrorKind::InvalidValue, "one Pluecker vector per vertex required");
  for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
    const PlueckerVector& phi = plueckers[v];
    if (phi.ground() != rep.sets[v])
      fail(ErrorKind::InvalidValue, "candidate ground set does not match the representation");
    if (phi.rank() != r[v]) return false;
    // qr1 and qr2 hold structurally for PlueckerVector storage; qr3 is GP2
    // plus the nonzero requirement.
    if (phi.all_zero()) return false;
    try {
      gp_validate(phi);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::GP2Violation || e.kind() == ErrorKind::AllZero) return false;
      throw;
    }
  }
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    const PlueckerVector& nu = plueckers[arrow.from];
    const PlueckerVector& mu = plueckers[arrow.to];
    int ns = rep.sets[arrow.from].size();
    int nt = rep.sets[arrow.to].size();
    for (const Subset& y : subsets_of_size(ns, r[arrow.from] + 1))
      for (const Subset& x : subsets_of_size(nt, r[arrow.to] - 1))
        if (!qr4_sum(nu, mu, rep.maps[a], y, x).is_null()) return false;
  }
  return true;
}

std::vector<std::pair<std::string, QrRelation>> qr4_relations(const F1Rep& rep,
                                                              const RankVector& r) {
  rep.validate();
  std::vector<std::pair<std::string, QrRelation>> out;
  std::set<std::string> seen;
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    int ns = rep.sets[arrow.from].size();
    int nt = rep.sets[arrow.to].size();
    for (const Subset& y : subsets_of_size(ns, r[arrow.from] + 1)) {
      for (const Subset& x : subsets_of_size(nt, r[arrow.to] - 1)) {
        QrRelation rel;
        for (std::size_t k = 0; k < y.size(); ++k) {
          int image = rep.maps[a].to[y[k]];
          if (image < 0) continue;  // T_(0,x) = 0
          if (subset_contains(x, image)) continue;  // repeated index, qr1
          int sign = (k % 2 == 1) ? -1 : 1;
          Subset right = subset_insert(x, image);
          // sign of sorting (image, x) into `right`
          std::vector<int> tuple;
          tuple.push_back(image);
          tuple.insert(tuple.end(), x.begin(), x.end());
          if (sort_sign(tuple) < 0) sign = -sign;
          rel.push_back(QrMonomial{sign, arrow.from, subset_erase_at(y, k), arrow.to, right});
        }
        if (rel.empty()) continue;
        if (rel[0].sign < 0)
          for (auto& m : rel) m.sign = -m.sign;
        std::string key = qr_relation_to_string(rep, rel);
        if (seen.insert(key).second) out.emplace_back(arrow.name, std::move(rel));
      }
    }
  }
  return out;
}

std::string qr_relation_to_string(const F1Rep& rep, const QrRelation& rel) {
  std::ostringstream os;
  bool first = true;
  for (const auto& m : rel) {
    if (!first)
      os << (m.sign > 0 ? " + " : " - ");
    else if (m.sign < 0)
      os << "-";
    first = false;
    auto emit = [&](int v, const Subset& s) {
      os << "T";
      for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "[") << rep.element_name(v, s[i]);
      os << "]";
    };
    emit(m.left_vertex, m.left_subset);
    os << "*";
    emit(m.right_vertex, m.right_subset);
  }
  return os.str();
}

QuiverMatroid dual_qm(const QuiverMatroid& m) {
  std::vector<Matroid> duals;
  duals.reserve(m.vertex_matroids.size());
  for (const auto& mv : m.vertex_matroids) duals.push_back(mv.dual());
  std::vector<SubmonomialMatrix> transposed;
  transposed.reserve(m.arrow_maps.size());
  for (const auto& a : m.arrow_maps) transposed.push_back(a.transpose());
  return validate_qm(m.quiver.opposite(), std::move(duals), std::move(transposed));
}

namespace {

void require_subrep(const QuiverMatroid& m, const std::vector<Subset>& omega) {
  if (omega.size() != m.vertex_matroids.size())
    fail(ErrorKind::InvalidValue, "one subset per vertex required");
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& arrow = m.quiver.arrow(a);
    F1LinearMap under = m.arrow_maps[a].underlying_map();
    for (int j : omega[arrow.from]) {
      int i = under.to[j];
      if (i >= 0 && !subset_contains(omega[arrow.to], i))
        fail(ErrorKind::NotSubrepresentation,
             "subsets are not closed under arrow '" + arrow.name + "'");
    }
  }
}

}  // namespace

QuiverMatroid restrict_qm(const QuiverMatroid& m, const std::vector<Subset>& omega) {
  require_subrep(m, omega);
  std::vector<Matroid> ms;
  std::vector<SubmonomialMatrix> as;
  for (std::size_t v = 0; v < m.vertex_matroids.size(); ++v)
    ms.push_back(m.vertex_matroids[v].restricted(omega[v]));
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& arrow = m.quiver.arrow(a);
    as.push_back(restrict_morphism(m.arrow_maps[a], omega[arrow.from], omega[arrow.to]));
  }
  return validate_qm(m.quiver, std::move(ms), std::move(as));
}

QuiverMatroid contract_qm(const QuiverMatroid& m, const std::vector<Subset>& omega) {
  require_subrep(m, omega);
  std::vector<Matroid> ms;
  std::vector<SubmonomialMatrix> as;
  for (std::size_t v = 0; v < m.vertex_matroids.size(); ++v)
    ms.push_back(m.vertex_matroids[v].contracted(omega[v]));
  for (int a = 0; a < m.quiver.arrow_count(); ++a) {
    const auto& arrow = m.quiver.arrow(a);
    as.push_back(contract_morphism(m.arrow_maps[a], omega[arrow.from], omega[arrow.to]));
  }
  return validate_qm(m.quiver, std::move(ms), std::move(as));
}

F1Rep underlying_rep(const QuiverMatroid& m) {
  F1Rep out;
  out.quiver = m.quiver;
  for (const auto& mv : m.vertex_matroids) out.sets.push_back(mv.ground());
  for (const auto& a : m.arrow_maps) out.maps.push_back(a.underlying_map());
  out.validate();
  return out;
}

Matroid full_rank_matroid_functor(const GroundSet& nonzero_part) {
  int n = nonzero_part.size();
  PlueckerVector phi(nonzero_part, n, Idyll::krasner());
  Subset all(n);
  std::iota(all.begin(), all.end(), 0);
  phi.set(all, IdyllElement::one(Idyll::krasner()));
  return gp_validate(phi);
}

}  // namespace qmat
