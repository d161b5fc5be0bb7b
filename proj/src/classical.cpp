#include "qmat/classical.hpp"

#include <algorithm>

namespace qmat {

ClassicalMatroid::ClassicalMatroid(GroundSet ground, std::vector<std::uint32_t> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  // subset tables are indexed by mask
  if (ground_.size() > 16)
    fail(ErrorKind::BudgetExceeded, "classical matroid calculus is limited to 16 elements");
  if (bases_.empty()) fail(ErrorKind::InvalidValue, "matroids have at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = __builtin_popcount(bases_[0]);
  for (std::uint32_t b : bases_)
    if (__builtin_popcount(b) != rank_)
      fail(ErrorKind::InvalidValue, "bases must share one cardinality");
  // Exchange is certified by round-tripping through GP validation.
  to_k_matroid();
}

ClassicalMatroid ClassicalMatroid::from_matroid(const Matroid& m) {
  return ClassicalMatroid(m.ground(), m.basis_masks());
}

Matroid ClassicalMatroid::to_k_matroid() const {
  std::vector<Subset> bs;
  bs.reserve(bases_.size());
  for (std::uint32_t b : bases_) bs.push_back(mask_to_subset(b));
  return from_bases_K(ground_, rank_, bs);
}

int ClassicalMatroid::rank_of(std::uint32_t subset) const {
  int best = 0;
  for (std::uint32_t b : bases_) {
    int c = __builtin_popcount(b & subset);
    if (c > best) best = c;
  }
  return best;
}

std::uint32_t ClassicalMatroid::closure_of(std::uint32_t subset) const {
  int r = rank_of(subset);
  std::uint32_t cl = subset;
  for (int e = 0; e < size(); ++e) {
    if (cl & (1u << e)) continue;
    if (rank_of(subset | (1u << e)) == r) cl |= (1u << e);
  }
  return cl;
}

const std::vector<std::uint32_t>& ClassicalMatroid::closure_table() const {
  if (!closures_) {
    std::vector<std::uint32_t> table(1u << size());
    for (std::uint32_t s = 0; s < (1u << size()); ++s) table[s] = closure_of(s);
    closures_ = std::move(table);
  }
  return *closures_;
}

std::vector<std::uint32_t> ClassicalMatroid::flats() const {
  if (!flats_) {
    std::vector<std::uint32_t> out;
    const auto& table = closure_table();
    for (std::uint32_t s = 0; s < (1u << size()); ++s)
      if (table[s] == s) out.push_back(s);
    flats_ = std::move(out);
  }
  return *flats_;
}

std::vector<std::uint32_t> ClassicalMatroid::circuit_masks() const {
  if (circuits_) return *circuits_;
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1u << size()); ++s) {
    if (rank_of(s) >= __builtin_popcount(s)) continue;  // independent
    bool minimal = true;
    std::uint32_t rest = s;
    while (rest) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      std::uint32_t sub = s ^ bit;
      if (rank_of(sub) < __builtin_popcount(sub)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  circuits_ = out;
  return out;
}

ClassicalMatroid ClassicalMatroid::dual() const {
  std::vector<std::uint32_t> dbases;
  std::uint32_t full = (size() == 32) ? ~0u : ((1u << size()) - 1);
  dbases.reserve(bases_.size());
  for (std::uint32_t b : bases_) dbases.push_back(full & ~b);
  return ClassicalMatroid(ground_, std::move(dbases));
}

std::vector<std::uint32_t> ClassicalMatroid::cocircuit_masks() const {
  if (cocircuits_) return *cocircuits_;
  cocircuits_ = dual().circuit_masks();
  return *cocircuits_;
}

bool ClassicalMatroid::is_union_of_circuits(std::uint32_t subset) const {
  const auto circuits = circuit_masks();
  std::uint32_t rest = subset;
  while (rest) {
    std::uint32_t bit = rest & (~rest + 1);
    bool covered = false;
    for (std::uint32_t c : circuits) {
      if ((c & bit) && (c & ~subset) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
    rest ^= bit;
  }
  return true;
}

bool ClassicalMatroid::is_covector_set(std::uint32_t subset) const {
  const auto cocircuits = cocircuit_masks();
  std::uint32_t rest = subset;
  while (rest) {
    std::uint32_t bit = rest & (~rest + 1);
    bool covered = false;
    for (std::uint32_t c : cocircuits) {
      if ((c & bit) && (c & ~subset) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
    rest ^= bit;
  }
  return true;
}

std::uint32_t PointedMap::image_mask(std::uint32_t subset) const {
  std::uint32_t out = 0;
  for (int s = 0; s < static_cast<int>(to.size()); ++s)
    if ((subset & (1u << s)) && to[s] >= 0) out |= (1u << to[s]);
  return out;
}

std::uint32_t PointedMap::preimage_mask(std::uint32_t subset) const {
  std::uint32_t out = 0;
  for (int s = 0; s < static_cast<int>(to.size()); ++s)
    if (to[s] >= 0 && (subset & (1u << to[s]))) out |= (1u << s);
  return out;
}

bool PointedMap::hits_zero(std::uint32_t subset) const {
  for (int s = 0; s < static_cast<int>(to.size()); ++s)
    if ((subset & (1u << s)) && to[s] < 0) return true;
  return false;
}

PointedMap PointedMap::adjoint() const {
  if (!is_f1_linear(*this))
    fail(ErrorKind::NotF1Linear, "adjoint requires an F1-linear map");
  PointedMap out{target, source, std::vector<int>(target.size(), -1)};
  for (int s = 0; s < static_cast<int>(to.size()); ++s)
    if (to[s] >= 0) out.to[to[s]] = s;
  return out;
}

bool is_f1_linear(const PointedMap& sigma) {
  std::vector<int> hits(sigma.target.size(), 0);
  for (int v : sigma.to)
    if (v >= 0 && ++hits[v] > 1) return false;
  return true;
}

namespace {

// Flats of M~ = M + loop at 0 are exactly (flats of M) u {0}; a preimage
// sigma^{-1}(F u {0}) always contains 0, so the pulled-back condition reads:
// {s : sigma(s) in F or sigma(s) = 0} is a flat of N.
bool strong_via_flats(const PointedMap& sigma, const ClassicalMatroid& n,
                      const ClassicalMatroid& m) {
  std::uint32_t zero_fiber = 0;
  for (int s = 0; s < static_cast<int>(sigma.to.size()); ++s)
    if (sigma.to[s] < 0) zero_fiber |= (1u << s);
  const auto& cln_table = n.closure_table();
  for (std::uint32_t f : m.flats()) {
    std::uint32_t pre = sigma.preimage_mask(f) | zero_fiber;
    if (cln_table[pre] != pre) return false;
  }
  return true;
}

bool strong_via_closure(const PointedMap& sigma, const ClassicalMatroid& n,
                        const ClassicalMatroid& m) {
  const auto& cln_table = n.closure_table();
  const auto& clm_table = m.closure_table();
  for (std::uint32_t a = 0; a < (1u << n.size()); ++a) {
    std::uint32_t img_cl = sigma.image_mask(cln_table[a]);
    // cl_{M~}(sigma(A)) = cl_M(sigma(A) n T) u {0}; the 0 part absorbs any
    // source element mapped to the base point.
    std::uint32_t cl_img = clm_table[sigma.image_mask(a)];
    if ((img_cl & ~cl_img) != 0) return false;
  }
  return true;
}

bool strong_via_cocircuits(const PointedMap& sigma, const ClassicalMatroid& n,
                           const ClassicalMatroid& m) {
  for (std::uint32_t z : m.cocircuit_masks()) {
    if (!n.is_covector_set(sigma.preimage_mask(z))) return false;
  }
  return true;
}

}  // namespace

bool is_strong_map(const PointedMap& sigma, const ClassicalMatroid& n,
                   const ClassicalMatroid& m, StrongMapCriterion criterion) {
  if (static_cast<int>(sigma.to.size()) != n.size())
    fail(ErrorKind::InvalidValue, "pointed map domain does not match N");
  for (int v : sigma.to)
    if (v < -1 || v >= m.size())
      fail(ErrorKind::InvalidValue, "pointed map image out of range");
  switch (criterion) {
    case StrongMapCriterion::CocircuitPullback:
      return strong_via_cocircuits(sigma, n, m);
    case StrongMapCriterion::FlatPullback:
      return strong_via_flats(sigma, n, m);
    case StrongMapCriterion::Closure:
      return strong_via_closure(sigma, n, m);
  }
  return false;
}

ClassicalMatroid preimage_classical(const PointedMap& sigma, const ClassicalMatroid& m) {
  int ns = static_cast<int>(sigma.to.size());
  // rk(A) = rk_{M~}(sigma(A)) = rk_M(sigma(A) n T); the base point is a loop.
  int d = m.rank_of(sigma.image_mask(ns == 32 ? ~0u : ((1u << ns) - 1)));
  std::vector<std::uint32_t> bases;
  for (const Subset& a : subsets_of_size(ns, d)) {
    std::uint32_t mask = subset_to_mask(a);
    bool independent = true;
    // A is independent iff rk(sigma(A)) = |A|, which forces sigma to be
    // injective on A and to avoid the base point.
    if (sigma.hits_zero(mask) ||
        m.rank_of(sigma.image_mask(mask)) != static_cast<int>(a.size()))
      independent = false;
    if (independent) bases.push_back(mask);
  }
  if (bases.empty()) bases.push_back(0);  // rank-0 matroid
  return ClassicalMatroid(sigma.source, std::move(bases));
}

bool is_quotient_classical(const ClassicalMatroid& n, const ClassicalMatroid& m) {
  if (n.ground() != m.ground())
    fail(ErrorKind::InvalidValue, "quotient test needs a common ground set");
  PointedMap id{n.ground(), m.ground(), {}};
  id.to.resize(n.size());
  for (int i = 0; i < n.size(); ++i) id.to[i] = i;
  return is_strong_map(id, n, m);
}

PointedMap strong_map_of_k_morphism(const std::vector<int>& underlying_to,
                                    const GroundSet& source, const GroundSet& target) {
  PointedMap out{source, target, underlying_to};
  return out;
}

}  // namespace qmat
