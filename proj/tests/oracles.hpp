// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qmat/morphism.hpp"
#include "qmat/pluecker.hpp"

namespace qmat::oracle {

// (GP2) quantified over raw tuples, no subset-pair reduction.
inline bool gp2_holds_raw_tuples(const PlueckerVector& phi) {
  int n = phi.ground().size();
  int r = phi.rank();
  if (r == 0) return !phi.all_zero();
  std::vector<int> y(r + 1, 0), x(r - 1, 0);
  auto next = [&](std::vector<int>& t) {
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) return false;
    ++t[i];
    return true;
  };
  do {
    std::fill(x.begin(), x.end(), 0);
    do {
      FormalSum sum(phi.idyll());
      for (int k = 0; k <= r; ++k) {
        std::vector<int> yk;
        for (int i = 0; i <= r; ++i)
          if (i != k) yk.push_back(y[i]);
        IdyllElement left = phi.eval_tuple(yk);
        if (left.is_zero()) continue;
        std::vector<int> second{y[k]};
        second.insert(second.end(), x.begin(), x.end());
        IdyllElement right = phi.eval_tuple(second);
        if (right.is_zero()) continue;
        IdyllElement term = mul(left, right);
        if (k % 2 == 1) term = neg(term);
        sum.add(term);
      }
      if (!sum.is_null()) return false;
    } while (next(x));
  } while (next(y));
  return true;
}

// Rank of a subset from an explicit basis family.
inline int rank_from_bases(const std::vector<std::uint32_t>& bases, std::uint32_t a) {
  int best = 0;
  for (std::uint32_t b : bases) best = std::max(best, __builtin_popcount(b & a));
  return best;
}

// Bases of the contraction M/A computed from the rank function alone.
inline std::vector<std::uint32_t> contraction_bases(const std::vector<std::uint32_t>& bases,
                                                    int n, std::uint32_t a) {
  std::uint32_t full = (1u << n) - 1;
  int r = rank_from_bases(bases, full);
  int ra = rank_from_bases(bases, a);
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b <= full; ++b) {
    if (b & a) continue;
    if (__builtin_popcount(b) != r - ra) continue;
    if (rank_from_bases(bases, b | a) == r) out.push_back(b);
  }
  return out;
}

// Bases of the deletion M \ A (= restriction to E - A).
inline std::vector<std::uint32_t> deletion_bases(const std::vector<std::uint32_t>& bases,
                                                 int n, std::uint32_t a) {
  std::uint32_t full = (1u << n) - 1;
  std::uint32_t keep = full & ~a;
  int k = rank_from_bases(bases, keep);
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b <= full; ++b) {
    if (b & ~keep) continue;
    if (__builtin_popcount(b) != k) continue;
    if (rank_from_bases(bases, b) == k) out.push_back(b);
  }
  return out;
}

// Minimal dependent sets from the rank function.
inline std::vector<std::uint32_t> circuits_from_bases(const std::vector<std::uint32_t>& bases,
                                                      int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (rank_from_bases(bases, s) >= __builtin_popcount(s)) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      if (!(s & (1u << e))) continue;
      std::uint32_t sub = s ^ (1u << e);
      if (rank_from_bases(bases, sub) < __builtin_popcount(sub)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Classical quotient criterion via rank functions: M is a quotient of N iff
// rk_M(B) - rk_M(A) <= rk_N(B) - rk_N(A) for all A <= B.
inline bool quotient_by_rank_functions(const std::vector<std::uint32_t>& n_bases,
                                       const std::vector<std::uint32_t>& m_bases, int n) {
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      int dm = rank_from_bases(m_bases, b) - rank_from_bases(m_bases, a);
      int dn = rank_from_bases(n_bases, b) - rank_from_bases(n_bases, a);
      if (dm > dn) return false;
      if (a == 0) break;
    }
  }
  return true;
}

// Route B for the K-catalogue: filter every indicator family through GP
// validation, with no exchange-axiom shortcut.
inline std::vector<Matroid> k_matroids_by_gp_filter(int n, int r) {
  std::vector<Matroid> out;
  GroundSet g = GroundSet::numbered(n);
  std::vector<Subset> rsets = subsets_of_size(n, r);
  for (std::uint64_t fam = 1; fam < (std::uint64_t(1) << rsets.size()); ++fam) {
    PlueckerVector phi(g, r, Idyll::krasner());
    for (std::size_t i = 0; i < rsets.size(); ++i)
      if (fam & (std::uint64_t(1) << i)) phi.set(rsets[i], IdyllElement::one(Idyll::krasner()));
    try {
      out.push_back(gp_validate(phi));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GP2Violation) throw;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dense product of two submonomial matrices, entry by entry.
inline bool dense_product_matches(const SubmonomialMatrix& psi, const SubmonomialMatrix& phi,
                                  const SubmonomialMatrix& product) {
  for (int w = 0; w < psi.target().size(); ++w) {
    for (int s = 0; s < phi.source().size(); ++s) {
      FormalSum acc(phi.idyll());
      for (int t = 0; t < phi.target().size(); ++t) {
        IdyllElement term = mul(psi.entry(w, t), phi.entry(t, s));
        if (!term.is_zero()) acc.add(term);
      }
      IdyllElement expect = acc.size() == 0 ? IdyllElement::zero(phi.idyll()) : acc.terms()[0];
      if (acc.size() > 1) return false;  // not submonomial-compatible
      if (!(product.entry(w, s) == expect)) return false;
    }
  }
  return true;
}

// Deterministic RNG for all randomized suites.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline int rand_int(int lo, int hi) {  // inclusive
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

// A random valid K-matroid: random pick from the catalogue for small n.
inline Matroid random_k_matroid(int n) {
  int r = rand_int(0, n);
  const auto& cat = matroid_catalogue(Idyll::krasner(), n, r);
  return cat[rand_int(0, static_cast<int>(cat.size()) - 1)];
}

// A random submonomial matrix between numbered ground sets.
inline SubmonomialMatrix random_submonomial(const GroundSet& source, const GroundSet& target,
                                            const Idyll& f) {
  SubmonomialMatrix phi(source, target, f);
  std::vector<int> targets(target.size());
  for (int i = 0; i < target.size(); ++i) targets[i] = i;
  std::shuffle(targets.begin(), targets.end(), rng());
  std::vector<IdyllElement> units = units_of(f);
  int next = 0;
  for (int s = 0; s < source.size(); ++s) {
    if (next >= target.size() || rand_int(0, 2) == 0) continue;  // leave column empty
    phi.set_entry(s, targets[next++], units[rand_int(0, static_cast<int>(units.size()) - 1)]);
  }
  return phi;
}

}  // namespace qmat::oracle
