#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmat/combinat.hpp"
#include "qmat/ground_set.hpp"
#include "qmat/idyll.hpp"

namespace qmat {

// A coordinate family X in F^E; absent entries are zero.
struct VectorF {
  GroundSet ground;
  Idyll idyll = Idyll::krasner();
  std::vector<IdyllElement> entries;  // size == ground.size()

  VectorF() = default;
  VectorF(GroundSet g, Idyll f);

  Subset support() const;
  bool is_zero() const;
  // Scales so the first (ground-order) nonzero entry is 1.
  VectorF normalized() const;
  std::string to_string() const;

  bool operator==(const VectorF& o) const;
  bool operator<(const VectorF& o) const;
};

FormalSum inner_product(const VectorF& x, const VectorF& y);
bool orthogonal(const VectorF& x, const VectorF& y);

// A normalized Grassmann-Pluecker function: values on sorted r-subsets, with
// evaluation on arbitrary tuples expanding signs on the fly. Only nonzero
// values are stored.
class PlueckerVector {
 public:
  PlueckerVector(GroundSet ground, int rank, Idyll idyll);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  const Idyll& idyll() const { return idyll_; }

  void set(const Subset& sorted_subset, const IdyllElement& value);
  IdyllElement eval_subset(const Subset& sorted_subset) const;
  // 0 on repeated entries, sign-adjusted stored value otherwise.
  IdyllElement eval_tuple(const std::vector<int>& tuple) const;

  const std::map<Subset, IdyllElement>& values() const { return values_; }
  std::vector<Subset> support_subsets() const;
  bool all_zero() const { return values_.empty(); }

  PlueckerVector normalized() const;
  bool is_normalized() const;

  std::string canonical_key() const;
  bool operator==(const PlueckerVector& o) const;

 private:
  GroundSet ground_;
  int rank_;
  Idyll idyll_;
  std::map<Subset, IdyllElement> values_;
};

// A matroid over an idyll: a GP2-validated, normalized Pluecker vector.
class Matroid {
 public:
  const PlueckerVector& pluecker() const { return phi_; }
  const GroundSet& ground() const { return phi_.ground(); }
  int rank() const { return phi_.rank(); }
  const Idyll& idyll() const { return phi_.idyll(); }

  // Supports of nonzero Pluecker values = bases of the underlying matroid.
  std::vector<Subset> bases() const { return phi_.support_subsets(); }
  std::vector<std::uint32_t> basis_masks() const;
  int rank_of_subset(const Subset& a) const;
  int rank_of_mask(std::uint32_t mask) const;

  Matroid underlying() const;  // push-forward along the unique map to K
  Matroid dual() const;
  Matroid contracted(const Subset& a) const;
  Matroid deleted(const Subset& a) const;
  Matroid restricted(const Subset& a) const;
  Matroid extended_with_loop(const std::string& label) const;

  std::vector<VectorF> circuits() const;
  std::vector<VectorF> cocircuits() const;
  std::vector<VectorF> vectors(std::uint64_t budget = kDefaultBudget) const;
  std::vector<VectorF> covectors(std::uint64_t budget = kDefaultBudget) const;
  bool is_vector(const VectorF& x) const;

  Matroid rebound(const GroundSet& ground) const;

  std::string canonical_key() const { return phi_.canonical_key(); }
  bool operator==(const Matroid& o) const { return phi_ == o.phi_; }
  bool operator!=(const Matroid& o) const { return !(*this == o); }
  bool operator<(const Matroid& o) const { return canonical_key() < o.canonical_key(); }

  static constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

  friend Matroid gp_validate(const PlueckerVector& phi);
  friend Matroid push_forward_matroid(const IdyllMorphism& f, const Matroid& m);

 private:
  explicit Matroid(PlueckerVector phi) : phi_(std::move(phi)) {}
  PlueckerVector phi_;
};

// Checks (GP2) over sorted subset pairs and returns the matroid, or throws
// GP2Violation with the witness pair / AllZero.
Matroid gp_validate(const PlueckerVector& phi);

// The indicator Pluecker vector of a family of r-subsets over K, validated.
Matroid from_bases_K(const GroundSet& ground, int rank,
                     const std::vector<Subset>& bases);

Matroid push_forward_matroid(const IdyllMorphism& f, const Matroid& m);

// Every rank-r F-matroid on a numbered n-element ground set, in canonical
// order. Memoized by (idyll, n, r). K uses basis-exchange enumeration; other
// finite idylls assign unit coefficients on each K-catalogue family modulo
// global scaling, GP2-checked.
const std::vector<Matroid>& matroid_catalogue(const Idyll& f, int n, int r);

// All vectors X in F^E (finite carriers only), in odometer order.
std::vector<VectorF> enumerate_space(const Idyll& f, const GroundSet& ground,
                                     std::uint64_t budget = Matroid::kDefaultBudget);

}  // namespace qmat
