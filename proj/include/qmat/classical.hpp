#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmat/ground_set.hpp"
#include "qmat/pluecker.hpp"

namespace qmat {

// A classical matroid given by its bases, as bitmasks over the ground set.
class ClassicalMatroid {
 public:
  ClassicalMatroid(GroundSet ground, std::vector<std::uint32_t> bases);

  static ClassicalMatroid from_matroid(const Matroid& m);
  Matroid to_k_matroid() const;

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }

  int rank_of(std::uint32_t subset) const;
  std::uint32_t closure_of(std::uint32_t subset) const;
  bool is_flat(std::uint32_t subset) const { return closure_of(subset) == subset; }
  std::vector<std::uint32_t> flats() const;
  // closure of every subset, indexed by mask; cached
  const std::vector<std::uint32_t>& closure_table() const;

  // Minimal dependent sets / cocircuits, as masks.
  std::vector<std::uint32_t> circuit_masks() const;
  std::vector<std::uint32_t> cocircuit_masks() const;
  ClassicalMatroid dual() const;

  // Is `subset` a union of circuits?
  bool is_union_of_circuits(std::uint32_t subset) const;
  // Covector = union of cocircuits.
  bool is_covector_set(std::uint32_t subset) const;

  bool operator==(const ClassicalMatroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint32_t> bases_;  // sorted
  int rank_;
  mutable std::optional<std::vector<std::uint32_t>> circuits_;
  mutable std::optional<std::vector<std::uint32_t>> cocircuits_;
  mutable std::optional<std::vector<std::uint32_t>> flats_;
  mutable std::optional<std::vector<std::uint32_t>> closures_;
};

// A base-point preserving map sigma: S u {0} -> T u {0}, stored as the image
// index per source element with -1 encoding the base point.
struct PointedMap {
  GroundSet source;
  GroundSet target;
  std::vector<int> to;  // size |S|; -1 = 0

  int apply(int s) const { return s < 0 ? -1 : to.at(s); }
  std::uint32_t image_mask(std::uint32_t subset) const;
  std::uint32_t preimage_mask(std::uint32_t subset) const;
  bool hits_zero(std::uint32_t subset) const;  // does sigma(subset) contain 0?
  PointedMap adjoint() const;                   // only for F1-linear maps
};

bool is_f1_linear(const PointedMap& sigma);

enum class StrongMapCriterion { CocircuitPullback, FlatPullback, Closure };

// sigma: N -> M is a strong map (default: cocircuit-pullback test, the
// cheapest of the three equivalent criteria).
bool is_strong_map(const PointedMap& sigma, const ClassicalMatroid& n,
                   const ClassicalMatroid& m,
                   StrongMapCriterion criterion = StrongMapCriterion::CocircuitPullback);

// Pre-image matroid: rank function A -> rk_{M~}(sigma(A)).
ClassicalMatroid preimage_classical(const PointedMap& sigma, const ClassicalMatroid& m);

// M is a quotient of N (identity strong map N -> M); same ground set.
bool is_quotient_classical(const ClassicalMatroid& n, const ClassicalMatroid& m);

// The K-morphism <-> F1-linear strong map bijection. The forward direction
// extracts the underlying pointed map of a K-morphism (declared here to keep
// the classical module self-contained; the matrix side lives in morphism.hpp).
PointedMap strong_map_of_k_morphism(const std::vector<int>& underlying_to,
                                    const GroundSet& source, const GroundSet& target);

}  // namespace qmat
