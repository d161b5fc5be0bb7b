#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmat/ground_set.hpp"
#include "qmat/idyll.hpp"
#include "qmat/pluecker.hpp"

namespace qmat {

// The underlying F1-linear map of a submonomial matrix: a base-point
// preserving map S u {0} -> T u {0} with fibers over nonzero targets of size
// at most one. -1 encodes the base point.
struct F1LinearMap {
  GroundSet source;
  GroundSet target;
  std::vector<int> to;  // size |S|; -1 = 0

  int apply(int source_index) const { return source_index < 0 ? -1 : to.at(source_index); }
  F1LinearMap adjoint() const;
  bool operator==(const F1LinearMap& o) const {
    return source == o.source && target == o.target && to == o.to;
  }
};

void validate_f1_linear(const F1LinearMap& f);

// A T x S matrix with at most one nonzero entry per row and per column,
// stored as the partial injection source -> target plus coefficients.
class SubmonomialMatrix {
 public:
  SubmonomialMatrix(GroundSet source, GroundSet target, Idyll idyll);

  static SubmonomialMatrix identity(const GroundSet& ground, const Idyll& idyll);
  static SubmonomialMatrix zero(const GroundSet& source, const GroundSet& target,
                                const Idyll& idyll);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const Idyll& idyll() const { return idyll_; }

  // Sets Phi_{target_index, source_index} = coeff (nonzero).
  void set_entry(int source_index, int target_index, const IdyllElement& coeff);

  IdyllElement entry(int target_index, int source_index) const;
  // Phi_s: the unique nonzero coefficient in column s, or zero.
  const IdyllElement& coeff_at_source(int source_index) const { return coeff_[source_index]; }
  int target_of_source(int source_index) const { return to_[source_index]; }

  F1LinearMap underlying_map() const;

  VectorF apply(const VectorF& x) const;
  SubmonomialMatrix transpose() const;
  SubmonomialMatrix pushed_forward(const IdyllMorphism& f) const;

  // Submatrix indexed by B x A; requires the underlying image condition
  // underlying(A u {0}) <= B u {0}.
  SubmonomialMatrix submatrix(const Subset& a, const Subset& b) const;

  std::string canonical_key() const;
  bool operator==(const SubmonomialMatrix& o) const;

 private:
  GroundSet source_;
  GroundSet target_;
  Idyll idyll_;
  std::vector<int> to_;
  std::vector<IdyllElement> coeff_;
  std::vector<int> from_;  // target -> source or -1
};

SubmonomialMatrix compose(const SubmonomialMatrix& psi, const SubmonomialMatrix& phi);

}  // namespace qmat
