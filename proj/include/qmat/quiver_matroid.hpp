#pragma once

#include <string>
#include <vector>

#include "qmat/morphism.hpp"
#include "qmat/quiver.hpp"

namespace qmat {

// A quiver F-matroid: one F-matroid per vertex, one morphism per arrow.
struct QuiverMatroid {
  Quiver quiver;
  std::vector<Matroid> vertex_matroids;
  std::vector<SubmonomialMatrix> arrow_maps;

  const Idyll& idyll() const { return vertex_matroids.at(0).idyll(); }
  RankVector rank_vector() const;
  std::string canonical_key() const;
  bool operator==(const QuiverMatroid& o) const;
  bool operator<(const QuiverMatroid& o) const { return canonical_key() < o.canonical_key(); }
};

// Checks vertex matroids against the arrow morphism condition (criterion (3));
// reports the offending arrow and witness on failure.
QuiverMatroid validate_qm(const Quiver& quiver, std::vector<Matroid> vertex_matroids,
                          std::vector<SubmonomialMatrix> arrow_maps);

// The 0/1 submonomial matrix over F induced by an F1-linear map.
SubmonomialMatrix induced_arrow_matrix(const F1LinearMap& map, const Idyll& f);

// F-rational points of the quiver Grassmannian: all (Q,F)-matroids with the
// given rank vector, underlying representation `rep`, and induced arrow
// matrices. Deterministic canonical order.
std::vector<QuiverMatroid> enumerate_points(const F1Rep& rep, const RankVector& r,
                                            const Idyll& f,
                                            std::uint64_t budget = Matroid::kDefaultBudget);

// qr1-qr3 per vertex (the GP axioms) and qr4 per arrow, for a candidate
// tuple of Pluecker vectors against the representation.
bool check_qr_relations(const std::vector<PlueckerVector>& plueckers, const F1Rep& rep,
                        const RankVector& r);

// One qr4 generator: a signed pair of (vertex, subset) monomials.
struct QrMonomial {
  int sign;                // +1 / -1
  int left_vertex;         // s(alpha)
  Subset left_subset;      // r_s-subset
  int right_vertex;        // t(alpha)
  Subset right_subset;     // r_t-subset
};
using QrRelation = std::vector<QrMonomial>;

// All nonzero qr4 relations per arrow, canonically normalized (first
// monomial positive, subsets sorted), deduplicated up to global sign.
std::vector<std::pair<std::string, QrRelation>> qr4_relations(const F1Rep& rep,
                                                              const RankVector& r);
std::string qr_relation_to_string(const F1Rep& rep, const QrRelation& rel);

QuiverMatroid dual_qm(const QuiverMatroid& m);

// Minors along a subrepresentation of the underlying representation, given
// as per-vertex sorted index subsets.
QuiverMatroid restrict_qm(const QuiverMatroid& m, const std::vector<Subset>& omega);
QuiverMatroid contract_qm(const QuiverMatroid& m, const std::vector<Subset>& omega);

F1Rep underlying_rep(const QuiverMatroid& m);

// The rank-n K-matroid of a pointed set (nonzero part given as a ground set).
Matroid full_rank_matroid_functor(const GroundSet& nonzero_part);

}  // namespace qmat
