#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmat/quiver_matroid.hpp"

namespace qmat {

// The specialization order on an enumerated set of K-points: x <= y iff x is
// in the closure of y, i.e. every per-vertex basis set of x is contained in
// that of y.
struct SpecializationPoset {
  std::vector<QuiverMatroid> points;
  std::vector<std::vector<bool>> leq;  // leq[i][j] <=> points[i] <= points[j]

  std::vector<std::size_t> minimal_indices() const;
};

SpecializationPoset specialization_order(std::vector<QuiverMatroid> points);

// Closed K-points of Gr_r(rep): the minimal elements of the specialization
// order on enumerate_points(rep, r, K).
std::vector<QuiverMatroid> tits_space(const F1Rep& rep, const RankVector& r,
                                      std::uint64_t budget = Matroid::kDefaultBudget);

// The initial matroid min_d(M): bases of minimal total weight.
Matroid initial_matroid(const Matroid& m, const std::vector<long long>& weights);

// Per-vertex initial matroids for a nice grading; throws NotNiceGrading.
QuiverMatroid initial_qm(const QuiverMatroid& m, const Grading& grading, const F1Rep& rep);

// A quiver matroid all of whose vertex matroids have a unique basis.
bool is_coordinate_qm(const QuiverMatroid& m);

// The bijection between subrepresentations of dimension r* and coordinate
// points of rank r: Omega -> Co(Omega^c).
QuiverMatroid coordinate_point_of_subrep(const F1Rep& rep, const std::vector<Subset>& omega);
std::vector<Subset> subrep_of_coordinate_point(const QuiverMatroid& m);

enum class EulerCertificate { Tree, PrimitiveCycle, VerifiedSequence, None };

std::string certificate_name(EulerCertificate c);

struct EulerReport {
  long long tits_count = 0;
  long long subrep_count = 0;
  long long coordinate_count = 0;
  EulerCertificate certificate = EulerCertificate::None;
  std::optional<long long> euler;
};

// Counts Tits points and dimension-r* subrepresentations; claims the Euler
// characteristic only under a certificate (tree / primitive cycle coefficient
// quiver, or a verified nice distinguishing sequence). A supplied sequence
// that fails the checks raises InvalidSequence.
EulerReport euler_via_tits(const F1Rep& rep, const RankVector& r,
                           const std::optional<std::vector<Grading>>& sequence = std::nullopt,
                           std::uint64_t budget = Matroid::kDefaultBudget);

}  // namespace qmat
