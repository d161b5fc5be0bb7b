#include "qmat/tits.hpp"

#include <algorithm>
#include <limits>

#include "qmat/parallel.hpp"

namespace qmat {

namespace {

bool masks_contained(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::size_t> SpecializationPoset::minimal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && leq[j][i]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

SpecializationPoset specialization_order(std::vector<QuiverMatroid> points) {
  SpecializationPoset poset;
  poset.points = std::move(points);
  std::size_t n = poset.points.size();
  // sorted per-vertex basis masks, computed once per point
  std::vector<std::vector<std::vector<std::uint32_t>>> masks(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& mv : poset.points[i].vertex_matroids) {
      std::vector<std::uint32_t> b = mv.basis_masks();
      std::sort(b.begin(), b.end());
      masks[i].push_back(std::move(b));
    }
  }
  poset.leq.assign(n, std::vector<bool>(n, false));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t v = 0; v < masks[i].size(); ++v) {
        if (!masks_contained(masks[i][v], masks[j][v])) {
          le = false;
          break;
        }
      }
      poset.leq[i][j] = le;
    }
  });
  return poset;
}

std::vector<QuiverMatroid> tits_space(const F1Rep& rep, const RankVector& r,
                                      std::uint64_t budget) {
  SpecializationPoset poset =
      specialization_order(enumerate_points(rep, r, Idyll::krasner(), budget));
  std::vector<QuiverMatroid> out;
  for (std::size_t i : poset.minimal_indices()) out.push_back(poset.points[i]);
  return out;
}

Matroid initial_matroid(const Matroid& m, const std::vector<long long>& weights) {
  if (m.idyll() != Idyll::krasner())
    fail(ErrorKind::InvalidValue, "initial matroids are defined for K-matroids");
  if (static_cast<int>(weights.size()) != m.ground().size())
    fail(ErrorKind::InvalidValue, "one weight per ground element required");
  long long best = std::numeric_limits<long long>::max();
  std::vector<Subset> minimizers;
  for (const Subset& b : m.bases()) {
    long long w = 0;
    for (int e : b) w += weights[e];
    if (w < best) {
      best = w;
      minimizers.clear();
    }
    if (w == best) minimizers.push_back(b);
  }
  // exchange is re-verified by GP validation inside from_bases_K
  return from_bases_K(m.ground(), m.rank(), minimizers);
}

QuiverMatroid initial_qm(const QuiverMatroid& m, const Grading& grading, const F1Rep& rep) {
  if (!is_nice_grading(grading, rep))
    fail(ErrorKind::NotNiceGrading, "the grading is not nice for this representation");
  std::vector<Matroid> mins;
  mins.reserve(m.vertex_matroids.size());
  for (std::size_t v = 0; v < m.vertex_matroids.size(); ++v)
    mins.push_back(initial_matroid(m.vertex_matroids[v], grading.values[v]));
  return validate_qm(m.quiver, std::move(mins), m.arrow_maps);
}

bool is_coordinate_qm(const QuiverMatroid& m) {
  for (const auto& mv : m.vertex_matroids)
    if (mv.bases().size() != 1) return false;
  return true;
}

QuiverMatroid coordinate_point_of_subrep(const F1Rep& rep, const std::vector<Subset>& omega) {
  rep.validate();
  if (omega.size() != rep.sets.size())
    fail(ErrorKind::InvalidValue, "one subset per vertex required");
  std::vector<Matroid> ms;
  for (std::size_t v = 0; v < rep.sets.size(); ++v) {
    Subset basis = complement_subset(omega[v], rep.sets[v].size());
    ms.push_back(from_bases_K(rep.sets[v], static_cast<int>(basis.size()), {basis}));
  }
  std::vector<SubmonomialMatrix> as;
  for (const auto& map : rep.maps) as.push_back(induced_arrow_matrix(map, Idyll::krasner()));
  return validate_qm(rep.quiver, std::move(ms), std::move(as));
}

std::vector<Subset> subrep_of_coordinate_point(const QuiverMatroid& m) {
  if (!is_coordinate_qm(m))
    fail(ErrorKind::InvalidValue, "not a coordinate quiver matroid");
  std::vector<Subset> omega;
  for (const auto& mv : m.vertex_matroids)
    omega.push_back(complement_subset(mv.bases().front(), mv.ground().size()));
  return omega;
}

std::string certificate_name(EulerCertificate c) {
  switch (c) {
    case EulerCertificate::Tree: return "Tree";
    case EulerCertificate::PrimitiveCycle: return "PrimitiveCycle";
    case EulerCertificate::VerifiedSequence: return "VerifiedSequence";
    case EulerCertificate::None: return "None";
  }
  return "?";
}

EulerReport euler_via_tits(const F1Rep& rep, const RankVector& r,
                           const std::optional<std::vector<Grading>>& sequence,
                           std::uint64_t budget) {
  rep.validate();
  EulerReport report;

  SpecializationPoset poset =
      specialization_order(enumerate_points(rep, r, Idyll::krasner(), budget));
  report.tits_count = static_cast<long long>(poset.minimal_indices().size());
  report.subrep_count =
      static_cast<long long>(subrepresentations(rep, complement_dim(rep, r)).size());
  for (const auto& p : poset.points)
    if (is_coordinate_qm(p)) ++report.coordinate_count;

  if (sequence) {
    if (!is_nice_sequence(*sequence, rep) || !distinguishes(*sequence, rep))
      fail(ErrorKind::InvalidSequence,
           "supplied gradings are not a nice distinguishing sequence");
    report.certificate = EulerCertificate::VerifiedSequence;
  } else {
    Quiver gamma = coefficient_quiver(rep);
    if (is_tree(gamma)) {
      report.certificate = EulerCertificate::Tree;
    } else if (is_primitive_cycle(gamma, rep)) {
      report.certificate = EulerCertificate::PrimitiveCycle;
    } else {
      try {
        find_nice_sequence(rep);
        report.certificate = EulerCertificate::VerifiedSequence;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotFound) throw;
        report.certificate = EulerCertificate::None;
      }
    }
  }

  if (report.certificate != EulerCertificate::None) {
    if (report.tits_count != report.subrep_count ||
        report.tits_count != report.coordinate_count)
      fail(ErrorKind::InvalidValue,
           "certificate holds but Tits, subrepresentation and coordinate counts disagree");
    report.euler = report.tits_count;
  }
  return report;
}

}  // namespace qmat
