#include "qmat/morphism.hpp"

#include <algorithm>
#include <set>

namespace qmat {

namespace {

void check_shapes(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m) {
  if (phi.source() != n.ground())
    fail(ErrorKind::InvalidValue, "matrix source does not match N's ground set");
  if (phi.target() != m.ground())
    fail(ErrorKind::InvalidValue, "matrix target does not match M's ground set");
  if (phi.idyll() != n.idyll() || phi.idyll() != m.idyll())
    fail(ErrorKind::DescriptorMismatch, "matrix and matroids must share one idyll");
}

std::string subset_labels(const GroundSet& g, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.label(s[i]);
  }
  return out + "}";
}

}  // namespace

MorphismCheck check_morphism_pluecker(const SubmonomialMatrix& phi, const Matroid& n,
                                      const Matroid& m) {
  check_shapes(phi, n, m);
  const F1LinearMap under = phi.underlying_map();
  int w = n.rank();
  int r = m.rank();
  int ns = n.ground().size();
  int nt = m.ground().size();
  std::vector<int> tail;
  tail.reserve(r);
  for (const Subset& y : subsets_of_size(ns, w + 1)) {
    for (const Subset& x : subsets_of_size(nt, r - 1)) {
      FormalSum sum(phi.idyll());
      for (std::size_t k = 0; k < y.size(); ++k) {
        IdyllElement left = n.pluecker().eval_subset(subset_erase_at(y, k));
        if (left.is_zero()) continue;
        int image = under.to[y[k]];
        if (image < 0) continue;  // mu~(0, x) = 0
        tail.clear();
        tail.push_back(image);
        tail.insert(tail.end(), x.begin(), x.end());
        IdyllElement right = m.pluecker().eval_tuple(tail);
        if (right.is_zero()) continue;
        IdyllElement term = mul(mul(left, phi.coeff_at_source(y[k])), right);
        if (k % 2 == 1) term = neg(term);
        sum.add(term);
      }
      if (!sum.is_null()) {
        return MorphismCheck{false,
                             MorphismWitness{y, x,
                                             "y=" + subset_labels(n.ground(), y) + ", x=" +
                                                 subset_labels(m.ground(), x) + ", sum=" +
                                                 sum.to_string()}};
      }
    }
  }
  return MorphismCheck{true, std::nullopt};
}

bool is_morphism_pluecker(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m) {
  return check_morphism_pluecker(phi, n, m).ok;
}

bool is_morphism_circuits(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m) {
  check_shapes(phi, n, m);
  std::vector<VectorF> cocircuits = m.cocircuits();
  for (const VectorF& c : n.circuits()) {
    VectorF image = phi.apply(c);
    for (const VectorF& z : cocircuits)
      if (!orthogonal(image, z)) return false;
  }
  return true;
}

bool is_morphism_vectors(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m,
                         std::uint64_t budget) {
  check_shapes(phi, n, m);
  std::vector<VectorF> target_vectors = m.vectors(budget);
  std::set<std::string> member;
  for (const VectorF& v : target_vectors) member.insert(v.to_string());
  for (const VectorF& v : n.vectors(budget)) {
    if (!member.count(phi.apply(v).to_string())) return false;
  }
  return true;
}

Matroid preimage(const SubmonomialMatrix& phi, const Matroid& m) {
  if (phi.target() != m.ground())
    fail(ErrorKind::InvalidValue, "matrix target does not match M's ground set");
  if (phi.idyll() != m.idyll())
    fail(ErrorKind::DescriptorMismatch, "matrix and matroid must share one idyll");
  const F1LinearMap under = phi.underlying_map();
  Subset image;
  for (int s = 0; s < phi.source().size(); ++s)
    if (under.to[s] >= 0) image.push_back(under.to[s]);
  std::sort(image.begin(), image.end());

  Matroid restricted = m.restricted(image);  // rank d on im(phi) n T
  int d = restricted.rank();
  // position of a target index inside `image`
  std::vector<int> pos(phi.target().size(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) pos[image[i]] = static_cast<int>(i);

  PlueckerVector out(phi.source(), d, phi.idyll());
  std::vector<int> tuple(d);
  for (const Subset& z : subsets_of_size(phi.source().size(), d)) {
    IdyllElement coeff = IdyllElement::one(phi.idyll());
    bool zero = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      int t = under.to[z[i]];
      if (t < 0) {
        zero = true;  // tilde-extension: any base-point image kills the term
        break;
      }
      tuple[i] = pos[t];
      coeff = mul(coeff, phi.coeff_at_source(z[i]));
    }
    if (zero) continue;
    IdyllElement v = mul(coeff, restricted.pluecker().eval_tuple(tuple));
    if (!v.is_zero()) out.set(z, v);
  }
  return gp_validate(out);
}

bool is_quotient(const Matroid& n, const Matroid& m) {
  if (n.ground() != m.ground())
    fail(ErrorKind::InvalidValue, "quotient test needs a common ground set");
  if (n.idyll() != m.idyll())
    fail(ErrorKind::DescriptorMismatch, "quotient test needs a common idyll");
  return is_morphism_pluecker(SubmonomialMatrix::identity(n.ground(), n.idyll()), n, m);
}

bool factorization_check(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m) {
  check_shapes(phi, n, m);
  return is_quotient(n, preimage(phi, m));
}

namespace {

void require_image_condition(const SubmonomialMatrix& phi, const Subset& a, const Subset& b) {
  const F1LinearMap under = phi.underlying_map();
  for (int j : a) {
    int t = under.to[j];
    if (t >= 0 && !subset_contains(b, t))
      fail(ErrorKind::ConditionViolated,
           "underlying image of '" + phi.source().label(j) + "' is '" +
               phi.target().label(t) + "', outside B");
  }
}

}  // namespace

SubmonomialMatrix restrict_morphism(const SubmonomialMatrix& phi, const Subset& a,
                                    const Subset& b) {
  require_image_condition(phi, a, b);
  return phi.submatrix(a, b);
}

SubmonomialMatrix contract_morphism(const SubmonomialMatrix& phi, const Subset& a,
                                    const Subset& b) {
  require_image_condition(phi, a, b);
  return phi.submatrix(complement_subset(a, phi.source().size()),
                       complement_subset(b, phi.target().size()));
}

SubmonomialMatrix delete_morphism_dual(const SubmonomialMatrix& phi, const Subset& a,
                                       const Subset& b) {
  require_image_condition(phi, a, b);
  return phi.transpose().submatrix(complement_subset(b, phi.target().size()),
                                   complement_subset(a, phi.source().size()));
}

std::pair<SubmonomialMatrix, bool> push_forward_morphism(const IdyllMorphism& f,
                                                         const SubmonomialMatrix& phi,
                                                         const Matroid& n, const Matroid& m) {
  check_shapes(phi, n, m);
  SubmonomialMatrix pushed = phi.pushed_forward(f);
  bool ok = is_morphism_pluecker(pushed, push_forward_matroid(f, n), push_forward_matroid(f, m));
  return {pushed, ok};
}

PointedMap k_morphism_to_strong(const SubmonomialMatrix& phi, const Matroid& n,
                                const Matroid& m) {
  check_shapes(phi, n, m);
  if (phi.idyll() != Idyll::krasner())
    fail(ErrorKind::InvalidValue, "the strong-map bijection is for K-morphisms");
  if (!is_morphism_pluecker(phi, n, m))
    fail(ErrorKind::MorphismViolation, "matrix is not a morphism N -> M");
  F1LinearMap under = phi.underlying_map();
  return PointedMap{under.source, under.target, under.to};
}

SubmonomialMatrix strong_to_k_morphism(const PointedMap& sigma, const ClassicalMatroid& n,
                                       const ClassicalMatroid& m) {
  if (!is_f1_linear(sigma))
    fail(ErrorKind::NotF1Linear, "the map identifies parallel elements");
  if (!is_strong_map(sigma, n, m))
    fail(ErrorKind::NotStrongMap, "the map is not a strong map");
  SubmonomialMatrix phi(sigma.source, sigma.target, Idyll::krasner());
  for (int s = 0; s < static_cast<int>(sigma.to.size()); ++s)
    if (sigma.to[s] >= 0)
      phi.set_entry(s, sigma.to[s], IdyllElement::one(Idyll::krasner()));
  return phi;
}

}  // namespace qmat
