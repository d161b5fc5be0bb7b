#include "qmat/submonomial.hpp"

#include <sstream>

namespace qmat {

void validate_f1_linear(const F1LinearMap& f) {
  if (static_cast<int>(f.to.size()) != f.source.size())
    fail(ErrorKind::InvalidValue, "map size does not match source");
  std::vector<int> hits(f.target.size(), 0);
  for (int v : f.to) {
    if (v < -1 || v >= f.target.size())
      fail(ErrorKind::InvalidValue, "map image out of range");
    if (v >= 0 && ++hits[v] > 1)
      fail(ErrorKind::NotF1Linear, "two elements map to one nonzero target");
  }
}

F1LinearMap F1LinearMap::adjoint() const {
  F1LinearMap out{target, source, std::vector<int>(target.size(), -1)};
  for (int s = 0; s < static_cast<int>(to.size()); ++s)
    if (to[s] >= 0) out.to[to[s]] = s;
  return out;
}

SubmonomialMatrix::SubmonomialMatrix(GroundSet source, GroundSet target, Idyll idyll)
    : source_(std::move(source)),
      target_(std::move(target)),
      idyll_(idyll),
      to_(source_.size(), -1),
      coeff_(source_.size(), IdyllElement::zero(idyll)),
      from_(target_.size(), -1) {}

SubmonomialMatrix SubmonomialMatrix::identity(const GroundSet& ground, const Idyll& idyll) {
  SubmonomialMatrix m(ground, ground, idyll);
  for (int i = 0; i < ground.size(); ++i) m.set_entry(i, i, IdyllElement::one(idyll));
  return m;
}

SubmonomialMatrix SubmonomialMatrix::zero(const GroundSet& source, const GroundSet& target,
                                          const Idyll& idyll) {
  return SubmonomialMatrix(source, target, idyll);
}

void SubmonomialMatrix::set_entry(int source_index, int target_index,
                                  const IdyllElement& coeff) {
  if (coeff.idyll() != idyll_)
    fail(ErrorKind::DescriptorMismatch, "matrix entry from a different idyll");
  if (coeff.is_zero()) fail(ErrorKind::InvalidValue, "explicit entries must be nonzero");
  if (source_index < 0 || source_index >= source_.size() || target_index < 0 ||
      target_index >= target_.size())
    fail(ErrorKind::InvalidValue, "matrix entry out of range");
  if (to_[source_index] >= 0)
    fail(ErrorKind::InvalidValue,
         "column " + source_.label(source_index) + " already has a nonzero entry");
  if (from_[target_index] >= 0)
    fail(ErrorKind::InvalidValue,
         "row " + target_.label(target_index) + " already has a nonzero entry");
  to_[source_index] = target_index;
  from_[target_index] = source_index;
  coeff_[source_index] = coeff;
}

IdyllElement SubmonomialMatrix::entry(int target_index, int source_index) const {
  if (to_[source_index] == target_index) return coeff_[source_index];
  return IdyllElement::zero(idyll_);
}

F1LinearMap SubmonomialMatrix::underlying_map() const {
  return F1LinearMap{source_, target_, to_};
}

VectorF SubmonomialMatrix::apply(const VectorF& x) const {
  if (x.ground != source_)
    fail(ErrorKind::DescriptorMismatch, "vector not over the matrix source");
  if (x.idyll != idyll_)
    fail(ErrorKind::DescriptorMismatch, "vector over a different idyll");
  VectorF out(target_, idyll_);
  for (int s = 0; s < source_.size(); ++s)
    if (to_[s] >= 0) out.entries[to_[s]] = mul(coeff_[s], x.entries[s]);
  return out;
}

SubmonomialMatrix SubmonomialMatrix::transpose() const {
  SubmonomialMatrix out(target_, source_, idyll_);
  for (int s = 0; s < source_.size(); ++s)
    if (to_[s] >= 0) out.set_entry(to_[s], s, coeff_[s]);
  return out;
}

SubmonomialMatrix SubmonomialMatrix::pushed_forward(const IdyllMorphism& f) const {
  if (f.source() != idyll_)
    fail(ErrorKind::DescriptorMismatch, "push-forward source does not match matrix idyll");
  SubmonomialMatrix out(source_, target_, f.target());
  for (int s = 0; s < source_.size(); ++s)
    if (to_[s] >= 0) out.set_entry(s, to_[s], f.apply(coeff_[s]));
  return out;
}

SubmonomialMatrix SubmonomialMatrix::submatrix(const Subset& a, const Subset& b) const {
  GroundSet sa = source_.restricted(a);
  GroundSet tb = target_.restricted(b);
  SubmonomialMatrix out(sa, tb, idyll_);
  for (std::size_t j = 0; j < a.size(); ++j) {
    int t = to_[a[j]];
    if (t < 0) continue;
    auto pos = std::lower_bound(b.begin(), b.end(), t);
    if (pos == b.end() || *pos != t) continue;  // entry falls outside B x A
    out.set_entry(static_cast<int>(j), static_cast<int>(pos - b.begin()), coeff_[a[j]]);
  }
  return out;
}

std::string SubmonomialMatrix::canonical_key() const {
  std::ostringstream os;
  for (int s = 0; s < source_.size(); ++s) {
    if (to_[s] < 0) continue;
    os << s << "->" << to_[s] << ':' << coeff_[s].to_string() << ';';
  }
  return os.str();
}

bool SubmonomialMatrix::operator==(const SubmonomialMatrix& o) const {
  return source_ == o.source_ && target_ == o.target_ && idyll_ == o.idyll_ &&
         to_ == o.to_ && coeff_ == o.coeff_;
}

SubmonomialMatrix compose(const SubmonomialMatrix& psi, const SubmonomialMatrix& phi) {
  if (phi.target() != psi.source())
    fail(ErrorKind::InvalidValue, "composition shape mismatch");
  if (phi.idyll() != psi.idyll())
    fail(ErrorKind::DescriptorMismatch, "composition across idylls");
  SubmonomialMatrix out(phi.source(), psi.target(), phi.idyll());
  for (int s = 0; s < phi.source().size(); ++s) {
    int mid = phi.target_of_source(s);
    if (mid < 0) continue;
    int t = psi.target_of_source(mid);
    if (t < 0) continue;
    out.set_entry(s, t, mul(psi.coeff_at_source(mid), phi.coeff_at_source(s)));
  }
  return out;
}

}  // namespace qmat
