#include "qmat/pluecker.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace qmat {

VectorF::VectorF(GroundSet g, Idyll f) : ground(std::move(g)), idyll(f) {
  entries.assign(ground.size(), IdyllElement::zero(idyll));
}

Subset VectorF::support() const {
  Subset s;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i)
    if (!entries[i].is_zero()) s.push_back(i);
  return s;
}

bool VectorF::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

VectorF VectorF::normalized() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) {
      VectorF out = *this;
      IdyllElement u = inv(e);
      for (auto& x : out.entries) x = mul(x, u);
      return out;
    }
  }
  return *this;
}

std::string VectorF::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += entries[i].to_string();
  }
  return out + ")";
}

bool VectorF::operator==(const VectorF& o) const {
  return ground == o.ground && idyll == o.idyll && entries == o.entries;
}

bool VectorF::operator<(const VectorF& o) const {
  return std::lexicographical_compare(entries.begin(), entries.end(),
                                      o.entries.begin(), o.entries.end());
}

FormalSum inner_product(const VectorF& x, const VectorF& y) {
  if (x.ground != y.ground)
    fail(ErrorKind::DescriptorMismatch, "inner product needs a common ground set");
  return inner_product(x.entries, y.entries);
}

bool orthogonal(const VectorF& x, const VectorF& y) {
  return inner_product(x, y).is_null();
}

PlueckerVector::PlueckerVector(GroundSet ground, int rank, Idyll idyll)
    : ground_(std::move(ground)), rank_(rank), idyll_(idyll) {
  if (ground_.size() > 31)
    fail(ErrorKind::BudgetExceeded, "ground sets are limited to 31 elements");
  if (rank_ < 0 || rank_ > ground_.size())
    fail(ErrorKind::InvalidValue,
         "rank " + std::to_string(rank_) + " out of range for ground set of size " +
             std::to_string(ground_.size()));
}

void PlueckerVector::set(const Subset& sorted_subset, const IdyllElement& value) {
  if (static_cast<int>(sorted_subset.size()) != rank_)
    fail(ErrorKind::InvalidValue, "subset size does not match rank");
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
    int v = sorted_subset[i];
    if (v < 0 || v >= ground_.size() || (i > 0 && sorted_subset[i - 1] >= v))
      fail(ErrorKind::InvalidValue, "subset must be a sorted set of ground indices");
  }
  if (value.idyll() != idyll_)
    fail(ErrorKind::DescriptorMismatch, "value from a different idyll");
  if (value.is_zero()) {
    values_.erase(sorted_subset);
  } else {
    values_[sorted_subset] = value;
  }
}

IdyllElement PlueckerVector::eval_subset(const Subset& sorted_subset) const {
  auto it = values_.find(sorted_subset);
  return it == values_.end() ? IdyllElement::zero(idyll_) : it->second;
}

IdyllElement PlueckerVector::eval_tuple(const std::vector<int>& tuple) const {
  std::vector<int> sorted = tuple;
  int sign = sort_sign(sorted);
  if (sign == 0) return IdyllElement::zero(idyll_);
  IdyllElement v = eval_subset(sorted);
  if (sign < 0) v = neg(v);
  return v;
}

std::vector<Subset> PlueckerVector::support_subsets() const {
  std::vector<Subset> out;
  out.reserve(values_.size());
  for (const auto& [s, v] : values_) out.push_back(s);
  return out;
}

PlueckerVector PlueckerVector::normalized() const {
  if (values_.empty()) return *this;
  PlueckerVector out(ground_, rank_, idyll_);
  IdyllElement u = inv(values_.begin()->second);
  for (const auto& [s, v] : values_) out.values_[s] = mul(v, u);
  return out;
}

bool PlueckerVector::is_normalized() const {
  return values_.empty() || values_.begin()->second == IdyllElement::one(idyll_);
}

std::string PlueckerVector::canonical_key() const {
  std::ostringstream os;
  os << idyll_.name() << '|' << rank_ << '|';
  for (const auto& [s, v] : values_) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '=' << v.to_string() << ';';
  }
  return os.str();
}

bool PlueckerVector::operator==(const PlueckerVector& o) const {
  return ground_ == o.ground_ && rank_ == o.rank_ && idyll_ == o.idyll_ &&
         values_ == o.values_;
}

namespace {

std::string subset_labels(const GroundSet& g, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.label(s[i]);
  }
  return out + "}";
}

// The GP2 sum for a sorted (r+1)-subset Y and sorted (r-1)-subset X.
FormalSum gp2_sum(const PlueckerVector& phi, const Subset& y, const Subset& x) {
  FormalSum sum(phi.idyll());
  std::vector<int> tail;
  tail.reserve(x.size() + 1);
  for (std::size_t k = 0; k < y.size(); ++k) {
    IdyllElement left = phi.eval_subset(subset_erase_at(y, k));
    if (left.is_zero()) continue;
    tail.clear();
    tail.push_back(y[k]);
    tail.insert(tail.end(), x.begin(), x.end());
    IdyllElement right = phi.eval_tuple(tail);
    if (right.is_zero()) continue;
    IdyllElement term = mul(left, right);
    if (k % 2 == 1) term = neg(term);
    sum.add(term);
  }
  return sum;
}

}  // namespace

Matroid gp_validate(const PlueckerVector& phi) {
  if (phi.all_zero())
    fail(ErrorKind::AllZero, "Grassmann-Pluecker functions are nonzero");
  int n = phi.ground().size();
  int r = phi.rank();
  for (const Subset& y : subsets_of_size(n, r + 1)) {
    for (const Subset& x : subsets_of_size(n, r - 1)) {
      FormalSum sum = gp2_sum(phi, y, x);
      if (!sum.is_null())
        fail(ErrorKind::GP2Violation,
             "GP2 fails at y=" + subset_labels(phi.ground(), y) + ", x=" +
                 subset_labels(phi.ground(), x) + " with sum " + sum.to_string());
    }
  }
  return Matroid(phi.normalized());
}

Matroid from_bases_K(const GroundSet& ground, int rank, const std::vector<Subset>& bases) {
  PlueckerVector phi(ground, rank, Idyll::krasner());
  for (const Subset& b : bases) phi.set(b, IdyllElement::one(Idyll::krasner()));
  return gp_validate(phi);
}

std::vector<std::uint32_t> Matroid::basis_masks() const {
  std::vector<std::uint32_t> out;
  for (const auto& [s, v] : phi_.values()) out.push_back(subset_to_mask(s));
  return out;
}

int Matroid::rank_of_mask(std::uint32_t mask) const {
  int best = 0;
  for (const auto& [s, v] : phi_.values()) {
    int c = __builtin_popcount(subset_to_mask(s) & mask);
    if (c > best) best = c;
  }
  return best;
}

int Matroid::rank_of_subset(const Subset& a) const { return rank_of_mask(subset_to_mask(a)); }

Matroid Matroid::underlying() const {
  return push_forward_matroid(IdyllMorphism::to_krasner(idyll()), *this);
}

Matroid push_forward_matroid(const IdyllMorphism& f, const Matroid& m) {
  if (f.source() != m.idyll())
    fail(ErrorKind::DescriptorMismatch, "push-forward source does not match the matroid idyll");
  PlueckerVector out(m.ground(), m.rank(), f.target());
  for (const auto& [s, v] : m.pluecker().values()) out.set(s, f.apply(v));
  return gp_validate(out);
}

Matroid Matroid::dual() const {
  int n = ground().size();
  int r = rank();
  PlueckerVector out(ground(), n - r, idyll());
  for (const Subset& x : subsets_of_size(n, n - r)) {
    Subset xc = complement_subset(x, n);
    IdyllElement v = phi_.eval_subset(xc);
    if (v.is_zero()) continue;
    if (concat_sign(x, xc) < 0) v = neg(v);
    out.set(x, v);
  }
  return Matroid(out.normalized());
}

namespace {

// Greedy maximal independent subset of A, scanning in ground order.
Subset maximal_independent_subset(const Matroid& m, const Subset& a) {
  Subset picked;
  std::uint32_t mask = 0;
  int current = 0;
  for (int e : a) {
    if (m.rank_of_mask(mask | (1u << e)) > current) {
      picked.push_back(e);
      mask |= (1u << e);
      ++current;
    }
  }
  return picked;
}

}  // namespace

Matroid Matroid::contracted(const Subset& a) const {
  int n = ground().size();
  Subset keep = complement_subset(a, n);
  Subset indep = maximal_independent_subset(*this, a);
  int ell = static_cast<int>(indep.size());
  GroundSet g = ground().restricted(keep);
  PlueckerVector out(g, rank() - ell, idyll());
  for (const Subset& x : subsets_of_size(static_cast<int>(keep.size()), rank() - ell)) {
    std::vector<int> tuple;
    tuple.reserve(rank());
    for (int j : x) tuple.push_back(keep[j]);
    tuple.insert(tuple.end(), indep.begin(), indep.end());
    IdyllElement v = phi_.eval_tuple(tuple);
    if (!v.is_zero()) out.set(x, v);
  }
  return Matroid(out.normalized());
}

Matroid Matroid::deleted(const Subset& a) const {
  int n = ground().size();
  Subset keep = complement_subset(a, n);
  int k = rank_of_subset(keep);
  // Extend a maximal independent subset of E\A to a basis; the extension
  // lies in A because the independent subset is maximal in E\A.
  Subset indep = maximal_independent_subset(*this, keep);
  Subset ext;
  std::uint32_t mask = subset_to_mask(indep);
  int current = k;
  for (int e : a) {
    if (current == rank()) break;
    if (rank_of_mask(mask | (1u << e)) > current) {
      ext.push_back(e);
      mask |= (1u << e);
      ++current;
    }
  }
  GroundSet g = ground().restricted(keep);
  PlueckerVector out(g, k, idyll());
  for (const Subset& y : subsets_of_size(static_cast<int>(keep.size()), k)) {
    std::vector<int> tuple;
    tuple.reserve(rank());
    for (int j : y) tuple.push_back(keep[j]);
    tuple.insert(tuple.end(), ext.begin(), ext.end());
    IdyllElement v = phi_.eval_tuple(tuple);
    if (!v.is_zero()) out.set(y, v);
  }
  return Matroid(out.normalized());
}

Matroid Matroid::restricted(const Subset& a) const {
  return deleted(complement_subset(a, ground().size()));
}

Matroid Matroid::extended_with_loop(const std::string& label) const {
  GroundSet g = ground().with_extra_label(label);
  PlueckerVector out(g, rank(), idyll());
  for (const auto& [s, v] : phi_.values()) out.set(s, v);
  return Matroid(out.normalized());
}

std::vector<VectorF> Matroid::circuits() const {
  int n = ground().size();
  int r = rank();
  std::set<std::string> seen;
  std::vector<VectorF> out;
  for (const Subset& y : subsets_of_size(n, r + 1)) {
    VectorF x(ground(), idyll());
    bool any = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      IdyllElement v = phi_.eval_subset(subset_erase_at(y, i));
      if (v.is_zero()) continue;
      if (i % 2 == 1) v = neg(v);
      x.entries[y[i]] = v;
      any = true;
    }
    if (!any) continue;
    VectorF norm = x.normalized();
    if (seen.insert(norm.to_string()).second) out.push_back(norm);
  }
  return out;
}

std::vector<VectorF> Matroid::cocircuits() const { return dual().circuits(); }

std::vector<VectorF> enumerate_space(const Idyll& f, const GroundSet& ground,
                                     std::uint64_t budget) {
  if (!f.finite_carrier())
    fail(ErrorKind::InfiniteCarrier, "cannot enumerate " + f.name() + "^E");
  std::vector<IdyllElement> carrier;
  carrier.push_back(IdyllElement::zero(f));
  for (const auto& u : units_of(f)) carrier.push_back(u);
  int n = ground.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= carrier.size();
    if (total > budget)
      fail(ErrorKind::BudgetExceeded,
           "vector space enumeration exceeds budget of " + std::to_string(budget));
  }
  std::vector<VectorF> out;
  out.reserve(total);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    VectorF x(ground, f);
    for (int i = 0; i < n; ++i) x.entries[i] = carrier[digits[i]];
    out.push_back(std::move(x));
    int i = n - 1;
    while (i >= 0 && digits[i] + 1 == carrier.size()) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

std::vector<VectorF> Matroid::vectors(std::uint64_t budget) const {
  std::vector<VectorF> cocirc = cocircuits();
  std::vector<VectorF> out;
  for (const VectorF& x : enumerate_space(idyll(), ground(), budget)) {
    bool ok = true;
    for (const VectorF& z : cocirc) {
      if (!orthogonal(x, z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<VectorF> Matroid::covectors(std::uint64_t budget) const {
  return dual().vectors(budget);
}

bool Matroid::is_vector(const VectorF& x) const {
  if (x.ground != ground())
    fail(ErrorKind::DescriptorMismatch, "vector over a different ground set");
  for (const VectorF& z : cocircuits())
    if (!orthogonal(x, z)) return false;
  return true;
}

Matroid Matroid::rebound(const GroundSet& g) const {
  if (g.size() != ground().size())
    fail(ErrorKind::InvalidValue, "rebinding needs a ground set of equal size");
  PlueckerVector out(g, rank(), idyll());
  for (const auto& [s, v] : phi_.values()) out.set(s, v);
  return Matroid(out);
}

namespace {

// Basis-exchange check for a family of r-subsets given as masks. For n <= 6
// every mask fits into one machine word of membership bits.
bool exchange_holds(const std::vector<std::uint32_t>& bases, int n) {
  std::uint64_t member_word = 0;
  std::vector<std::uint32_t> sorted;
  bool small = n <= 6;
  if (small) {
    for (std::uint32_t b : bases) member_word |= (std::uint64_t(1) << b);
  } else {
    sorted = bases;
    std::sort(sorted.begin(), sorted.end());
  }
  auto member = [&](std::uint32_t mask) {
    return small ? ((member_word >> mask) & 1) != 0
                 : std::binary_search(sorted.begin(), sorted.end(), mask);
  };
  for (std::uint32_t b1 : bases) {
    for (std::uint32_t b2 : bases) {
      std::uint32_t rest = b1 & ~b2;
      while (rest) {
        std::uint32_t xbit = rest & (~rest + 1);
        rest ^= xbit;
        bool found = false;
        std::uint32_t cand = b2 & ~b1;
        while (cand) {
          std::uint32_t ybit = cand & (~cand + 1);
          cand ^= ybit;
          if (member((b1 ^ xbit) | ybit)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<Matroid> build_k_catalogue(int n, int r) {
  std::vector<Matroid> out;
  GroundSet g = GroundSet::numbered(n);
  std::vector<Subset> rsets = subsets_of_size(n, r);
  std::vector<std::uint32_t> rmasks;
  rmasks.reserve(rsets.size());
  for (const auto& s : rsets) rmasks.push_back(subset_to_mask(s));
  std::uint64_t families = std::uint64_t(1) << rsets.size();
  std::vector<std::uint32_t> bases;
  for (std::uint64_t fam = 1; fam < families; ++fam) {
    bases.clear();
    for (std::size_t i = 0; i < rsets.size(); ++i)
      if (fam & (std::uint64_t(1) << i)) bases.push_back(rmasks[i]);
    if (!exchange_holds(bases, n)) continue;
    PlueckerVector phi(g, r, Idyll::krasner());
    for (std::size_t i = 0; i < rsets.size(); ++i)
      if (fam & (std::uint64_t(1) << i)) phi.set(rsets[i], IdyllElement::one(Idyll::krasner()));
    out.emplace_back(gp_validate(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matroid> build_catalogue(const Idyll& f, int n, int r) {
  const std::vector<Matroid>& base = matroid_catalogue(Idyll::krasner(), n, r);
  if (f == Idyll::krasner()) return base;
  std::vector<Matroid> out;
  GroundSet g = GroundSet::numbered(n);
  std::vector<IdyllElement> units = units_of(f);
  for (const Matroid& km : base) {
    std::vector<Subset> supp = km.bases();
    // lex-first support is pinned to 1 by normalization; vary the rest
    std::size_t free = supp.size() - 1;
    std::vector<std::size_t> digits(free, 0);
    while (true) {
      PlueckerVector phi(g, r, f);
      phi.set(supp[0], IdyllElement::one(f));
      for (std::size_t i = 0; i < free; ++i) phi.set(supp[i + 1], units[digits[i]]);
      try {
        out.emplace_back(gp_validate(phi));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GP2Violation) throw;
      }
      std::size_t i = free;
      while (i > 0 && digits[i - 1] + 1 == units.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Matroid>& matroid_catalogue(const Idyll& f, int n, int r) {
  if (!f.finite_carrier())
    fail(ErrorKind::InfiniteCarrier, "no finite catalogue over " + f.name());
  if (n > 20) fail(ErrorKind::BudgetExceeded, "catalogue limited to n <= 20");
  struct Key {
    IdyllKind kind;
    int p, n, r;
    bool operator<(const Key& o) const {
      return std::tie(kind, p, n, r) < std::tie(o.kind, o.p, o.n, o.r);
    }
  };
  static std::map<Key, std::vector<Matroid>> cache;
  static std::mutex mutex;
  Key key{f.kind(), f.characteristic(), n, r};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: the non-K route recurses into the K catalogue.
  std::vector<Matroid> built = (f == Idyll::krasner()) ? build_k_catalogue(n, r)
                                                       : build_catalogue(f, n, r);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace qmat
