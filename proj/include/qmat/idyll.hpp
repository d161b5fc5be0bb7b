#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmat/error.hpp"
#include "qmat/rational.hpp"

namespace qmat {

enum class IdyllKind : std::uint8_t {
  Krasner,             // K = {0,1}, nullset N - {1}
  Sign,                // S = {0,1,-1}
  Tropical,            // T = exact nonnegative rationals
  RegularPartialField, // F1pm = {0,1,-1}, m = n rule
  FiniteField,         // GF(p), p prime; nullset = sums evaluating to 0
};

// Descriptor of a built-in idyll: carrier + nullset rule. Cheap value type.
class Idyll {
 public:
  static Idyll krasner() { return Idyll(IdyllKind::Krasner, 0); }
  static Idyll sign() { return Idyll(IdyllKind::Sign, 0); }
  static Idyll tropical() { return Idyll(IdyllKind::Tropical, 0); }
  static Idyll f1pm() { return Idyll(IdyllKind::RegularPartialField, 0); }
  static Idyll gf(int p);

  IdyllKind kind() const { return kind_; }
  int characteristic() const { return p_; }

  bool finite_carrier() const { return kind_ != IdyllKind::Tropical; }
  // Number of carrier elements including 0; throws for T.
  std::size_t carrier_size() const;

  // Idyll names used in JSON and on the CLI: K, S, T, F1pm, GF(p).
  std::string name() const;
  static Idyll parse(const std::string& name);

  bool operator==(const Idyll& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Idyll& o) const { return !(*this == o); }
  bool operator<(const Idyll& o) const {
    return kind_ != o.kind_ ? kind_ < o.kind_ : p_ < o.p_;
  }

 private:
  Idyll(IdyllKind kind, int p) : kind_(kind), p_(p) {}
  IdyllKind kind_;
  int p_;
};

// An element of an idyll carrier in canonical form.
//   Krasner/Sign/F1pm : code in {0, 1, -1}
//   GF(p)             : code = residue in [0, p)
//   Tropical          : exact nonnegative rational, code = (value != 0)
class IdyllElement {
 public:
  IdyllElement() : idyll_(Idyll::krasner()), code_(0) {}

  static IdyllElement zero(const Idyll& f) { return IdyllElement(f, 0, Rational(0)); }
  static IdyllElement one(const Idyll& f);
  static IdyllElement minus_one(const Idyll& f);
  // Residue constructor for GF(p); code constructor for the sign-like idylls.
  static IdyllElement from_code(const Idyll& f, long long code);
  static IdyllElement tropical(const Rational& q);

  const Idyll& idyll() const { return idyll_; }
  bool is_zero() const { return code_ == 0 && (idyll_.kind() != IdyllKind::Tropical || trop_ == Rational(0)); }
  long long code() const { return code_; }
  const Rational& tropical_value() const { return trop_; }

  std::string to_string() const;
  static IdyllElement parse(const Idyll& f, const std::string& text);

  bool operator==(const IdyllElement& o) const;
  bool operator!=(const IdyllElement& o) const { return !(*this == o); }
  // Canonical total order within one idyll; used for sorted multisets.
  bool operator<(const IdyllElement& o) const;

 private:
  IdyllElement(const Idyll& f, long long code, Rational trop)
      : idyll_(f), code_(code), trop_(std::move(trop)) {}
  Idyll idyll_;
  long long code_;
  Rational trop_{0};
};

IdyllElement mul(const IdyllElement& a, const IdyllElement& b);
IdyllElement neg(const IdyllElement& a);
IdyllElement inv(const IdyllElement& a);

// All nonzero carrier elements in canonical order; throws InfiniteCarrier for T.
std::vector<IdyllElement> units_of(const Idyll& f);

// A formal N-combination of nonzero elements; the empty multiset encodes 0.
// Terms are kept sorted so equality and hashing are representation-free.
class FormalSum {
 public:
  explicit FormalSum(const Idyll& f) : idyll_(f) {}

  const Idyll& idyll() const { return idyll_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<IdyllElement>& terms() const { return terms_; }

  // Zero terms are ignored (the zero element is not a term of a formal sum).
  void add(const IdyllElement& e);
  void add(const FormalSum& other);

  FormalSum scaled(const IdyllElement& unit) const;

  // Membership in the nullset N_F.
  bool is_null() const;

  std::string to_string() const;
  bool operator==(const FormalSum& o) const {
    return idyll_ == o.idyll_ && terms_ == o.terms_;
  }

 private:
  Idyll idyll_;
  std::vector<IdyllElement> terms_;
};

bool is_null(const FormalSum& s);

// Inner product sum_e X_e * Y_e of two indexed families over a common index
// set; families are given as equally-sized vectors.
FormalSum inner_product(const std::vector<IdyllElement>& x,
                        const std::vector<IdyllElement>& y);

enum class IdyllMorphismRule : std::uint8_t {
  ToKrasner,
  SignOfField,
  Inclusion,
  Identity,
};

// A named multiplicative map between built-in idylls. Construction verifies
// that 0, 1 and multiplication are preserved and that nullset sums map to
// nullset sums (exhaustively on bounded-length sums over finite carriers).
class IdyllMorphism {
 public:
  static IdyllMorphism to_krasner(const Idyll& source);
  static IdyllMorphism identity(const Idyll& f);
  static IdyllMorphism inclusion(const Idyll& source, const Idyll& target);
  static IdyllMorphism sign_of_field(const Idyll& source);

  const Idyll& source() const { return source_; }
  const Idyll& target() const { return target_; }
  IdyllMorphismRule rule() const { return rule_; }

  IdyllElement apply(const IdyllElement& a) const;

 private:
  IdyllMorphism(const Idyll& s, const Idyll& t, IdyllMorphismRule r)
      : source_(s), target_(t), rule_(r) {}
  void verify() const;

  Idyll source_;
  Idyll target_;
  IdyllMorphismRule rule_;
};

IdyllElement push_forward_elem(const IdyllMorphism& f, const IdyllElement& a);
FormalSum push_forward_sum(const IdyllMorphism& f, const FormalSum& s);

}  // namespace qmat
