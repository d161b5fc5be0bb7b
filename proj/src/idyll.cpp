#include "qmat/idyll.hpp"

#include <algorithm>
#include <sstream>

#include "qmat/combinat.hpp"

namespace qmat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_pos(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      long long num = std::stoll(text.substr(0, slash));
      long long den = std::stoll(text.substr(slash + 1));
      if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    if (fp.empty()) return Rational(std::stoll(ip));
    bool negative = !ip.empty() && ip[0] == '-';
    long long scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    long long whole = ip.empty() || ip == "-" || ip == "+" ? 0 : std::stoll(ip);
    long long frac = std::stoll(fp);
    Rational r = Rational(whole) + Rational(negative ? -frac : frac, scale);
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream os;
  os << value.numerator();
  if (value.denominator() != 1) os << '/' << value.denominator();
  return os.str();
}

Idyll Idyll::gf(int p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidValue, "GF(p) requires prime p, got " + std::to_string(p));
  return Idyll(IdyllKind::FiniteField, p);
}

std::size_t Idyll::carrier_size() const {
  switch (kind_) {
    case IdyllKind::Krasner: return 2;
    case IdyllKind::Sign: return 3;
    case IdyllKind::RegularPartialField: return 3;
    case IdyllKind::FiniteField: return static_cast<std::size_t>(p_);
    case IdyllKind::Tropical:
      fail(ErrorKind::InfiniteCarrier, "tropical carrier is infinite");
  }
  return 0;
}

std::string Idyll::name() const {
  switch (kind_) {
    case IdyllKind::Krasner: return "K";
    case IdyllKind::Sign: return "S";
    case IdyllKind::Tropical: return "T";
    case IdyllKind::RegularPartialField: return "F1pm";
    case IdyllKind::FiniteField: return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

Idyll Idyll::parse(const std::string& name) {
  if (name == "K") return krasner();
  if (name == "S") return sign();
  if (name == "T") return tropical();
  if (name == "F1pm") return f1pm();
  if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    try {
      return gf(std::stoi(name.substr(3, name.size() - 4)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::Parse, "unknown idyll '" + name + "' (expected K, S, T, F1pm or GF(p))");
}

IdyllElement IdyllElement::one(const Idyll& f) { return IdyllElement(f, 1, Rational(1)); }

IdyllElement IdyllElement::minus_one(const Idyll& f) {
  switch (f.kind()) {
    case IdyllKind::Krasner:
    case IdyllKind::Tropical:
      return one(f);  // -1 = 1 in K and T
    case IdyllKind::Sign:
    case IdyllKind::RegularPartialField:
      return IdyllElement(f, -1, Rational(0));
    case IdyllKind::FiniteField:
      return IdyllElement(f, f.characteristic() - 1, Rational(0));
  }
  return zero(f);
}

IdyllElement IdyllElement::from_code(const Idyll& f, long long code) {
  switch (f.kind()) {
    case IdyllKind::Krasner:
      if (code != 0 && code != 1 && code != -1)
        fail(ErrorKind::InvalidValue, "Krasner element must be 0 or 1");
      return IdyllElement(f, code != 0 ? 1 : 0, Rational(code != 0 ? 1 : 0));
    case IdyllKind::Sign:
    case IdyllKind::RegularPartialField:
      if (code < -1 || code > 1)
        fail(ErrorKind::InvalidValue, f.name() + " element must be one of 0, 1, -1");
      return IdyllElement(f, code, Rational(0));
    case IdyllKind::FiniteField:
      return IdyllElement(f, mod_pos(code, f.characteristic()), Rational(0));
    case IdyllKind::Tropical:
      if (code < 0) fail(ErrorKind::InvalidValue, "tropical carrier is nonnegative");
      return IdyllElement(f, code != 0 ? 1 : 0, Rational(code));
  }
  return zero(f);
}

IdyllElement IdyllElement::tropical(const Rational& q) {
  if (q < Rational(0)) fail(ErrorKind::InvalidValue, "tropical carrier is nonnegative");
  return IdyllElement(Idyll::tropical(), q != Rational(0) ? 1 : 0, q);
}

std::string IdyllElement::to_string() const {
  switch (idyll_.kind()) {
    case IdyllKind::Tropical:
      return rational_to_string(trop_);
    default:
      return std::to_string(code_);
  }
}

IdyllElement IdyllElement::parse(const Idyll& f, const std::string& text) {
  if (f.kind() == IdyllKind::Tropical) return tropical(parse_rational(text));
  try {
    return from_code(f, std::stoll(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad " + f.name() + " literal '" + text + "'");
  }
}

bool IdyllElement::operator==(const IdyllElement& o) const {
  if (idyll_ != o.idyll_) return false;
  if (idyll_.kind() == IdyllKind::Tropical) return trop_ == o.trop_;
  return code_ == o.code_;
}

bool IdyllElement::operator<(const IdyllElement& o) const {
  if (idyll_ != o.idyll_) return idyll_ < o.idyll_;
  if (idyll_.kind() == IdyllKind::Tropical) return trop_ < o.trop_;
  return code_ < o.code_;
}

IdyllElement mul(const IdyllElement& a, const IdyllElement& b) {
  if (a.idyll() != b.idyll())
    fail(ErrorKind::DescriptorMismatch,
         "cannot multiply " + a.idyll().name() + " by " + b.idyll().name());
  const Idyll& f = a.idyll();
  if (a.is_zero() || b.is_zero()) return IdyllElement::zero(f);
  switch (f.kind()) {
    case IdyllKind::Krasner:
      return IdyllElement::one(f);
    case IdyllKind::Sign:
    case IdyllKind::RegularPartialField:
      return IdyllElement::from_code(f, a.code() * b.code());
    case IdyllKind::FiniteField:
      return IdyllElement::from_code(f, a.code() * b.code());
    case IdyllKind::Tropical:
      return IdyllElement::tropical(a.tropical_value() * b.tropical_value());
  }
  return IdyllElement::zero(f);
}

IdyllElement neg(const IdyllElement& a) { return mul(IdyllElement::minus_one(a.idyll()), a); }

IdyllElement inv(const IdyllElement& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidValue, "inv(0) is undefined");
  const Idyll& f = a.idyll();
  switch (f.kind()) {
    case IdyllKind::Krasner:
      return IdyllElement::one(f);
    case IdyllKind::Sign:
    case IdyllKind::RegularPartialField:
      return a;  // units are involutive
    case IdyllKind::FiniteField: {
      long long p = f.characteristic();
      long long x = a.code() % p;
      long long r = 1;
      for (long long e = p - 2; e > 0; e >>= 1) {  // Fermat
        if (e & 1) r = (r * x) % p;
        x = (x * x) % p;
      }
      return IdyllElement::from_code(f, r);
    }
    case IdyllKind::Tropical:
      return IdyllElement::tropical(Rational(1) / a.tropical_value());
  }
  return IdyllElement::zero(f);
}

std::vector<IdyllElement> units_of(const Idyll& f) {
  switch (f.kind()) {
    case IdyllKind::Krasner:
      return {IdyllElement::one(f)};
    case IdyllKind::Sign:
    case IdyllKind::RegularPartialField:
      return {IdyllElement::one(f), IdyllElement::minus_one(f)};
    case IdyllKind::FiniteField: {
      std::vector<IdyllElement> out;
      for (int v = 1; v < f.characteristic(); ++v) out.push_back(IdyllElement::from_code(f, v));
      return out;
    }
    case IdyllKind::Tropical:
      fail(ErrorKind::InfiniteCarrier, "tropical unit group is infinite");
  }
  return {};
}

void FormalSum::add(const IdyllElement& e) {
  if (e.idyll() != idyll_)
    fail(ErrorKind::DescriptorMismatch, "formal sum term from a different idyll");
  if (e.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e);
  terms_.insert(it, e);
}

void FormalSum::add(const FormalSum& other) {
  for (const auto& t : other.terms()) add(t);
}

FormalSum FormalSum::scaled(const IdyllElement& unit) const {
  FormalSum out(idyll_);
  for (const auto& t : terms_) out.add(mul(t, unit));
  return out;
}

bool FormalSum::is_null() const {
  switch (idyll_.kind()) {
    case IdyllKind::Krasner:
      return terms_.size() != 1;
    case IdyllKind::Sign: {
      if (terms_.empty()) return true;
      bool plus = false, minus = false;
      for (const auto& t : terms_) (t.code() > 0 ? plus : minus) = true;
      return plus && minus;
    }
    case IdyllKind::RegularPartialField: {
      long long plus = 0, minus = 0;
      for (const auto& t : terms_) (t.code() > 0 ? plus : minus)++;
      return plus == minus;
    }
    case IdyllKind::FiniteField: {
      long long acc = 0;
      for (const auto& t : terms_) acc = (acc + t.code()) % idyll_.characteristic();
      return acc == 0;
    }
    case IdyllKind::Tropical: {
      if (terms_.empty()) return true;
      // terms_ is sorted ascending: the maximum must appear at least twice.
      std::size_t n = terms_.size();
      return n >= 2 && terms_[n - 1] == terms_[n - 2];
    }
  }
  return false;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].to_string();
  }
  return out;
}

bool is_null(const FormalSum& s) { return s.is_null(); }

FormalSum inner_product(const std::vector<IdyllElement>& x,
                        const std::vector<IdyllElement>& y) {
  if (x.size() != y.size())
    fail(ErrorKind::DescriptorMismatch, "inner product needs a common index set");
  if (x.empty()) return FormalSum(Idyll::krasner());
  if (x[0].idyll() != y[0].idyll())
    fail(ErrorKind::DescriptorMismatch, "inner product across different idylls");
  FormalSum out(x[0].idyll());
  for (std::size_t i = 0; i < x.size(); ++i) out.add(mul(x[i], y[i]));
  return out;
}

IdyllMorphism IdyllMorphism::to_krasner(const Idyll& source) {
  IdyllMorphism f(source, Idyll::krasner(), IdyllMorphismRule::ToKrasner);
  f.verify();
  return f;
}

IdyllMorphism IdyllMorphism::identity(const Idyll& f) {
  IdyllMorphism m(f, f, IdyllMorphismRule::Identity);
  m.verify();
  return m;
}

IdyllMorphism IdyllMorphism::inclusion(const Idyll& source, const Idyll& target) {
  IdyllMorphism m(source, target, IdyllMorphismRule::Inclusion);
  m.verify();
  return m;
}

IdyllMorphism IdyllMorphism::sign_of_field(const Idyll& source) {
  IdyllMorphism m(source, Idyll::sign(), IdyllMorphismRule::SignOfField);
  m.verify();
  return m;
}

IdyllElement IdyllMorphism::apply(const IdyllElement& a) const {
  if (a.idyll() != source_)
    fail(ErrorKind::DescriptorMismatch, "element not in the morphism's source idyll");
  if (a.is_zero()) return IdyllElement::zero(target_);
  switch (rule_) {
    case IdyllMorphismRule::ToKrasner:
      return IdyllElement::one(target_);
    case IdyllMorphismRule::Identity:
      return a;
    case IdyllMorphismRule::SignOfField:
      // valid sources are sign-like carriers; code is already the sign
      return IdyllElement::from_code(target_, a.code() > 0 ? 1 : -1);
    case IdyllMorphismRule::Inclusion:
      switch (source_.kind()) {
        case IdyllKind::Krasner:
          return IdyllElement::one(target_);
        case IdyllKind::Sign:
        case IdyllKind::RegularPartialField:
          return a.code() > 0 ? IdyllElement::one(target_) : IdyllElement::minus_one(target_);
        default:
          break;
      }
      break;
  }
  fail(ErrorKind::InvalidValue, "unsupported idyll morphism application");
}

void IdyllMorphism::verify() const {
  // Shape checks first: which (rule, source, target) pairs make sense at all.
  switch (rule_) {
    case IdyllMorphismRule::ToKrasner:
      if (target_ != Idyll::krasner()) fail(ErrorKind::InvalidValue, "ToKrasner must target K");
      return;  // always nullset-preserving: null sums never have exactly one term
    case IdyllMorphismRule::Identity:
      if (source_ != target_) fail(ErrorKind::InvalidValue, "identity needs equal carriers");
      return;
    case IdyllMorphismRule::SignOfField:
      if (source_.kind() != IdyllKind::Sign && source_.kind() != IdyllKind::RegularPartialField)
        fail(ErrorKind::InvalidValue,
             "SignOfField from " + source_.name() + " does not preserve nullsets");
      break;
    case IdyllMorphismRule::Inclusion: {
      bool ok = false;
      if (source_.kind() == IdyllKind::Krasner && target_.kind() == IdyllKind::Tropical) ok = true;
      if (source_.kind() == IdyllKind::RegularPartialField &&
          (target_.kind() == IdyllKind::Sign || target_.kind() == IdyllKind::FiniteField ||
           target_.kind() == IdyllKind::Tropical || target_.kind() == IdyllKind::Krasner))
        ok = true;
      if (source_ == target_) ok = true;
      if (!ok)
        fail(ErrorKind::InvalidValue,
             "no inclusion of idylls " + source_.name() + " -> " + target_.name());
      break;
    }
  }
  if (!source_.finite_carrier()) return;  // by construction for T sources (none today)

  // Exhaustive check on bounded-length sums over the finite source carrier:
  // every null sum must push to a null sum.
  std::vector<IdyllElement> units = units_of(source_);
  const int max_len = 5;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    FormalSum s(source_);
    for (int idx : pick) s.add(units[idx]);
    if (s.is_null()) {
      FormalSum image(target_);
      for (int idx : pick) image.add(apply(units[idx]));
      if (!image.is_null())
        fail(ErrorKind::InvalidValue, "rule does not map N_F into N_G (witness " + s.to_string() + ")");
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < units.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, max_len);
}

IdyllElement push_forward_elem(const IdyllMorphism& f, const IdyllElement& a) {
  return f.apply(a);
}

FormalSum push_forward_sum(const IdyllMorphism& f, const FormalSum& s) {
  FormalSum out(f.target());
  for (const auto& t : s.terms()) out.add(f.apply(t));
  return out;
}

}  // namespace qmat
