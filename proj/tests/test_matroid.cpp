#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qmat/pluecker.hpp"

using namespace qmat;

namespace {

Matroid make(const Idyll& f, int n, int r,
             std::initializer_list<std::pair<Subset, const char*>> values) {
  PlueckerVector phi(GroundSet::numbered(n), r, f);
  for (const auto& [s, v] : values) phi.set(s, IdyllElement::parse(f, v));
  return gp_validate(phi);
}

Matroid uniform_k(int n, int r) {
  PlueckerVector phi(GroundSet::numbered(n), r, Idyll::krasner());
  for (const Subset& s : subsets_of_size(n, r)) phi.set(s, IdyllElement::one(Idyll::krasner()));
  return gp_validate(phi);
}

std::set<std::uint32_t> mask_set(const std::vector<Subset>& subsets) {
  std::set<std::uint32_t> out;
  for (const auto& s : subsets) out.insert(subset_to_mask(s));
  return out;
}

std::set<std::uint32_t> support_masks(const std::vector<VectorF>& vs) {
  std::set<std::uint32_t> out;
  for (const auto& v : vs) out.insert(subset_to_mask(v.support()));
  return out;
}

}  // namespace

TEST_CASE("gp_validate accepts U24 over K and reports violations with a witness") {
  CHECK(uniform_k(4, 2).bases().size() == 6);

  PlueckerVector bad(GroundSet::numbered(4), 2, Idyll::krasner());
  bad.set({0, 1}, IdyllElement::one(Idyll::krasner()));
  bad.set({2, 3}, IdyllElement::one(Idyll::krasner()));
  CHECK_THROWS_WITH_AS(gp_validate(bad), doctest::Contains("GP2 fails"), Error);

  PlueckerVector zero(GroundSet::numbered(3), 1, Idyll::krasner());
  CHECK_THROWS_AS(gp_validate(zero), Error);
}

TEST_CASE("a two-element S-matroid validates (the 3-term relation degenerates)") {
  Matroid m = make(Idyll::sign(), 2, 1, {{{0}, "1"}, {{1}, "-1"}});
  CHECK(m.rank() == 1);
  CHECK(m.bases().size() == 2);
}

TEST_CASE("subset-pair GP2 iteration agrees with raw-tuple iteration") {
  // all indicator functions on n <= 4, all ranks
  for (int n = 0; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto rsets = subsets_of_size(n, r);
      for (std::uint64_t fam = 1; fam < (std::uint64_t(1) << rsets.size()); ++fam) {
        PlueckerVector phi(GroundSet::numbered(n), r, Idyll::krasner());
        for (std::size_t i = 0; i < rsets.size(); ++i)
          if (fam & (std::uint64_t(1) << i))
            phi.set(rsets[i], IdyllElement::one(Idyll::krasner()));
        bool by_subsets = true;
        try {
          gp_validate(phi);
        } catch (const Error&) {
          by_subsets = false;
        }
        CHECK(by_subsets == oracle::gp2_holds_raw_tuples(phi));
      }
    }
  }
  // and on signed assignments over S for all small sign matroids
  for (int n = 2; n <= 3; ++n) {
    const auto& cat = matroid_catalogue(Idyll::sign(), n, 1);
    for (const Matroid& m : cat) CHECK(oracle::gp2_holds_raw_tuples(m.pluecker()));
  }
}

TEST_CASE("from_bases_K builds matroids and rejects exchange failures") {
  Matroid u13 = from_bases_K(GroundSet::numbered(3), 1, {{0}, {1}, {2}});
  CHECK(u13.bases().size() == 3);

  std::vector<Subset> all_but_12;
  for (const Subset& s : subsets_of_size(4, 2))
    if (!(s == Subset{0, 1})) all_but_12.push_back(s);
  CHECK(from_bases_K(GroundSet::numbered(4), 2, all_but_12).bases().size() == 5);

  CHECK_THROWS_AS(from_bases_K(GroundSet::numbered(4), 2, {{0, 1}, {2, 3}}), Error);
}

TEST_CASE("underlying matroid takes supports") {
  Matroid s = make(Idyll::sign(), 2, 1, {{{0}, "1"}, {{1}, "-1"}});
  Matroid under = s.underlying();
  CHECK(under.idyll() == Idyll::krasner());
  CHECK(under.bases().size() == 2);

  Matroid t = make(Idyll::tropical(), 3, 2, {{{0, 1}, "1"}, {{0, 2}, "2"}, {{1, 2}, "2"}});
  CHECK(t.underlying() == uniform_k(3, 2));
}

TEST_CASE("underlying of a GF(2) column matroid matches subset ranks") {
  // 2x3 matrix over GF(2): columns e1, e2, e1+e2
  Idyll F2 = Idyll::gf(2);
  int cols[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  PlueckerVector phi(GroundSet::numbered(3), 2, F2);
  for (const Subset& s : subsets_of_size(3, 2)) {
    int a = s[0], b = s[1];
    int det = ((cols[a][0] * cols[b][1] - cols[a][1] * cols[b][0]) % 2 + 2) % 2;
    if (det) phi.set(s, IdyllElement::from_code(F2, det));
  }
  Matroid m = gp_validate(phi);
  std::set<std::uint32_t> expected;
  for (const Subset& s : subsets_of_size(3, 2)) {
    int a = s[0], b = s[1];
    bool indep = (cols[a][0] * cols[b][1] - cols[a][1] * cols[b][0]) % 2 != 0;
    if (indep) expected.insert(subset_to_mask(s));
  }
  CHECK(mask_set(m.underlying().bases()) == expected);
}

TEST_CASE("duality: complements, involution, hand-expanded signs") {
  CHECK(uniform_k(3, 1).dual() == uniform_k(3, 2));

  // F1pm on two elements: phi = (1,1), phi* = (1,-1) after normalization
  Matroid m = make(Idyll::f1pm(), 2, 1, {{{0}, "1"}, {{1}, "1"}});
  Matroid d = m.dual();
  CHECK(d.pluecker().eval_subset({0}) == IdyllElement::one(Idyll::f1pm()));
  CHECK(d.pluecker().eval_subset({1}) == IdyllElement::minus_one(Idyll::f1pm()));

  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Idyll& f : {Idyll::krasner(), Idyll::sign(), Idyll::f1pm()}) {
        for (const Matroid& m2 : matroid_catalogue(f, n, r)) {
          CHECK(m2.dual().dual() == m2);
          CHECK(m2.dual().rank() == n - r);
        }
      }
    }
  }
}

TEST_CASE("minors match the rank-function oracle") {
  Matroid u24 = uniform_k(4, 2);
  Matroid c = u24.contracted({3});
  CHECK(c.rank() == 1);
  CHECK(c.ground().size() == 3);
  CHECK(mask_set(c.bases()) ==
        mask_set(from_bases_K(GroundSet::numbered(3), 1, {{0}, {1}, {2}}).bases()));

  CHECK(u24.deleted({}) == u24);
  CHECK(u24.restricted({0, 2}) == u24.deleted({1, 3}));

  for (int n = 2; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const Matroid& m : matroid_catalogue(Idyll::krasner(), n, r)) {
        std::vector<std::uint32_t> bases = m.basis_masks();
        for (std::uint32_t amask = 0; amask < (1u << n); ++amask) {
          Subset a = mask_to_subset(amask);
          Subset keep = complement_subset(a, n);
          std::set<std::uint32_t> expected;
          for (std::uint32_t b : oracle::contraction_bases(bases, n, amask)) {
            std::uint32_t translated = 0;
            for (std::size_t i = 0; i < keep.size(); ++i)
              if (b & (1u << keep[i])) translated |= (1u << i);
            expected.insert(translated);
          }
          CHECK(mask_set(m.contracted(a).bases()) == expected);

          std::set<std::uint32_t> expected_del;
          for (std::uint32_t b : oracle::deletion_bases(bases, n, amask)) {
            std::uint32_t translated = 0;
            for (std::size_t i = 0; i < keep.size(); ++i)
              if (b & (1u << keep[i])) translated |= (1u << i);
            expected_del.insert(translated);
          }
          CHECK(mask_set(m.deleted(a).bases()) == expected_del);
        }
      }
    }
  }
}

TEST_CASE("minors are independent of the internal choice of independent set") {
  for (const Idyll& f : {Idyll::sign(), Idyll::f1pm()}) {
    for (int n = 2; n <= 4; ++n) {
      for (int r = 1; r <= n; ++r) {
        for (const Matroid& m : matroid_catalogue(f, n, r)) {
          for (std::uint32_t amask = 1; amask < (1u << n); ++amask) {
            Subset a = mask_to_subset(amask);
            Matroid reference = m.contracted(a);
            int ell = m.rank_of_subset(a);
            for (const Subset& cand : subsets_of_size(n, ell)) {
              if ((subset_to_mask(cand) & ~amask) != 0) continue;
              if (m.rank_of_subset(cand) != ell) continue;
              Subset keep = complement_subset(a, n);
              PlueckerVector alt(m.ground().restricted(keep), m.rank() - ell, f);
              for (const Subset& x :
                   subsets_of_size(static_cast<int>(keep.size()), m.rank() - ell)) {
                std::vector<int> tuple;
                for (int j : x) tuple.push_back(keep[j]);
                tuple.insert(tuple.end(), cand.begin(), cand.end());
                IdyllElement v = m.pluecker().eval_tuple(tuple);
                if (!v.is_zero()) alt.set(x, v);
              }
              CHECK(alt.normalized() == reference.pluecker());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("contraction-deletion duality (M/A)* = M* \\ A") {
  for (const Idyll& f : {Idyll::krasner(), Idyll::sign()}) {
    for (int n = 2; n <= 4; ++n) {
      for (int r = 0; r <= n; ++r) {
        for (const Matroid& m : matroid_catalogue(f, n, r)) {
          for (std::uint32_t amask = 0; amask < (1u << n); ++amask) {
            Subset a = mask_to_subset(amask);
            CHECK(m.contracted(a).dual() == m.dual().deleted(a));
          }
        }
      }
    }
  }
}

TEST_CASE("circuits: fundamental-circuit representatives") {
  Matroid u12 = uniform_k(2, 1);
  auto c1 = u12.circuits();
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].support() == Subset{0, 1});

  Matroid u23 = uniform_k(3, 2);
  auto c2 = u23.circuits();
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].support() == Subset{0, 1, 2});

  // S-matroid with vectors {00, 11, -1-1}: phi = (1, -1); its circuit is the
  // all-ones pair, its cocircuit the (1,-1) pair
  Matroid ms = make(Idyll::sign(), 2, 1, {{{0}, "1"}, {{1}, "-1"}});
  auto cs = ms.circuits();
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].entries[0] == IdyllElement::one(Idyll::sign()));
  CHECK(cs[0].entries[1] == IdyllElement::one(Idyll::sign()));
  auto cos = ms.cocircuits();
  REQUIRE(cos.size() == 1);
  CHECK(cos[0].entries[0] == IdyllElement::one(Idyll::sign()));
  CHECK(cos[0].entries[1] == IdyllElement::minus_one(Idyll::sign()));
}

TEST_CASE("circuit supports equal the minimal dependent sets of the underlying matroid") {
  for (const Idyll& f : {Idyll::krasner(), Idyll::sign(), Idyll::f1pm(), Idyll::gf(3)}) {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 0; r <= n; ++r) {
        if (f == Idyll::gf(3) && n == 4) continue;
        for (const Matroid& m : matroid_catalogue(f, n, r)) {
          std::set<std::uint32_t> expected;
          for (std::uint32_t c : oracle::circuits_from_bases(m.basis_masks(), n))
            expected.insert(c);
          CHECK(support_masks(m.circuits()) == expected);
        }
      }
    }
  }
}

TEST_CASE("cocircuits") {
  Matroid u12 = uniform_k(2, 1);
  CHECK(support_masks(u12.cocircuits()) == std::set<std::uint32_t>{0b11});

  Matroid u22 = uniform_k(2, 2);
  CHECK(support_masks(u22.cocircuits()) == std::set<std::uint32_t>{0b01, 0b10});

  Matroid rank0 = make(Idyll::krasner(), 2, 0, {{{}, "1"}});
  CHECK(rank0.cocircuits().empty());

  Matroid u23 = uniform_k(3, 2);
  CHECK(support_masks(u23.cocircuits()) == std::set<std::uint32_t>{0b011, 0b101, 0b110});
}

TEST_CASE("vectors by exhaustive enumeration") {
  Matroid ms = make(Idyll::sign(), 2, 1, {{{0}, "1"}, {{1}, "-1"}});
  auto vs = ms.vectors();
  REQUIRE(vs.size() == 3);
  std::set<std::string> reprs;
  for (const auto& v : vs) reprs.insert(v.to_string());
  CHECK(reprs == std::set<std::string>{"(0,0)", "(1,1)", "(-1,-1)"});

  CHECK(uniform_k(2, 1).vectors().size() == 2);  // {(0,0),(1,1)}
  CHECK(uniform_k(2, 2).vectors().size() == 1);  // only the zero vector

  CHECK_THROWS_AS(make(Idyll::tropical(), 2, 1, {{{0}, "1"}, {{1}, "1"}}).vectors(), Error);
  CHECK_THROWS_AS(uniform_k(3, 1).vectors(4), Error);  // budget of 4 < 2^3
}

TEST_CASE("tropical vector membership via the cocircuit test") {
  Matroid t = make(Idyll::tropical(), 2, 1, {{{0}, "1"}, {{1}, "1"}});
  VectorF x(t.ground(), t.idyll());
  x.entries = {IdyllElement::parse(Idyll::tropical(), "2"),
               IdyllElement::parse(Idyll::tropical(), "2")};
  CHECK(t.is_vector(x));
  x.entries[1] = IdyllElement::parse(Idyll::tropical(), "3");
  CHECK_FALSE(t.is_vector(x));

  VectorF zero(t.ground(), t.idyll());
  CHECK(t.is_vector(zero));

  Matroid u12 = uniform_k(2, 1);
  VectorF e0(u12.ground(), Idyll::krasner());
  e0.entries[0] = IdyllElement::one(Idyll::krasner());
  CHECK_FALSE(u12.is_vector(e0));
}

TEST_CASE("push-forward of matroids") {
  Matroid ms = make(Idyll::sign(), 2, 1, {{{0}, "1"}, {{1}, "-1"}});
  CHECK(push_forward_matroid(IdyllMorphism::to_krasner(Idyll::sign()), ms) == ms.underlying());
  CHECK(push_forward_matroid(IdyllMorphism::identity(Idyll::sign()), ms) == ms);

  Matroid t = make(Idyll::tropical(), 3, 2, {{{0, 1}, "1"}, {{0, 2}, "2"}, {{1, 2}, "2"}});
  CHECK(push_forward_matroid(IdyllMorphism::to_krasner(Idyll::tropical()), t) ==
        uniform_k(3, 2));
}

TEST_CASE("push-forward commutes with duality") {
  for (const Idyll& f : {Idyll::sign(), Idyll::f1pm(), Idyll::gf(3)}) {
    IdyllMorphism tk = IdyllMorphism::to_krasner(f);
    for (int n = 1; n <= 3; ++n)
      for (int r = 0; r <= n; ++r)
        for (const Matroid& m : matroid_catalogue(f, n, r))
          CHECK(push_forward_matroid(tk, m.dual()) == push_forward_matroid(tk, m).dual());
  }
}

TEST_CASE("extend_with_loop") {
  Matroid u12 = uniform_k(2, 1);
  Matroid looped = u12.extended_with_loop("z");
  CHECK(looped.rank() == 1);
  CHECK(looped.ground().size() == 3);
  CHECK(mask_set(looped.bases()) == mask_set(u12.bases()));  // bases unchanged
  // circuits gain the singleton loop circuit
  std::set<std::uint32_t> supports = support_masks(looped.circuits());
  CHECK(supports.count(0b100) == 1);
  CHECK(supports.count(0b011) == 1);
  CHECK_THROWS_AS(u12.extended_with_loop("1"), Error);
}

TEST_CASE("perfection witness: vectors are orthogonal to covectors") {
  for (const Idyll& f :
       {Idyll::krasner(), Idyll::sign(), Idyll::f1pm(), Idyll::gf(2), Idyll::gf(3)}) {
    for (int n = 0; n <= 4; ++n) {
      for (int r = 0; r <= n; ++r) {
        if (f == Idyll::gf(3) && n == 4) continue;  // keep runtime modest
        for (const Matroid& m : matroid_catalogue(f, n, r)) {
          auto vs = m.vectors();
          auto cvs = m.covectors();
          for (const auto& v : vs)
            for (const auto& w : cvs) CHECK(orthogonal(v, w));
        }
      }
    }
  }
}

TEST_CASE("K-matroid catalogue agrees with the GP-filter route") {
  for (int n = 0; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto& fast = matroid_catalogue(Idyll::krasner(), n, r);
      auto slow = oracle::k_matroids_by_gp_filter(n, r);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
  }
  // labeled matroid counts: 1, 2, 5, 16, 68, 406 on n = 0..5 elements
  const std::size_t expected[] = {1, 2, 5, 16, 68, 406};
  for (int n = 0; n <= 5; ++n) {
    std::size_t total = 0;
    for (int r = 0; r <= n; ++r) total += matroid_catalogue(Idyll::krasner(), n, r).size();
    CHECK(total == expected[n]);
  }
}

TEST_CASE("normalization pins the lex-first value") {
  Matroid m = make(Idyll::gf(5), 2, 1, {{{0}, "2"}, {{1}, "3"}});
  CHECK(m.pluecker().eval_subset({0}) == IdyllElement::one(Idyll::gf(5)));
  // 3 * inv(2) = 3 * 3 = 9 = 4 mod 5
  CHECK(m.pluecker().eval_subset({1}) == IdyllElement::from_code(Idyll::gf(5), 4));
}
