#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qmat/morphism.hpp"

using namespace qmat;

namespace {

Matroid make(const Idyll& f, const GroundSet& g, int r,
             std::initializer_list<std::pair<Subset, const char*>> values) {
  PlueckerVector phi(g, r, f);
  for (const auto& [s, v] : values) phi.set(s, IdyllElement::parse(f, v));
  return gp_validate(phi);
}

Matroid uniform_k(const GroundSet& g, int r) {
  PlueckerVector phi(g, r, Idyll::krasner());
  for (const Subset& s : subsets_of_size(g.size(), r))
    phi.set(s, IdyllElement::one(Idyll::krasner()));
  return gp_validate(phi);
}

// The S-matroids of the worked morphism example: vector sets
// {00,11,-1-1}, {00,1-1,-11} and {00,10,-10}.
struct SignExample {
  Idyll S = Idyll::sign();
  GroundSet g2 = GroundSet::numbered(2);
  Matroid m = make(Idyll::sign(), GroundSet::numbered(2), 1, {{{0}, "1"}, {{1}, "-1"}});
  Matroid m_prime = make(Idyll::sign(), GroundSet::numbered(2), 1, {{{0}, "1"}, {{1}, "1"}});
  Matroid n = make(Idyll::sign(), GroundSet::numbered(2), 1, {{{1}, "1"}});

  SubmonomialMatrix rotation() const {  // [[0,1],[-1,0]]
    SubmonomialMatrix phi(g2, g2, S);
    phi.set_entry(1, 0, IdyllElement::one(S));        // Phi_{1,2} = 1
    phi.set_entry(0, 1, IdyllElement::minus_one(S));  // Phi_{2,1} = -1
    return phi;
  }
  SubmonomialMatrix projection() const {  // [[1,0],[0,0]]
    SubmonomialMatrix phi(g2, g2, S);
    phi.set_entry(0, 0, IdyllElement::one(S));
    return phi;
  }
};

VectorF vec(const Matroid& m, std::initializer_list<const char*> literals) {
  VectorF x(m.ground(), m.idyll());
  int i = 0;
  for (const char* l : literals) x.entries[i++] = IdyllElement::parse(m.idyll(), l);
  return x;
}

bool agree_all_routes(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m) {
  bool a = is_morphism_pluecker(phi, n, m);
  bool b = is_morphism_circuits(phi, n, m);
  bool c = is_morphism_vectors(phi, n, m);
  bool d = factorization_check(phi, n, m);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == d);
  return a;
}

}  // namespace

TEST_CASE("underlying maps of submonomial matrices") {
  GroundSet s({"1", "4", "6"});
  GroundSet t({"2", "5"});
  SubmonomialMatrix phi1(s, t, Idyll::krasner());
  phi1.set_entry(0, 0, IdyllElement::one(Idyll::krasner()));  // 1 -> 2
  phi1.set_entry(1, 1, IdyllElement::one(Idyll::krasner()));  // 4 -> 5
  F1LinearMap under = phi1.underlying_map();
  CHECK(under.to == std::vector<int>{0, 1, -1});

  SubmonomialMatrix id = SubmonomialMatrix::identity(s, Idyll::krasner());
  CHECK(id.underlying_map().to == std::vector<int>{0, 1, 2});

  SubmonomialMatrix zero = SubmonomialMatrix::zero(s, t, Idyll::krasner());
  CHECK(zero.underlying_map().to == std::vector<int>{-1, -1, -1});

  // adjoint compatibility: underlying(Phi^t) = underlying(Phi)^t
  CHECK(phi1.transpose().underlying_map() == phi1.underlying_map().adjoint());
}

TEST_CASE("applying a matrix to vectors") {
  SignExample ex;
  SubmonomialMatrix rot = ex.rotation();
  VectorF x = vec(ex.m, {"1", "1"});
  VectorF image = rot.apply(x);
  CHECK(image.entries[0] == IdyllElement::one(ex.S));
  CHECK(image.entries[1] == IdyllElement::minus_one(ex.S));

  SubmonomialMatrix id = SubmonomialMatrix::identity(ex.g2, ex.S);
  CHECK(id.apply(x) == x);

  // empty column: e_j maps to zero
  SubmonomialMatrix proj = ex.projection();
  VectorF e1 = vec(ex.m, {"0", "1"});
  CHECK(proj.apply(e1).is_zero());
}

TEST_CASE("composition and transposition") {
  SignExample ex;
  SubmonomialMatrix rot = ex.rotation();
  CHECK(rot.transpose().transpose() == rot);

  // c_A and r_A compose to the identity on E - A
  GroundSet e = GroundSet::numbered(4);
  Subset a{1, 3};
  Subset keep = complement_subset(a, 4);
  SubmonomialMatrix id4 = SubmonomialMatrix::identity(e, Idyll::krasner());
  SubmonomialMatrix c_a = id4.submatrix({0, 1, 2, 3}, keep);  // (E-A) x E
  SubmonomialMatrix r_a = id4.submatrix(keep, {0, 1, 2, 3});  // E x (E-A)
  SubmonomialMatrix prod = compose(c_a, r_a);
  CHECK(prod == SubmonomialMatrix::identity(e.restricted(keep), Idyll::krasner()));
  CHECK(oracle::dense_product_matches(c_a, r_a, prod));

  // (Psi Phi)^t = Phi^t Psi^t on random pairs
  for (int trial = 0; trial < 50; ++trial) {
    GroundSet gs = GroundSet::numbered(oracle::rand_int(0, 3));
    GroundSet gt = GroundSet::numbered(oracle::rand_int(0, 3));
    GroundSet gw = GroundSet::numbered(oracle::rand_int(0, 3));
    SubmonomialMatrix phi = oracle::random_submonomial(gs, gt, Idyll::sign());
    SubmonomialMatrix psi = oracle::random_submonomial(gt, gw, Idyll::sign());
    SubmonomialMatrix prod2 = compose(psi, phi);
    CHECK(oracle::dense_product_matches(psi, phi, prod2));
    CHECK(prod2.transpose() == compose(phi.transpose(), psi.transpose()));
  }
}

TEST_CASE("the worked sign-matroid morphisms pass all four criteria") {
  SignExample ex;
  SubmonomialMatrix id = SubmonomialMatrix::identity(ex.g2, ex.S);
  CHECK(agree_all_routes(id, ex.m, ex.m));
  CHECK(agree_all_routes(ex.rotation(), ex.m, ex.m_prime));
  CHECK(agree_all_routes(ex.projection(), ex.m, ex.n));
  // and a non-morphism for contrast: the rotation into N
  CHECK_FALSE(agree_all_routes(ex.rotation(), ex.m, ex.n));
}

TEST_CASE("morphism checks report witnesses") {
  SignExample ex;
  MorphismCheck check = check_morphism_pluecker(ex.rotation(), ex.m, ex.n);
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->y.size() == 2);
}

TEST_CASE("cryptomorphism agreement, exhaustively on small ground sets") {
  for (const Idyll& f : {Idyll::krasner(), Idyll::sign()}) {
    for (int ns = 0; ns <= 2; ++ns) {
      for (int nt = 0; nt <= 2; ++nt) {
        GroundSet gs = GroundSet::numbered(ns);
        GroundSet gt = GroundSet::numbered(nt);
        // every submonomial matrix: partial injections with unit coefficients
        std::vector<SubmonomialMatrix> matrices;
        std::vector<IdyllElement> units = units_of(f);
        std::vector<int> assignment(ns, -1);
        auto emit = [&](auto&& self, int s) -> void {
          if (s == ns) {
            std::vector<int> coeff_idx(ns, 0);
            while (true) {
              SubmonomialMatrix phi(gs, gt, f);
              for (int j = 0; j < ns; ++j)
                if (assignment[j] >= 0) phi.set_entry(j, assignment[j], units[coeff_idx[j]]);
              matrices.push_back(phi);
              int j = ns - 1;
              while (j >= 0 &&
                     (assignment[j] < 0 || coeff_idx[j] + 1 == static_cast<int>(units.size())))
                coeff_idx[j--] = 0;
              if (j < 0) break;
              ++coeff_idx[j];
            }
            return;
          }
          self(self, s + 1);  // unmapped
          for (int t = 0; t < nt; ++t) {
            bool taken = false;
            for (int j = 0; j < s; ++j) taken |= (assignment[j] == t);
            if (taken) continue;
            assignment[s] = t;
            self(self, s + 1);
            assignment[s] = -1;
          }
        };
        emit(emit, 0);
        for (int rn = 0; rn <= ns; ++rn) {
          for (int rm = 0; rm <= nt; ++rm) {
            for (const Matroid& n : matroid_catalogue(f, ns, rn)) {
              for (const Matroid& m : matroid_catalogue(f, nt, rm)) {
                for (const SubmonomialMatrix& phi : matrices)
                  agree_all_routes(phi, n.rebound(gs), m.rebound(gt));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("cryptomorphism agreement on random instances up to size 4") {
  for (int trial = 0; trial < 300; ++trial) {
    Idyll f = trial % 2 ? Idyll::sign() : Idyll::krasner();
    int ns = oracle::rand_int(1, 4), nt = oracle::rand_int(1, 4);
    GroundSet gs = GroundSet::numbered(ns), gt = GroundSet::numbered(nt);
    int rn = oracle::rand_int(0, ns), rm = oracle::rand_int(0, nt);
    const auto& cn = matroid_catalogue(f, ns, rn);
    const auto& cm = matroid_catalogue(f, nt, rm);
    Matroid n = cn[oracle::rand_int(0, static_cast<int>(cn.size()) - 1)].rebound(gs);
    Matroid m = cm[oracle::rand_int(0, static_cast<int>(cm.size()) - 1)].rebound(gt);
    agree_all_routes(oracle::random_submonomial(gs, gt, f), n, m);
  }
}

TEST_CASE("duality for morphisms: Phi vs Phi^t") {
  SignExample ex;
  CHECK(is_morphism_pluecker(ex.rotation().transpose(), ex.m_prime.dual(), ex.m.dual()));
  for (int trial = 0; trial < 200; ++trial) {
    Idyll f = trial % 2 ? Idyll::sign() : Idyll::krasner();
    int ns = oracle::rand_int(0, 3), nt = oracle::rand_int(0, 3);
    GroundSet gs = GroundSet::numbered(ns), gt = GroundSet::numbered(nt);
    int rn = oracle::rand_int(0, ns), rm = oracle::rand_int(0, nt);
    const auto& cn = matroid_catalogue(f, ns, rn);
    const auto& cm = matroid_catalogue(f, nt, rm);
    Matroid n = cn[oracle::rand_int(0, static_cast<int>(cn.size()) - 1)].rebound(gs);
    Matroid m = cm[oracle::rand_int(0, static_cast<int>(cm.size()) - 1)].rebound(gt);
    SubmonomialMatrix phi = oracle::random_submonomial(gs, gt, f);
    CHECK(is_morphism_pluecker(phi, n, m) ==
          is_morphism_pluecker(phi.transpose(), m.dual(), n.dual()));
  }
}

TEST_CASE("pre-images") {
  GroundSet g3 = GroundSet::numbered(3);
  Matroid u23 = uniform_k(g3, 2);
  SubmonomialMatrix id = SubmonomialMatrix::identity(g3, Idyll::krasner());
  CHECK(preimage(id, u23) == u23);

  GroundSet g2 = GroundSet::numbered(2);
  SubmonomialMatrix zero = SubmonomialMatrix::zero(g2, g3, Idyll::krasner());
  Matroid pre = preimage(zero, u23);
  CHECK(pre.rank() == 0);
  CHECK(pre.ground() == g2);

  // the coordinate projection c_A is a morphism M -> M/A
  GroundSet g4 = GroundSet::numbered(4);
  Matroid u24 = uniform_k(g4, 2);
  Subset a{3};
  Subset keep = complement_subset(a, 4);
  SubmonomialMatrix c_a =
      SubmonomialMatrix::identity(g4, Idyll::krasner()).submatrix({0, 1, 2, 3}, keep);
  CHECK(is_morphism_pluecker(c_a, u24, u24.contracted(a)));
}

TEST_CASE("pre-image along a coordinate projection pulls the contraction back") {
  GroundSet g4 = GroundSet::numbered(4);
  Matroid u24 = uniform_k(g4, 2);
  Subset a{3};
  Subset keep = complement_subset(a, 4);
  SubmonomialMatrix c_a =
      SubmonomialMatrix::identity(g4, Idyll::krasner()).submatrix({0, 1, 2, 3}, keep);
  Matroid pulled = preimage(c_a, u24.contracted(a));
  // vectors of the pre-image = projections-into-V(M/A) pre-images, by
  // exhaustive enumeration
  std::set<std::string> target, lhs, rhs;
  for (const VectorF& v : u24.contracted(a).vectors()) target.insert(v.to_string());
  for (const VectorF& v : pulled.vectors()) lhs.insert(v.to_string());
  for (const VectorF& x : enumerate_space(Idyll::krasner(), g4))
    if (target.count(c_a.apply(x).to_string())) rhs.insert(x.to_string());
  CHECK(lhs == rhs);
}

TEST_CASE("composites of morphisms are re-checked, and hold over perfect idylls") {
  // chains of coordinate projections compose to coordinate projections
  for (int trial = 0; trial < 80; ++trial) {
    Idyll f = trial % 2 ? Idyll::sign() : Idyll::krasner();
    int n = oracle::rand_int(2, 4);
    GroundSet g = GroundSet::numbered(n);
    const auto& cat = matroid_catalogue(f, n, oracle::rand_int(0, n));
    Matroid m = cat[oracle::rand_int(0, static_cast<int>(cat.size()) - 1)].rebound(g);
    std::uint32_t amask = oracle::rand_int(0, (1 << n) - 1);
    Subset a = mask_to_subset(amask);
    Subset keep = complement_subset(a, n);
    Subset rest = mask_to_subset(oracle::rand_int(0, (1 << keep.size()) - 1));
    Subset keep2 = complement_subset(rest, static_cast<int>(keep.size()));

    SubmonomialMatrix id_g = SubmonomialMatrix::identity(g, f);
    Subset all(n);
    std::iota(all.begin(), all.end(), 0);
    SubmonomialMatrix first = id_g.submatrix(all, keep);
    Matroid mid = m.contracted(a);
    SubmonomialMatrix id_mid = SubmonomialMatrix::identity(mid.ground(), f);
    Subset all2(keep.size());
    std::iota(all2.begin(), all2.end(), 0);
    SubmonomialMatrix second = id_mid.submatrix(all2, keep2);
    Matroid last = mid.contracted(rest);
    REQUIRE(is_morphism_pluecker(first, m, mid));
    REQUIRE(is_morphism_pluecker(second, mid, last));
    CHECK(is_morphism_pluecker(compose(second, first), m, last));
  }
}

TEST_CASE("tropical morphisms through the Pluecker criterion") {
  Idyll T = Idyll::tropical();
  GroundSet g2 = GroundSet::numbered(2);
  auto trop = [&](const char* a, const char* b) {
    PlueckerVector phi(g2, 1, T);
    phi.set({0}, IdyllElement::parse(T, a));
    phi.set({1}, IdyllElement::parse(T, b));
    return gp_validate(phi);
  };
  SubmonomialMatrix id = SubmonomialMatrix::identity(g2, T);
  // a valuated quotient of itself
  CHECK(is_morphism_pluecker(id, trop("1", "2"), trop("1", "2")));
  // scaling classes agree: (1,2) and (2,4) are the same matroid
  CHECK(trop("1", "2") == trop("2", "4"));
  // distinct valuations are not quotients of each other
  CHECK_FALSE(is_morphism_pluecker(id, trop("1", "2"), trop("1", "1")));
  CHECK_FALSE(is_morphism_pluecker(id, trop("1", "1"), trop("1", "2")));
  // circuit route agrees; vector enumeration is refused over T
  CHECK(is_morphism_circuits(id, trop("1", "2"), trop("1", "2")));
  CHECK_FALSE(is_morphism_circuits(id, trop("1", "2"), trop("1", "1")));
  CHECK_THROWS_AS(is_morphism_vectors(id, trop("1", "2"), trop("1", "2")), Error);
  // and factorization concurs
  CHECK(factorization_check(id, trop("1", "2"), trop("1", "2")));
  CHECK_FALSE(factorization_check(id, trop("1", "2"), trop("1", "1")));
}

TEST_CASE("pre-image vector identity over K") {
  for (int trial = 0; trial < 150; ++trial) {
    int ns = oracle::rand_int(0, 3), nt = oracle::rand_int(0, 3);
    GroundSet gs = GroundSet::numbered(ns), gt = GroundSet::numbered(nt);
    int rm = oracle::rand_int(0, nt);
    const auto& cm = matroid_catalogue(Idyll::krasner(), nt, rm);
    Matroid m = cm[oracle::rand_int(0, static_cast<int>(cm.size()) - 1)].rebound(gt);
    SubmonomialMatrix phi = oracle::random_submonomial(gs, gt, Idyll::krasner());
    Matroid pre = preimage(phi, m);
    std::set<std::string> target_vectors;
    for (const VectorF& v : m.vectors()) target_vectors.insert(v.to_string());
    std::set<std::string> lhs, rhs;
    for (const VectorF& v : pre.vectors()) lhs.insert(v.to_string());
    for (const VectorF& x : enumerate_space(Idyll::krasner(), gs))
      if (target_vectors.count(phi.apply(x).to_string())) rhs.insert(x.to_string());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quotients") {
  GroundSet g3 = GroundSet::numbered(3);
  Matroid u13 = uniform_k(g3, 1);
  Matroid u23 = uniform_k(g3, 2);
  CHECK(is_quotient(u23, u23));
  CHECK(is_quotient(u23, u13));
  CHECK_FALSE(is_quotient(u13, u23));

  // classical oracle: rank-function characterization of quotients
  CHECK(oracle::quotient_by_rank_functions(u23.basis_masks(), u13.basis_masks(), 3));
  CHECK_FALSE(oracle::quotient_by_rank_functions(u13.basis_masks(), u23.basis_masks(), 3));

  // a rank-1 matroid with a loop at the third element
  Matroid loop3 = make(Idyll::krasner(), g3, 1, {{{0}, "1"}, {{1}, "1"}});
  CHECK(oracle::quotient_by_rank_functions(u13.basis_masks(), loop3.basis_masks(), 3) ==
        is_quotient(u13, loop3));

  // exhaustive agreement with the classical rank-function oracle over K
  for (int n = 0; n <= 3; ++n) {
    for (int rn = 0; rn <= n; ++rn) {
      for (int rm = 0; rm <= n; ++rm) {
        for (const Matroid& nm : matroid_catalogue(Idyll::krasner(), n, rn)) {
          for (const Matroid& mm : matroid_catalogue(Idyll::krasner(), n, rm)) {
            CHECK(is_quotient(nm, mm) ==
                  oracle::quotient_by_rank_functions(nm.basis_masks(), mm.basis_masks(), n));
          }
        }
      }
    }
  }
}

TEST_CASE("morphism minors") {
  // contraction by (empty -> empty) is the matrix itself
  SignExample ex;
  SubmonomialMatrix rot = ex.rotation();
  CHECK(contract_morphism(rot, {}, {}) == rot);

  // identity matrix restricted to A -> A is the identity on A
  GroundSet g3 = GroundSet::numbered(3);
  SubmonomialMatrix id3 = SubmonomialMatrix::identity(g3, Idyll::krasner());
  Subset a{0, 2};
  CHECK(restrict_morphism(id3, a, a) ==
        SubmonomialMatrix::identity(g3.restricted(a), Idyll::krasner()));

  // image condition violations are rejected
  CHECK_THROWS_AS(restrict_morphism(id3, {0, 1}, {0}), Error);

  // the D4 matrix Phi1 contracted at A={6}, B={} stays a morphism
  GroundSet s({"1", "4", "6"});
  GroundSet t({"2", "5"});
  SubmonomialMatrix phi1(s, t, Idyll::krasner());
  phi1.set_entry(0, 0, IdyllElement::one(Idyll::krasner()));
  phi1.set_entry(1, 1, IdyllElement::one(Idyll::krasner()));
  Matroid m0 = uniform_k(s, 2);  // U^2_3 at the source
  Matroid m1 = uniform_k(t, 1);  // U^1_2 at the target
  REQUIRE(is_morphism_pluecker(phi1, m0, m1));
  Subset a6{2};
  SubmonomialMatrix contracted = contract_morphism(phi1, a6, {});
  CHECK(contracted.source().labels() == std::vector<std::string>{"1", "4"});
  SubmonomialMatrix expected(s.restricted({0, 1}), t, Idyll::krasner());
  expected.set_entry(0, 0, IdyllElement::one(Idyll::krasner()));
  expected.set_entry(1, 1, IdyllElement::one(Idyll::krasner()));
  CHECK(contracted == expected);
  CHECK(is_morphism_pluecker(contracted, m0.contracted(a6), m1));
}

TEST_CASE("minor-transpose compatibility and morphism preservation") {
  for (int trial = 0; trial < 200; ++trial) {
    Idyll f = trial % 2 ? Idyll::sign() : Idyll::krasner();
    int ns = oracle::rand_int(1, 4), nt = oracle::rand_int(1, 4);
    GroundSet gs = GroundSet::numbered(ns), gt = GroundSet::numbered(nt);
    SubmonomialMatrix phi = oracle::random_submonomial(gs, gt, f);
    // random A, B with the image condition: B includes the image of A
    std::uint32_t amask = oracle::rand_int(0, (1 << ns) - 1);
    std::uint32_t bmask = oracle::rand_int(0, (1 << nt) - 1);
    F1LinearMap under = phi.underlying_map();
    for (int j = 0; j < ns; ++j)
      if ((amask & (1u << j)) && under.to[j] >= 0) bmask |= (1u << under.to[j]);
    Subset a = mask_to_subset(amask), b = mask_to_subset(bmask);

    CHECK(contract_morphism(phi, a, b).transpose() ==
          restrict_morphism(phi.transpose(), complement_subset(b, nt),
                            complement_subset(a, ns)));
    CHECK(delete_morphism_dual(phi, a, b) == contract_morphism(phi, a, b).transpose());

    // pull a random target matroid back; minors of the resulting morphism
    // must be morphisms between the corresponding minors
    int rm = oracle::rand_int(0, nt);
    const auto& cm = matroid_catalogue(f, nt, rm);
    Matroid m = cm[oracle::rand_int(0, static_cast<int>(cm.size()) - 1)].rebound(gt);
    Matroid n = preimage(phi, m);
    REQUIRE(is_morphism_pluecker(phi, n, m));
    CHECK(is_morphism_pluecker(restrict_morphism(phi, a, b), n.restricted(a), m.restricted(b)));
    CHECK(is_morphism_pluecker(contract_morphism(phi, a, b), n.contracted(a), m.contracted(b)));
    CHECK(is_morphism_pluecker(delete_morphism_dual(phi, a, b), m.dual().deleted(b),
                               n.dual().deleted(a)));
  }
}

TEST_CASE("push-forward of morphisms") {
  SignExample ex;
  IdyllMorphism tk = IdyllMorphism::to_krasner(ex.S);
  auto [pushed, valid] = push_forward_morphism(tk, ex.rotation(), ex.m, ex.m_prime);
  CHECK(valid);
  CHECK(pushed.idyll() == Idyll::krasner());
  // [[0,1],[1,0]]: a K-morphism U12 -> U12
  CHECK(pushed.entry(0, 1) == IdyllElement::one(Idyll::krasner()));
  CHECK(pushed.entry(1, 0) == IdyllElement::one(Idyll::krasner()));
  CHECK(is_morphism_pluecker(pushed, ex.m.underlying(), ex.m_prime.underlying()));

  SubmonomialMatrix id = SubmonomialMatrix::identity(ex.g2, ex.S);
  auto [pid, pvalid] = push_forward_morphism(IdyllMorphism::identity(ex.S), id, ex.m, ex.m);
  CHECK(pvalid);
  CHECK(pid == id);

  // a quotient pair pushes to a classical quotient
  GroundSet g3 = GroundSet::numbered(3);
  Matroid u23 = uniform_k(g3, 2);
  Matroid u13 = uniform_k(g3, 1);
  SubmonomialMatrix kid = SubmonomialMatrix::identity(g3, Idyll::krasner());
  auto [qid, qvalid] =
      push_forward_morphism(IdyllMorphism::to_krasner(Idyll::krasner()), kid, u23, u13);
  CHECK(qvalid);
  CHECK(oracle::quotient_by_rank_functions(u23.basis_masks(), u13.basis_masks(), 3));

  // push-forward preserves the underlying map
  CHECK(ex.rotation().pushed_forward(tk).underlying_map().to ==
        ex.rotation().underlying_map().to);
}
