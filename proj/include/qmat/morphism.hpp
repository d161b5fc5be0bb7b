#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qmat/classical.hpp"
#include "qmat/pluecker.hpp"
#include "qmat/submonomial.hpp"

namespace qmat {

struct MorphismWitness {
  Subset y;  // (w+1)-subset of the source ground set
  Subset x;  // (r-1)-subset of the target ground set
  std::string sum;
};

struct MorphismCheck {
  bool ok = false;
  std::optional<MorphismWitness> witness;
  explicit operator bool() const { return ok; }
};

// Criterion (3): all pointed Pluecker sums are null. Works for every built-in
// idyll, including T; the default morphism test.
MorphismCheck check_morphism_pluecker(const SubmonomialMatrix& phi, const Matroid& n,
                                      const Matroid& m);
bool is_morphism_pluecker(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m);

// Criterion (2): Phi . C_N is orthogonal to C*_M.
bool is_morphism_circuits(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m);

// Criterion (1): Phi . V_N is contained in V_M; needs a finite carrier.
bool is_morphism_vectors(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m,
                         std::uint64_t budget = Matroid::kDefaultBudget);

// The pre-image matroid Phi^{-1}(M) on the source ground set.
Matroid preimage(const SubmonomialMatrix& phi, const Matroid& m);

// M is a quotient of N: the identity matrix is a morphism N -> M.
bool is_quotient(const Matroid& n, const Matroid& m);

// Criterion (2'): Phi is a morphism iff Phi^{-1}(M) is a quotient of N.
bool factorization_check(const SubmonomialMatrix& phi, const Matroid& n, const Matroid& m);

// Minors of morphisms; all require underlying(A u {0}) <= B u {0}.
SubmonomialMatrix restrict_morphism(const SubmonomialMatrix& phi, const Subset& a,
                                    const Subset& b);
SubmonomialMatrix contract_morphism(const SubmonomialMatrix& phi, const Subset& a,
                                    const Subset& b);
// Phi^t \ (A -> B) := Phi^t | (B^c -> A^c), a morphism M* \ B -> N* \ A.
SubmonomialMatrix delete_morphism_dual(const SubmonomialMatrix& phi, const Subset& a,
                                       const Subset& b);

// Entrywise push-forward along an idyll morphism, with revalidation of the
// morphism property between the pushed matroids.
std::pair<SubmonomialMatrix, bool> push_forward_morphism(const IdyllMorphism& f,
                                                         const SubmonomialMatrix& phi,
                                                         const Matroid& n, const Matroid& m);

// K-morphisms <-> F1-linear strong maps (mutually inverse on valid inputs).
PointedMap k_morphism_to_strong(const SubmonomialMatrix& phi, const Matroid& n,
                                const Matroid& m);
SubmonomialMatrix strong_to_k_morphism(const PointedMap& sigma, const ClassicalMatroid& n,
                                       const ClassicalMatroid& m);

}  // namespace qmat
