#pragma once

#include <optional>
#include <vector>

#include "morita/bimodule.hpp"
#include "morita/isg.hpp"

namespace morita {

struct EnlargementWitness {
  std::vector<Idx> t_elems;
  bool sts_is_s = false;   // STS = S
  bool tst_is_t = false;   // TST = T
  bool idem_sts = false;   // S E(T) S = S
  bool idem_tst = false;   // E(T) S E(T) = T
  bool holds() const { return sts_is_s && tst_is_t; }
};

// Checks both the element form (STS=S, TST=T) and the idempotent form by
// exhaustive products, and asserts they agree.  T_elems must be a closed
// subset (Error(NotClosed) otherwise).
EnlargementWitness is_enlargement(const InverseSemigroup& S,
                                  const std::vector<Idx>& t_elems);

// The canonical equivalence bimodule of an enlargement: X = ST as a subset
// of S, <x,y> = x y*, [x,y] = x* y.  The result records X and T inside S
// via x_in_S / t_in_S.
MoritaContext canonical_context(const InverseSemigroup& S,
                                const std::vector<Idx>& t_elems);

// Canonical self-context (S over S, X = S).
MoritaContext identity_context(const InverseSemigroup& S);

// A context certifying strong Morita equivalence of isomorphic semigroups:
// X = A, with B acting through the inverse of the isomorphism.
MoritaContext context_from_isomorphism(const InverseSemigroup& A,
                                       const InverseSemigroup& B,
                                       const std::vector<Idx>& iso);

struct Corner {
  SubSemigroup sub;   // eSe
  Idx e;
  bool full = false;  // SeS = S
};

Corner corner(const InverseSemigroup& S, Idx e);

struct MonoidCriterionResult {
  Idx e = -1;
  std::vector<Idx> iso;  // eSe -> T
};

// Searches for an idempotent e with S = SeS and eSe isomorphic to T; per
// the corollary this decides strong Morita equivalence when T is a monoid.
std::optional<MonoidCriterionResult> monoid_criterion(const InverseSemigroup& S,
                                                      const InverseSemigroup& T);

struct CenterIsomorphism {
  std::vector<Idx> center_S;   // elements of Z(S)
  std::vector<Idx> center_T;   // elements of Z(eSe), as elements of S
  std::vector<Idx> phi;        // position in center_S -> position in center_T
  std::vector<Idx> psi;        // inverse direction
  Idx s1 = -1, s2 = -1;        // least factorization 1 = s1 e s2
};

// phi(s) = ese with inverse psi(t) = s1 t s2; requires S to be a monoid
// with SeS = S.
CenterIsomorphism center_isomorphism(const InverseSemigroup& S, Idx e);

}  // namespace morita
