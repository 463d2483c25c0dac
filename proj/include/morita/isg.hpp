#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morita/core.hpp"
#include "morita/poset.hpp"

namespace morita {

// A finite inverse semigroup as a validated multiplication table.  Elements
// are dense indices 0..n-1; `inv` is always derived by the validator, never
// user supplied, so the uniqueness of inverses is actually checked.
struct InverseSemigroup {
  int n = 0;
  std::vector<Idx> mult;                // n*n, row major
  std::vector<Idx> inv;                 // derived
  std::vector<std::string> names;      // display only; empty or size n

  Idx mul(Idx a, Idx b) const { return mult[static_cast<size_t>(a) * n + b]; }
  Idx mul(Idx a, Idx b, Idx c) const { return mul(mul(a, b), c); }
  Idx star(Idx a) const { return inv[a]; }

  bool is_idempotent(Idx a) const { return mul(a, a) == a; }
  std::vector<Idx> idempotents() const;

  // Natural order on a single pair: s <= t iff s = (s s*) t.
  bool leq(Idx s, Idx t) const { return mul(mul(s, star(s)), t) == s; }

  std::optional<Idx> zero() const;
  std::optional<Idx> identity() const;
  bool is_monoid() const { return identity().has_value(); }
  bool is_group() const;

  std::string name(Idx i) const;
};

// Validates a raw table: associativity (exhaustive), existence and
// uniqueness of inverses, commuting idempotents.  Throws Error with kinds
// NotAssociative(i,j,k), NoInverse(i), NonUniqueInverse(i),
// IdempotentsDoNotCommute(e,f).
InverseSemigroup validate_inverse_semigroup(int n, std::vector<Idx> mult,
                                            std::vector<std::string> names = {},
                                            Exec exec = Exec::parallel);

struct NaturalOrder {
  int n = 0;
  std::vector<std::uint8_t> rel;  // rel[s*n+t] = (s <= t)

  bool leq(Idx s, Idx t) const { return rel[static_cast<size_t>(s) * n + t]; }
};

NaturalOrder natural_order(const InverseSemigroup& S);

// A subsemigroup extracted as a standalone semigroup plus the inclusion.
struct SubSemigroup {
  InverseSemigroup sub;
  std::vector<Idx> elements;  // sub index -> ambient index (sorted)
};

SubSemigroup extract_subsemigroup(const InverseSemigroup& S,
                                  const std::vector<Idx>& elements);

// Least subset of S containing `seed` and closed under mult and inversion.
std::vector<Idx> subsemigroup_closure(const InverseSemigroup& S,
                                      std::vector<Idx> seed);

struct GreenIdealData {
  std::vector<std::vector<Idx>> d_classes;  // partition of E(S)
  std::vector<std::vector<Idx>> j_classes;  // partition of E(S)
  Poset j_poset;                            // on j_classes, by SeS inclusion
  Lattice ideal_lattice;                    // downsets of j_poset
};

GreenIdealData green_and_ideals(const InverseSemigroup& S);

// Principal two-sided ideal S e S (as a sorted element set).
std::vector<Idx> principal_ideal(const InverseSemigroup& S, Idx e);

struct Subgroup {
  InverseSemigroup group;
  std::vector<Idx> elements;  // group index -> ambient index
};

// Maximal subgroup { s : ss* = s*s = e } at an idempotent e.
Subgroup maximal_subgroup(const InverseSemigroup& S, Idx e);

struct GroupImage {
  InverseSemigroup group;
  std::vector<Idx> sigma;  // S index -> group index
};

// Quotient by the least group congruence (germ relation: common lower
// bound in the natural order).
GroupImage maximal_group_image(const InverseSemigroup& S);

struct StructuralProfile {
  std::vector<Idx> idempotents;
  std::optional<Idx> zero;
  std::optional<Idx> identity;
  std::vector<Idx> center;
  GreenIdealData green;
  bool e_unitary = false;
  bool f_inverse_classical = false;  // every sigma-class has a maximum
  bool f_inverse_literal = false;    // every nonempty sigma^-1(g) n eSf has one
  GroupImage max_group;
};

StructuralProfile structural_profile(const InverseSemigroup& S);

// Isomorphism search by signature-pruned backtracking; works for groups as
// a special case.  Returns the map A index -> B index, first in assignment
// order, or nullopt.
std::optional<std::vector<Idx>> semigroup_isomorphism(
    const InverseSemigroup& A, const InverseSemigroup& B);

inline bool isomorphic(const InverseSemigroup& A, const InverseSemigroup& B) {
  return semigroup_isomorphism(A, B).has_value();
}

}  // namespace morita
