#pragma once

#include <optional>
#include <vector>

#include "morita/isg.hpp"
#include "morita/poset.hpp"

namespace morita {

// The 5-tuple (S, T, X, <,>, [,]) as flat tables.  All verification is pure
// table arithmetic over these.
struct MoritaContext {
  InverseSemigroup S;
  InverseSemigroup T;
  int m = 0;                 // |X|
  std::vector<Idx> left;     // |S| x m: (s,x) -> s.x
  std::vector<Idx> right;    // m x |T|: (x,t) -> x.t
  std::vector<Idx> ip_S;     // m x m -> S
  std::vector<Idx> ip_T;     // m x m -> T

  // Provenance for contexts whose X and T live inside S (canonical
  // enlargement contexts); empty for synthetic contexts.
  std::vector<Idx> x_in_S;
  std::vector<Idx> t_in_S;

  Idx lact(Idx s, int x) const { return left[static_cast<size_t>(s) * m + x]; }
  Idx ract(int x, Idx t) const { return right[static_cast<size_t>(x) * T.n + t]; }
  Idx ips(int x, int y) const { return ip_S[static_cast<size_t>(x) * m + y]; }
  Idx ipt(int x, int y) const { return ip_T[static_cast<size_t>(x) * m + y]; }
};

void check_context_shape(const MoritaContext& ctx);  // throws Error(BadTable)

// Exhaustive verification of Definition 2.1: actions, commuting,
// surjectivity of both inner products, axioms (1)-(7).  Failures are report
// entries with least witness tuples, never exceptions.
VerificationReport verify_context(const MoritaContext& ctx,
                                  Exec exec = Exec::parallel);

// Exhaustive verification of the derived identities (1)-(10), including
// idempotence of the diagonals and surjectivity of p and q onto the
// idempotent sets.  Throws Error(ContextNotVerified) if verify_context
// does not pass.
VerificationReport derived_identities(const MoritaContext& ctx,
                                      Exec exec = Exec::parallel);

struct HomPair {
  std::vector<Idx> idem_S;  // domain list
  std::vector<Idx> idem_T;
  std::vector<Idx> eps;     // E(S) position -> element of T, e -> [ex,ex]
  std::vector<Idx> eta;     // E(T) position -> element of S, f -> <xf,xf>
};

// The homomorphism pair of an element x; both maps verified to be
// semilattice homomorphisms.
HomPair hom_pair(const MoritaContext& ctx, int x);

enum class Side { left, right };

// One-sided acted set with an anchor map into the idempotents.
struct EtaleSet {
  Side side = Side::left;
  int size = 0;
  int n_acting = 0;
  std::vector<Idx> action;  // left: [s*size+x]; right: [x*n_acting+t]
  std::vector<Idx> anchor;  // size -> idempotent of the acting semigroup
};

// p(x)x = x and p(sx) = s p(x) s* (mirrored for right sets).
VerificationReport validate_etale(const InverseSemigroup& S, const EtaleSet& X);

// x <= y iff x = p(x)y (left) resp. x = y p(x) (right).
Poset etale_order(const InverseSemigroup& S, const EtaleSet& X);

// Meet of y,z given a common upper bound: p(y)z = p(z)y.
Idx etale_meet(const InverseSemigroup& S, const EtaleSet& X, int y, int z);

struct GermSpace {
  int n_classes = 0;
  std::vector<int> class_of;  // carrier -> class
  std::vector<int> rep;       // class -> least carrier member
};

// Classes of the common-lower-bound relation of a poset.
GermSpace germ_space(const Poset& order);

struct EtaleStructures {
  EtaleSet left;    // (X, p), p(x) = <x,x>
  EtaleSet right;   // (X, q), q(x) = [x,x]
  Poset order;      // the common induced order
  VerificationReport checks;
};

// Builds both etale structures of the bimodule, computes the two induced
// orders independently and asserts they coincide (Error(OrdersDiffer) if
// not -- a corrupted context), and checks monotonicity of both inner
// products.
EtaleStructures etale_structures(const MoritaContext& ctx);

struct GermGroupIso {
  GermSpace Y;                     // germs of X
  GroupImage GS, GT;               // maximal group images of S and T
  std::vector<int> left_action;    // |G(S)| x |Y|
  std::vector<int> right_action;   // |Y| x |G(T)|
  std::vector<Idx> iso;            // G(S) -> G(T)
};

// Verifies the germ set is a free transitive left G(S)- and right
// G(T)-set with commuting actions and returns the isomorphism fixed by the
// least representative.  Throws TheoremViolation if freeness/transitivity
// fail (the paper proves them).
GermGroupIso germ_group_isomorphism(const MoritaContext& ctx);

}  // namespace morita
