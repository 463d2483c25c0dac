#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morita/isg.hpp"

namespace morita {

// Catalog of example semigroups.  Every constructor output goes through
// validate_inverse_semigroup before it is returned.

InverseSemigroup build_semilattice(int n, const std::vector<Idx>& meet_table,
                                   std::vector<std::string> names = {});

InverseSemigroup build_group(int n, const std::vector<Idx>& table,
                             std::vector<std::string> names = {});

// Brandt semigroup over a group: elements g E_ij plus zero, k^2 |G| + 1 total.
InverseSemigroup build_brandt(const InverseSemigroup& G, int k);

// All partial injections on k points; guard k <= 4.
InverseSemigroup build_symmetric_inverse_monoid(int k);

// E x G with product (e,g)(f,h) = (e ^ g.f, gh).  `action[g*|E|+e]` gives
// g.e and must be a semilattice automorphism for every g.  The identities
// the paper quotes for this product are asserted at build time.
InverseSemigroup build_semidirect_product(const InverseSemigroup& E,
                                          const InverseSemigroup& G,
                                          const std::vector<Idx>& action);

struct McAlisterTriple {
  Poset X;
  std::vector<int> Y;           // subset of X
  InverseSemigroup G;
  std::vector<Idx> action;      // action[g*|X|+x] = g.x, order isomorphisms
};

// P(X, Y, G): pairs (y, g) with y in Y and g^-1 y in Y, product
// (y,g)(y',g') = (y ^ g.y', gg').
InverseSemigroup build_mcalister_p(const McAlisterTriple& t);

// P(P_fin(G), {A : 1 in A}, G); guard |G| <= 4.
InverseSemigroup build_birget_rhodes(const InverseSemigroup& G);

// P_fin(G) as a semilattice (nonempty subsets, reverse inclusion, meet =
// union), with the translation action of G.  Poset elements are ordered by
// subset bitmask.
InverseSemigroup build_pfin_semilattice(const InverseSemigroup& G);
std::vector<Idx> pfin_translation_action(const InverseSemigroup& G);

struct MatrixEnlargement {
  InverseSemigroup B;
  std::vector<Idx> embedding;  // S index -> B index, s -> s E_11
};

// B_X(S) for an inverse monoid with zero: matrices s E_ij plus zero.
MatrixEnlargement build_matrix_enlargement(const InverseSemigroup& S, int k);

InverseSemigroup adjoin_zero(const InverseSemigroup& S);
InverseSemigroup adjoin_identity(const InverseSemigroup& S);
InverseSemigroup direct_product(const InverseSemigroup& A,
                                const InverseSemigroup& B);

// Named atoms for the CLI construction mini-language and the test catalog:
// triv, Z2..Z7, V4, S3, chain2..chain7, SL2, SL2z, vee, diamond, claw,
// broom, tallvee, pfinZ2, pfinZ3.
std::optional<InverseSemigroup> builtin_semigroup(const std::string& name);

// Construction expressions: `brandt(triv,2)`, `semilattice(chain3)`,
// `sdp(diamond,Z2,swap)`, `br(Z2)`, `mat(SL2z,2)`, `sym(3)`,
// `adjzero(...)`, `adjone(...)`, `prod(...,...)`, or a bare atom name.
InverseSemigroup build_from_expression(const std::string& expr);

// Size guard applied by expression-driven construction; CLI-configurable.
extern int construction_size_limit;

}  // namespace morita
