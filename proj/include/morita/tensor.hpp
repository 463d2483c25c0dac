#pragma once

#include <utility>
#include <vector>

#include "morita/bimodule.hpp"

namespace morita {

// X x Y modulo the least equivalence with (xt, y) ~ (x, ty).  Classes are
// numbered by their least pair in lexicographic order.
struct TensorProduct {
  int nx = 0, ny = 0;
  GermSpace classes;  // over flattened pairs x*ny + y

  int pair_index(int x, int y) const { return x * ny + y; }
  int class_of(int x, int y) const { return classes.class_of[pair_index(x, y)]; }
  std::pair<int, int> rep(int cls) const {
    int p = classes.rep[cls];
    return {p / ny, p % ny};
  }
  int size() const { return classes.n_classes; }
};

// right_action: nx x |T| table (x,t) -> x; left_action: |T| x ny table
// (t,y) -> y.  Both actions are checked for associativity over T
// (Error(NotAnAction) otherwise).
TensorProduct tensor_product(const InverseSemigroup& T, int nx,
                             const std::vector<Idx>& right_action, int ny,
                             const std::vector<Idx>& left_action);

// Universal property spot-check: a T-bilinear map (given as an nx x ny
// value table) must be constant on tensor classes.
VerificationReport verify_bilinear_factors(const InverseSemigroup& T, int nx,
                                           const std::vector<Idx>& right_action,
                                           int ny, const std::vector<Idx>& left_action,
                                           const std::vector<int>& values);

struct ComposedContext {
  MoritaContext ctx;   // (S, U, X tensor_T Y)
  TensorProduct tp;
};

// Composition of (S,T,X) and (T,U,Y); the middle semigroups must agree
// table-for-table (Error(MiddleMismatch)).  Both inputs must verify; the
// well-definedness of the composite inner products and actions is checked
// on every representative pair (TheoremViolation on failure, the paper
// proves it cannot happen), and the output is re-verified.
ComposedContext compose_contexts(const MoritaContext& a, const MoritaContext& b);

struct SelfTensor {
  TensorProduct tp;            // X tensor_T X, with tx = xt*
  std::vector<Idx> class_to_S; // the bijection class -> <x,y>
};

// The bijection X tensor_T X -> S, with the induced product
// (x@y)(x'@y') = x[y,x'] @ y' and involution (x@y)* = y@x verified to
// match the tables of S.
SelfTensor self_tensor_isomorphism(const MoritaContext& ctx);

// Same statement on the T side: X tensor_S X -> T.
SelfTensor self_tensor_isomorphism_dual(const MoritaContext& ctx);

// Switches the roles of the two inner products, acting through the
// involutions.  opposite(opposite(ctx)) == ctx table-for-table.
MoritaContext opposite_context(const MoritaContext& ctx);

}  // namespace morita
