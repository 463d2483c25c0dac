#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morita/core.hpp"

namespace morita {

struct Poset {
  int n = 0;
  std::vector<std::uint8_t> rel;  // rel[a*n+b] = (a <= b)

  bool le(int a, int b) const { return rel[static_cast<size_t>(a) * n + b]; }
};

bool is_partial_order(const Poset& p);

// Finite lattice given as a poset together with meet/join tables.
struct Lattice {
  Poset order;
  std::vector<int> meet;
  std::vector<int> join;
  // For downset lattices: the member mask of each element (bit i = class i).
  std::vector<std::uint64_t> member_mask;

  int size() const { return order.n; }
};

// Lattice of all downsets of `p` ordered by inclusion (empty set included).
// Requires p.n <= 62.
Lattice downset_lattice(const Poset& p);

// Builds meet/join tables for a poset that is a lattice; throws
// Error(BadTable) if some pair lacks a meet or join.
Lattice lattice_from_poset(const Poset& p);

std::optional<std::vector<int>> poset_isomorphism(const Poset& a,
                                                  const Poset& b);

// Two finite lattices are isomorphic iff their underlying posets are.
inline std::optional<std::vector<int>> lattice_isomorphism(const Lattice& a,
                                                           const Lattice& b) {
  return poset_isomorphism(a.order, b.order);
}

}  // namespace morita
