#include "morita/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

namespace morita {

int construction_size_limit = 200;

namespace {

std::function<void(const std::string&)> warning_handler =
    [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };

void warn(const std::string& msg) { warning_handler(msg); }

void check_size(int n, const std::string& what) {
  if (n > construction_size_limit)
    throw Error(ErrorKind::TooLarge,
                what + " would have " + std::to_string(n) +
                    " elements (limit " + std::to_string(construction_size_limit) + ")");
}

}  // namespace

InverseSemigroup build_semilattice(int n, const std::vector<Idx>& meet_table,
                                   std::vector<std::string> names) {
  if (n <= 0 || meet_table.size() != static_cast<size_t>(n) * n)
    throw Error(ErrorKind::NotASemilattice, "meet table has wrong size");
  auto at = [&](Idx a, Idx b) { return meet_table[static_cast<size_t>(a) * n + b]; };
  for (Idx a = 0; a < n; ++a) {
    if (at(a, a) != a)
      throw Error(ErrorKind::NotASemilattice, "table is not idempotent", {a});
    for (Idx b = 0; b < n; ++b) {
      if (at(a, b) != at(b, a))
        throw Error(ErrorKind::NotASemilattice, "table is not commutative", {a, b});
      for (Idx c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotASemilattice, "table is not associative", {a, b, c});
    }
  }
  return validate_inverse_semigroup(n, meet_table, std::move(names));
}

InverseSemigroup build_group(int n, const std::vector<Idx>& table,
                             std::vector<std::string> names) {
  auto S = validate_inverse_semigroup(n, table, std::move(names));
  if (!S.is_group()) throw Error(ErrorKind::NotAGroup, "table is not a group");
  return S;
}

InverseSemigroup build_brandt(const InverseSemigroup& G, int k) {
  if (k < 1) throw Error(ErrorKind::BadTable, "brandt needs k >= 1");
  const int ng = G.n;
  const int n = k * k * ng + 1;
  check_size(n, "Brandt semigroup");
  const Idx zero = n - 1;
  auto id = [&](int i, int j, Idx g) { return (i * k + j) * ng + g; };
  std::vector<Idx> table(static_cast<size_t>(n) * n, zero);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (Idx g = 0; g < ng; ++g)
        for (int l = 0; l < k; ++l)
          for (Idx h = 0; h < ng; ++h)
            table[static_cast<size_t>(id(i, j, g)) * n + id(j, l, h)] =
                id(i, l, G.mul(g, h));
  std::vector<std::string> names(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (Idx g = 0; g < ng; ++g) {
        std::string base = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        names[id(i, j, g)] = ng == 1 ? base : G.name(g) + base;
      }
  names[zero] = "0";
  return validate_inverse_semigroup(n, std::move(table), std::move(names));
}

InverseSemigroup build_symmetric_inverse_monoid(int k) {
  if (k < 1) throw Error(ErrorKind::BadTable, "sym needs k >= 1");
  if (k > 4) throw Error(ErrorKind::TooLarge, "symmetric inverse monoid guard is k <= 4");
  // Partial injections as vectors over {-1, 0..k-1}, enumerated in
  // lexicographic order.
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(k, -1);
  std::function<void(int, unsigned)> gen = [&](int pos, unsigned used) {
    if (pos == k) {
      maps.push_back(cur);
      return;
    }
    cur[pos] = -1;
    gen(pos + 1, used);
    for (int v = 0; v < k; ++v)
      if (!(used >> v & 1)) {
        cur[pos] = v;
        gen(pos + 1, used | (1u << v));
        cur[pos] = -1;
      }
  };
  gen(0, 0);
  std::sort(maps.begin(), maps.end());
  std::map<std::vector<int>, Idx> index;
  for (size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<Idx>(i);
  const int n = static_cast<int>(maps.size());
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(k, -1);
      for (int x = 0; x < k; ++x)
        if (maps[b][x] >= 0) comp[x] = maps[a][maps[b][x]];
      table[static_cast<size_t>(a) * n + b] = index.at(comp);
    }
  return validate_inverse_semigroup(n, std::move(table));
}

InverseSemigroup build_semidirect_product(const InverseSemigroup& E,
                                          const InverseSemigroup& G,
                                          const std::vector<Idx>& action) {
  const int ne = E.n, ng = G.n;
  for (Idx e = 0; e < ne; ++e)
    if (!E.is_idempotent(e))
      throw Error(ErrorKind::NotASemilattice, "sdp base is not a semilattice", {e});
  if (action.size() != static_cast<size_t>(ng) * ne)
    throw Error(ErrorKind::NotAnAction, "action table has wrong size");
  auto act = [&](Idx g, Idx e) { return action[static_cast<size_t>(g) * ne + e]; };
  const Idx one = G.identity().value();
  for (Idx e = 0; e < ne; ++e)
    if (act(one, e) != e)
      throw Error(ErrorKind::NotAnAction, "identity does not act trivially", {e});
  for (Idx g = 0; g < ng; ++g)
    for (Idx h = 0; h < ng; ++h)
      for (Idx e = 0; e < ne; ++e)
        if (act(G.mul(g, h), e) != act(g, act(h, e)))
          throw Error(ErrorKind::NotAnAction, "action is not compatible", {g, h, e});
  for (Idx g = 0; g < ng; ++g)
    for (Idx e = 0; e < ne; ++e)
      for (Idx f = 0; f < ne; ++f)
        if (act(g, E.mul(e, f)) != E.mul(act(g, e), act(g, f)))
          throw Error(ErrorKind::NotAutomorphism,
                      "action does not preserve meets", {g, e, f});

  const int n = ne * ng;
  check_size(n, "semidirect product");
  auto id = [&](Idx e, Idx g) { return e * ng + g; };
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  for (Idx e = 0; e < ne; ++e)
    for (Idx g = 0; g < ng; ++g)
      for (Idx f = 0; f < ne; ++f)
        for (Idx h = 0; h < ng; ++h)
          table[static_cast<size_t>(id(e, g)) * n + id(f, h)] =
              id(E.mul(e, act(g, f)), G.mul(g, h));
  std::vector<std::string> names(n);
  for (Idx e = 0; e < ne; ++e)
    for (Idx g = 0; g < ng; ++g) names[id(e, g)] = "(" + E.name(e) + "," + G.name(g) + ")";
  auto S = validate_inverse_semigroup(n, std::move(table), std::move(names));

  // The paper's quoted identities for E x| G, asserted rather than trusted.
  for (Idx e = 0; e < ne; ++e)
    for (Idx g = 0; g < ng; ++g) {
      Idx s = id(e, g);
      if (S.mul(S.star(s), s) != id(act(G.star(g), e), one))
        throw TheoremViolation("(e,g)*(e,g) != (g^-1 e, 1)", {e, g});
      if (!S.is_idempotent(s) != (g != one))
        throw TheoremViolation("idempotents of E x| G are not E x {1}", {e, g});
    }
  const auto ord = natural_order(S);
  for (Idx e = 0; e < ne; ++e)
    for (Idx g = 0; g < ng; ++g)
      for (Idx f = 0; f < ne; ++f)
        for (Idx h = 0; h < ng; ++h) {
          bool product_order = g == h && E.mul(e, f) == e;
          if (ord.leq(id(e, g), id(f, h)) != product_order)
            throw TheoremViolation("natural order on E x| G is not the product order",
                                   {e, g, f, h});
        }
  return S;
}

InverseSemigroup build_mcalister_p(const McAlisterTriple& t) {
  const int nx = t.X.n, ng = t.G.n;
  auto fail = [](const std::string& reason, std::vector<int> w = {}) {
    throw Error(ErrorKind::InvalidTriple, "invalid McAlister triple: " + reason,
                std::move(w));
  };
  if (!is_partial_order(t.X)) fail("X is not a poset");
  if (t.Y.empty()) fail("Y is empty");
  std::vector<std::uint8_t> inY(nx, 0);
  for (int y : t.Y) inY[y] = 1;
  for (int y : t.Y)
    for (int x = 0; x < nx; ++x)
      if (t.X.le(x, y) && !inY[x]) fail("Y is not a downset", {x, y});
  if (t.action.size() != static_cast<size_t>(ng) * nx) fail("action table has wrong size");
  auto act = [&](Idx g, int x) { return t.action[static_cast<size_t>(g) * nx + x]; };
  const Idx one = t.G.identity().value();
  for (int x = 0; x < nx; ++x)
    if (act(one, x) != x) fail("identity does not act trivially", {x});
  for (Idx g = 0; g < ng; ++g) {
    for (Idx h = 0; h < ng; ++h)
      for (int x = 0; x < nx; ++x)
        if (act(t.G.mul(g, h), x) != act(g, act(h, x)))
          fail("action is not compatible", {g, h, x});
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < nx; ++y)
        if (t.X.le(x, y) != t.X.le(act(g, x), act(g, y)))
          fail("action is not by order isomorphisms", {g, x, y});
  }
  // Meet of a pair within the poset X, if any.
  auto meet_in_X = [&](int a, int b) -> int {
    int m = -1;
    for (int c = 0; c < nx; ++c)
      if (t.X.le(c, a) && t.X.le(c, b) && (m < 0 || t.X.le(m, c))) m = c;
    if (m < 0) return -1;
    for (int c = 0; c < nx; ++c)
      if (t.X.le(c, a) && t.X.le(c, b) && !t.X.le(c, m)) return -1;
    return m;
  };
  for (int y : t.Y)
    for (int y2 : t.Y) {
      int m = meet_in_X(y, y2);
      if (m < 0 || !inY[m]) fail("Y lacks a binary meet", {y, y2});
    }
  for (int x = 0; x < nx; ++x) {
    bool covered = false;
    for (Idx g = 0; g < ng && !covered; ++g)
      for (int y : t.Y)
        if (act(g, y) == x) {
          covered = true;
          break;
        }
    if (!covered) fail("G.Y does not cover X", {x});
  }
  for (Idx g = 0; g < ng; ++g) {
    bool meets = false;
    for (int y : t.Y)
      if (inY[act(g, y)]) {
        meets = true;
        break;
      }
    if (!meets) fail("gY does not meet Y", {g});
  }

  std::vector<std::pair<int, Idx>> carrier;  // (y, g) with g^-1 y in Y
  std::vector<int> sortedY = t.Y;
  std::sort(sortedY.begin(), sortedY.end());
  for (int y : sortedY)
    for (Idx g = 0; g < ng; ++g)
      if (inY[act(t.G.star(g), y)]) carrier.emplace_back(y, g);
  const int n = static_cast<int>(carrier.size());
  check_size(n, "P-semigroup");
  auto index_of = [&](int y, Idx g) {
    for (int i = 0; i < n; ++i)
      if (carrier[i] == std::make_pair(y, g)) return i;
    return -1;
  };
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [y, g] = carrier[a];
      auto [y2, g2] = carrier[b];
      int m = meet_in_X(y, act(g, y2));
      if (m < 0) fail("product meet does not exist", {a, b});
      int p = index_of(m, t.G.mul(g, g2));
      if (p < 0) fail("product leaves the carrier", {a, b});
      table[static_cast<size_t>(a) * n + b] = p;
    }
  auto S = validate_inverse_semigroup(n, std::move(table));

  auto profile_ok = [&]() {
    auto prof = structural_profile(S);
    if (!prof.e_unitary) return false;
    // E(S) = Y x {1} as posets.
    Poset eposet;
    const auto idem = S.idempotents();
    eposet.n = static_cast<int>(idem.size());
    eposet.rel.assign(static_cast<size_t>(eposet.n) * eposet.n, 0);
    const auto ord = natural_order(S);
    for (int a = 0; a < eposet.n; ++a)
      for (int b = 0; b < eposet.n; ++b)
        eposet.rel[static_cast<size_t>(a) * eposet.n + b] = ord.leq(idem[a], idem[b]);
    Poset yposet;
    yposet.n = static_cast<int>(sortedY.size());
    yposet.rel.assign(static_cast<size_t>(yposet.n) * yposet.n, 0);
    for (int a = 0; a < yposet.n; ++a)
      for (int b = 0; b < yposet.n; ++b)
        yposet.rel[static_cast<size_t>(a) * yposet.n + b] =
            t.X.le(sortedY[a], sortedY[b]);
    if (!poset_isomorphism(eposet, yposet)) return false;
    return isomorphic(prof.max_group.group, t.G);
  };
  if (!profile_ok())
    throw TheoremViolation("P-semigroup is not E-unitary over (Y, G)");
  return S;
}

namespace {

std::vector<int> pfin_masks(int ng) {
  std::vector<int> masks;
  for (int m = 1; m < (1 << ng); ++m) masks.push_back(m);
  return masks;
}

std::string mask_name(const InverseSemigroup& G, int mask) {
  std::string s = "{";
  bool first = true;
  for (Idx g = 0; g < G.n; ++g)
    if (mask >> g & 1) {
      if (!first) s += ",";
      s += G.name(g);
      first = false;
    }
  return s + "}";
}

}  // namespace

InverseSemigroup build_pfin_semilattice(const InverseSemigroup& G) {
  const auto masks = pfin_masks(G.n);
  const int n = static_cast<int>(masks.size());
  check_size(n, "P_fin(G)");
  std::vector<Idx> meet(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      meet[static_cast<size_t>(a) * n + b] = (masks[a] | masks[b]) - 1;
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) names[a] = mask_name(G, masks[a]);
  return build_semilattice(n, meet, std::move(names));
}

std::vector<Idx> pfin_translation_action(const InverseSemigroup& G) {
  const auto masks = pfin_masks(G.n);
  const int n = static_cast<int>(masks.size());
  std::vector<Idx> action(static_cast<size_t>(G.n) * n);
  for (Idx g = 0; g < G.n; ++g)
    for (int a = 0; a < n; ++a) {
      int image = 0;
      for (Idx x = 0; x < G.n; ++x)
        if (masks[a] >> x & 1) image |= 1 << G.mul(g, x);
      action[static_cast<size_t>(g) * n + a] = image - 1;
    }
  return action;
}

InverseSemigroup build_birget_rhodes(const InverseSemigroup& G) {
  if (!G.is_group()) throw Error(ErrorKind::NotAGroup, "br needs a group");
  if (G.n > 4)
    throw Error(ErrorKind::TooLarge, "Birget-Rhodes guard is |G| <= 4");
  const auto masks = pfin_masks(G.n);
  const int nx = static_cast<int>(masks.size());
  McAlisterTriple t;
  t.X.n = nx;
  t.X.rel.assign(static_cast<size_t>(nx) * nx, 0);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      t.X.rel[static_cast<size_t>(a) * nx + b] = (masks[a] & masks[b]) == masks[b];
  const Idx one = G.identity().value();
  for (int a = 0; a < nx; ++a)
    if (masks[a] >> one & 1) t.Y.push_back(a);
  t.G = G;
  t.action = pfin_translation_action(G);
  return build_mcalister_p(t);
}

MatrixEnlargement build_matrix_enlargement(const InverseSemigroup& S, int k) {
  const auto z = S.zero();
  if (!z) throw Error(ErrorKind::NoZero, "matrix enlargement needs a zero");
  if (!S.identity()) throw Error(ErrorKind::NoIdentity, "matrix enlargement needs an identity");
  if (k < 1) throw Error(ErrorKind::BadTable, "matrix enlargement needs k >= 1");
  std::vector<Idx> nonzero;
  for (Idx s = 0; s < S.n; ++s)
    if (s != *z) nonzero.push_back(s);
  const int ns = static_cast<int>(nonzero.size());
  std::vector<int> rank(S.n, -1);
  for (int i = 0; i < ns; ++i) rank[nonzero[i]] = i;
  const int n = k * k * ns + 1;
  check_size(n, "matrix enlargement");
  const Idx zero = n - 1;
  auto id = [&](int i, int j, Idx s) { return (i * k + j) * ns + rank[s]; };
  std::vector<Idx> table(static_cast<size_t>(n) * n, zero);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (Idx s : nonzero)
        for (int l = 0; l < k; ++l)
          for (Idx u : nonzero) {
            Idx p = S.mul(s, u);
            if (p != *z)
              table[static_cast<size_t>(id(i, j, s)) * n + id(j, l, u)] = id(i, l, p);
          }
  std::vector<std::string> names(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (Idx s : nonzero)
        names[id(i, j, s)] =
            S.name(s) + "E" + std::to_string(i + 1) + std::to_string(j + 1);
  names[zero] = "0";
  MatrixEnlargement out;
  out.B = validate_inverse_semigroup(n, std::move(table), std::move(names));
  out.embedding.assign(S.n, zero);
  for (Idx s : nonzero) out.embedding[s] = id(0, 0, s);
  return out;
}

InverseSemigroup adjoin_zero(const InverseSemigroup& S) {
  if (S.n >= 2 && S.zero()) {
    warn("adjoin_zero: semigroup already has a zero; reusing it");
    return S;
  }
  const int n = S.n + 1;
  const Idx zero = n - 1;
  std::vector<Idx> table(static_cast<size_t>(n) * n, zero);
  for (Idx a = 0; a < S.n; ++a)
    for (Idx b = 0; b < S.n; ++b) table[static_cast<size_t>(a) * n + b] = S.mul(a, b);
  std::vector<std::string> names;
  if (!S.names.empty()) {
    names = S.names;
    names.push_back("0");
  }
  return validate_inverse_semigroup(n, std::move(table), std::move(names));
}

InverseSemigroup adjoin_identity(const InverseSemigroup& S) {
  if (S.n >= 2 && S.identity()) {
    warn("adjoin_identity: semigroup already has an identity; reusing it");
    return S;
  }
  const int n = S.n + 1;
  const Idx one = n - 1;
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < S.n; ++a)
    for (Idx b = 0; b < S.n; ++b) table[static_cast<size_t>(a) * n + b] = S.mul(a, b);
  for (Idx a = 0; a < n; ++a) {
    table[static_cast<size_t>(a) * n + one] = a;
    table[static_cast<size_t>(one) * n + a] = a;
  }
  std::vector<std::string> names;
  if (!S.names.empty()) {
    names = S.names;
    names.push_back("1");
  }
  return validate_inverse_semigroup(n, std::move(table), std::move(names));
}

InverseSemigroup direct_product(const InverseSemigroup& A,
                                const InverseSemigroup& B) {
  const int n = A.n * B.n;
  check_size(n, "direct product");
  auto id = [&](Idx a, Idx b) { return a * B.n + b; };
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < A.n; ++a)
    for (Idx b = 0; b < B.n; ++b)
      for (Idx c = 0; c < A.n; ++c)
        for (Idx d = 0; d < B.n; ++d)
          table[static_cast<size_t>(id(a, b)) * n + id(c, d)] =
              id(A.mul(a, c), B.mul(b, d));
  return validate_inverse_semigroup(n, std::move(table));
}

namespace {

InverseSemigroup cyclic_group(int n) {
  std::vector<Idx> table(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (Idx a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (Idx b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return build_group(n, table, std::move(names));
}

InverseSemigroup klein_group() {
  std::vector<Idx> table(16);
  for (Idx a = 0; a < 4; ++a)
    for (Idx b = 0; b < 4; ++b) table[static_cast<size_t>(a) * 4 + b] = a ^ b;
  return build_group(4, table, {"1", "a", "b", "ab"});
}

InverseSemigroup sym3_group() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<Idx>(i);
    return Idx{-1};
  };
  std::vector<Idx> table(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      table[static_cast<size_t>(a) * 6 + b] = index_of(comp);
    }
  return build_group(6, table);
}

InverseSemigroup chain_semilattice(int n) {
  std::vector<Idx> meet(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (Idx a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (Idx b = 0; b < n; ++b) meet[static_cast<size_t>(a) * n + b] = std::min(a, b);
  }
  return build_semilattice(n, meet, std::move(names));
}

InverseSemigroup semilattice_from_order(int n, const std::vector<std::pair<int, int>>& le,
                                        std::vector<std::string> names) {
  Poset p;
  p.n = n;
  p.rel.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) p.rel[static_cast<size_t>(a) * n + a] = 1;
  for (auto [a, b] : le) p.rel[static_cast<size_t>(a) * n + b] = 1;
  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.le(a, k) && p.le(k, b)) p.rel[static_cast<size_t>(a) * n + b] = 1;
  std::vector<Idx> meet(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = -1;
      for (int c = 0; c < n; ++c)
        if (p.le(c, a) && p.le(c, b) && (m < 0 || p.le(m, c))) m = c;
      meet[static_cast<size_t>(a) * n + b] = m;
    }
  return build_semilattice(n, meet, std::move(names));
}

}  // namespace

std::optional<InverseSemigroup> builtin_semigroup(const std::string& name) {
  if (name == "triv") return cyclic_group(1);
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z5") return cyclic_group(5);
  if (name == "Z6") return cyclic_group(6);
  if (name == "Z7") return cyclic_group(7);
  if (name == "V4") return klein_group();
  if (name == "S3") return sym3_group();
  if (name == "SL2" || name == "SL2z" || name == "chain2") return chain_semilattice(2);
  if (name == "chain3") return chain_semilattice(3);
  if (name == "chain4") return chain_semilattice(4);
  if (name == "chain5") return chain_semilattice(5);
  if (name == "chain6") return chain_semilattice(6);
  if (name == "chain7") return chain_semilattice(7);
  if (name == "vee")
    return semilattice_from_order(3, {{0, 1}, {0, 2}}, {"0", "a", "b"});
  if (name == "diamond")
    return semilattice_from_order(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                  {"0", "a", "b", "1"});
  if (name == "claw")
    return semilattice_from_order(4, {{0, 1}, {0, 2}, {0, 3}}, {"0", "a", "b", "c"});
  if (name == "broom")
    return semilattice_from_order(4, {{0, 1}, {1, 2}, {0, 3}}, {"0", "a", "c", "b"});
  if (name == "tallvee")
    return semilattice_from_order(4, {{0, 1}, {1, 2}, {1, 3}}, {"0", "m", "a", "b"});
  if (name == "pfinZ2") return build_pfin_semilattice(cyclic_group(2));
  if (name == "pfinZ3") return build_pfin_semilattice(cyclic_group(3));
  if (name == "B5") return build_brandt(cyclic_group(1), 2);
  return std::nullopt;
}

namespace {

struct ExprParser {
  const std::string& text;
  size_t pos = 0;

  explicit ExprParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(1, static_cast<int>(pos) + 1, expected);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("identifier");
    return text.substr(start, pos - start);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("integer");
    return std::stoi(text.substr(start, pos - start));
  }

  InverseSemigroup atom(const std::string& name) {
    auto s = builtin_semigroup(name);
    if (!s) fail("known semigroup name, got '" + name + "'");
    return *s;
  }

  std::vector<Idx> resolve_action(const std::string& name, const InverseSemigroup& E,
                                  const InverseSemigroup& G) {
    if (name == "trivial") {
      std::vector<Idx> a(static_cast<size_t>(G.n) * E.n);
      for (Idx g = 0; g < G.n; ++g)
        for (Idx e = 0; e < E.n; ++e) a[static_cast<size_t>(g) * E.n + e] = e;
      return a;
    }
    if (name == "swap") {
      if (G.n != 2) fail("swap action needs a 2-element group");
      // The unique nontrivial meet-automorphism of order 2.
      std::vector<std::vector<Idx>> autos;
      std::vector<Idx> perm(E.n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (Idx a = 0; a < E.n && ok; ++a)
          for (Idx b = 0; b < E.n && ok; ++b)
            ok = perm[E.mul(a, b)] == E.mul(perm[a], perm[b]);
        bool involutive = true;
        for (Idx a = 0; a < E.n; ++a)
          if (perm[perm[a]] != a) involutive = false;
        bool trivial = true;
        for (Idx a = 0; a < E.n; ++a)
          if (perm[a] != a) trivial = false;
        if (ok && involutive && !trivial) autos.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (autos.size() != 1) fail("semilattice with a unique order-2 automorphism");
      std::vector<Idx> a(static_cast<size_t>(2) * E.n);
      for (Idx e = 0; e < E.n; ++e) {
        a[e] = e;
        a[static_cast<size_t>(E.n) + e] = autos[0][e];
      }
      return a;
    }
    if (name == "shift") {
      auto pf = build_pfin_semilattice(G);
      if (pf.n != E.n || pf.mult != E.mult)
        fail("shift action needs E = pfin of the group");
      return pfin_translation_action(G);
    }
    fail("action name (trivial|swap|shift)");
  }

  InverseSemigroup expr() {
    std::string head = ident();
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') return atom(head);
    eat('(');
    InverseSemigroup out;
    if (head == "brandt") {
      auto G = expr();
      if (!eat(',')) fail("','");
      int k = integer();
      out = build_brandt(G, k);
    } else if (head == "semilattice") {
      auto E = expr();
      for (Idx e = 0; e < E.n; ++e)
        if (!E.is_idempotent(e)) fail("a semilattice argument");
      out = E;
    } else if (head == "sym") {
      out = build_symmetric_inverse_monoid(integer());
    } else if (head == "sdp") {
      auto E = expr();
      if (!eat(',')) fail("','");
      auto G = expr();
      if (!eat(',')) fail("','");
      auto action_name = ident();
      out = build_semidirect_product(E, G, resolve_action(action_name, E, G));
    } else if (head == "br") {
      out = build_birget_rhodes(expr());
    } else if (head == "mat") {
      auto S = expr();
      if (!eat(',')) fail("','");
      out = build_matrix_enlargement(S, integer()).B;
    } else if (head == "adjzero") {
      out = adjoin_zero(expr());
    } else if (head == "adjone") {
      out = adjoin_identity(expr());
    } else if (head == "prod") {
      auto A = expr();
      if (!eat(',')) fail("','");
      out = direct_product(A, expr());
    } else if (head == "pfin") {
      out = build_pfin_semilattice(expr());
    } else {
      fail("construction name");
    }
    if (!eat(')')) fail("')'");
    return out;
  }
};

}  // namespace

InverseSemigroup build_from_expression(const std::string& expr) {
  ExprParser p(expr);
  auto out = p.expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("end of expression");
  return out;
}

}  // namespace morita
