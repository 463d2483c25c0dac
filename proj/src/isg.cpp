#include "morita/isg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace morita {

std::vector<Idx> InverseSemigroup::idempotents() const {
  std::vector<Idx> e;
  for (Idx a = 0; a < n; ++a)
    if (is_idempotent(a)) e.push_back(a);
  return e;
}

std::optional<Idx> InverseSemigroup::zero() const {
  for (Idx z = 0; z < n; ++z) {
    bool ok = true;
    for (Idx s = 0; s < n && ok; ++s)
      ok = mul(z, s) == z && mul(s, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<Idx> InverseSemigroup::identity() const {
  for (Idx u = 0; u < n; ++u) {
    bool ok = true;
    for (Idx s = 0; s < n && ok; ++s)
      ok = mul(u, s) == s && mul(s, u) == s;
    if (ok) return u;
  }
  return std::nullopt;
}

bool InverseSemigroup::is_group() const {
  int count = 0;
  for (Idx a = 0; a < n; ++a)
    if (is_idempotent(a)) ++count;
  return count == 1;
}

std::string InverseSemigroup::name(Idx i) const {
  if (!names.empty()) return names[i];
  return "x" + std::to_string(i);
}

InverseSemigroup validate_inverse_semigroup(int n, std::vector<Idx> mult,
                                            std::vector<std::string> names,
                                            Exec exec) {
  if (n <= 0 || mult.size() != static_cast<size_t>(n) * n)
    throw Error(ErrorKind::BadTable, "multiplication table has wrong size");
  if (!names.empty() && names.size() != static_cast<size_t>(n))
    throw Error(ErrorKind::BadTable, "names list has wrong length");
  for (size_t i = 0; i < mult.size(); ++i)
    if (mult[i] < 0 || mult[i] >= n)
      throw Error(ErrorKind::BadTable, "table entry out of range",
                  {static_cast<int>(i / n), static_cast<int>(i % n)});

  InverseSemigroup S;
  S.n = n;
  S.mult = std::move(mult);
  S.names = std::move(names);

  const std::int64_t n64 = n;
  auto assoc = first_failure(n64 * n64 * n64, exec, [&](std::int64_t idx) {
    const Idx i = static_cast<Idx>(idx / (n64 * n64));
    const Idx j = static_cast<Idx>(idx / n64 % n64);
    const Idx k = static_cast<Idx>(idx % n64);
    return S.mul(S.mul(i, j), k) == S.mul(i, S.mul(j, k));
  });
  if (assoc) {
    const Idx i = static_cast<Idx>(*assoc / (n64 * n64));
    const Idx j = static_cast<Idx>(*assoc / n64 % n64);
    const Idx k = static_cast<Idx>(*assoc % n64);
    throw Error(ErrorKind::NotAssociative, "table is not associative", {i, j, k});
  }

  S.inv.assign(n, -1);
  for (Idx s = 0; s < n; ++s) {
    for (Idx t = 0; t < n; ++t) {
      if (S.mul(S.mul(s, t), s) == s && S.mul(S.mul(t, s), t) == t) {
        if (S.inv[s] != -1)
          throw Error(ErrorKind::NonUniqueInverse, "element has several inverses",
                      {s, S.inv[s], t});
        S.inv[s] = t;
      }
    }
    if (S.inv[s] == -1)
      throw Error(ErrorKind::NoInverse, "element has no inverse", {s});
  }

  const auto idem = S.idempotents();
  for (Idx e : idem)
    for (Idx f : idem)
      if (S.mul(e, f) != S.mul(f, e))
        throw Error(ErrorKind::IdempotentsDoNotCommute,
                    "idempotents do not commute", {e, f});
  return S;
}

NaturalOrder natural_order(const InverseSemigroup& S) {
  NaturalOrder ord;
  ord.n = S.n;
  ord.rel.assign(static_cast<size_t>(S.n) * S.n, 0);
  const auto idem = S.idempotents();
  for (Idx s = 0; s < S.n; ++s)
    for (Idx t = 0; t < S.n; ++t)
      for (Idx e : idem)
        if (S.mul(e, t) == s) {
          ord.rel[static_cast<size_t>(s) * S.n + t] = 1;
          break;
        }
  return ord;
}

SubSemigroup extract_subsemigroup(const InverseSemigroup& S,
                                  const std::vector<Idx>& elements) {
  std::vector<Idx> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<int> pos(S.n, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<Idx> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Idx p = S.mul(elems[a], elems[b]);
      if (pos[p] < 0)
        throw Error(ErrorKind::NotClosed, "subset is not closed under product",
                    {elems[a], elems[b]});
      table[static_cast<size_t>(a) * m + b] = pos[p];
    }
  for (Idx e : elems)
    if (pos[S.star(e)] < 0)
      throw Error(ErrorKind::NotClosed, "subset is not closed under inversion", {e});
  std::vector<std::string> names;
  if (!S.names.empty())
    for (Idx e : elems) names.push_back(S.names[e]);
  SubSemigroup sub;
  sub.sub = validate_inverse_semigroup(m, std::move(table), std::move(names));
  sub.elements = std::move(elems);
  return sub;
}

std::vector<Idx> subsemigroup_closure(const InverseSemigroup& S,
                                      std::vector<Idx> seed) {
  if (seed.empty()) throw Error(ErrorKind::BadTable, "empty seed");
  std::vector<std::uint8_t> in(S.n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  for (Idx x : seed) push(x);
  for (size_t i = 0; i < queue.size(); ++i) {
    Idx x = queue[i];
    push(S.star(x));
    for (size_t j = 0; j <= i; ++j) {
      push(S.mul(x, queue[j]));
      push(S.mul(queue[j], x));
    }
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < S.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Idx> principal_ideal(const InverseSemigroup& S, Idx e) {
  std::vector<std::uint8_t> in(S.n, 0);
  for (Idx s = 0; s < S.n; ++s)
    for (Idx t = 0; t < S.n; ++t) in[S.mul(S.mul(s, e), t)] = 1;
  std::vector<Idx> out;
  for (Idx x = 0; x < S.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

GreenIdealData green_and_ideals(const InverseSemigroup& S) {
  const auto idem = S.idempotents();
  const int ne = static_cast<int>(idem.size());

  // e D f iff some s has ss* = e, s*s = f.
  std::vector<int> d_class(ne, -1);
  std::vector<std::vector<std::uint8_t>> d_rel(ne, std::vector<std::uint8_t>(ne, 0));
  std::vector<int> pos(S.n, -1);
  for (int i = 0; i < ne; ++i) pos[idem[i]] = i;
  for (Idx s = 0; s < S.n; ++s) {
    Idx e = S.mul(s, S.star(s)), f = S.mul(S.star(s), s);
    d_rel[pos[e]][pos[f]] = 1;
  }
  GreenIdealData out;
  for (int i = 0; i < ne; ++i) {
    if (d_class[i] >= 0) continue;
    int id = static_cast<int>(out.d_classes.size());
    out.d_classes.push_back({});
    for (int j = 0; j < ne; ++j)
      if (d_rel[i][j] && d_class[j] < 0) {
        d_class[j] = id;
        out.d_classes.back().push_back(idem[j]);
      }
  }

  std::vector<std::vector<Idx>> ideals(ne);
  for (int i = 0; i < ne; ++i) ideals[i] = principal_ideal(S, idem[i]);
  auto subseteq = [&](int i, int j) {
    return std::includes(ideals[j].begin(), ideals[j].end(), ideals[i].begin(),
                         ideals[i].end());
  };
  std::vector<int> j_class(ne, -1);
  for (int i = 0; i < ne; ++i) {
    if (j_class[i] >= 0) continue;
    int id = static_cast<int>(out.j_classes.size());
    out.j_classes.push_back({});
    for (int j = 0; j < ne; ++j)
      if (j_class[j] < 0 && subseteq(i, j) && subseteq(j, i)) {
        j_class[j] = id;
        out.j_classes.back().push_back(idem[j]);
      }
  }
  const int nj = static_cast<int>(out.j_classes.size());
  out.j_poset.n = nj;
  out.j_poset.rel.assign(static_cast<size_t>(nj) * nj, 0);
  for (int a = 0; a < nj; ++a)
    for (int b = 0; b < nj; ++b)
      out.j_poset.rel[static_cast<size_t>(a) * nj + b] =
          subseteq(pos[out.j_classes[a][0]], pos[out.j_classes[b][0]]);
  out.ideal_lattice = downset_lattice(out.j_poset);
  return out;
}

Subgroup maximal_subgroup(const InverseSemigroup& S, Idx e) {
  if (!S.is_idempotent(e))
    throw Error(ErrorKind::NotIdempotent, "base point is not idempotent", {e});
  std::vector<Idx> elems;
  for (Idx s = 0; s < S.n; ++s)
    if (S.mul(s, S.star(s)) == e && S.mul(S.star(s), s) == e) elems.push_back(s);
  auto sub = extract_subsemigroup(S, elems);
  if (!sub.sub.is_group())
    throw TheoremViolation("maximal subgroup is not a group", {e});
  return Subgroup{std::move(sub.sub), std::move(sub.elements)};
}

GroupImage maximal_group_image(const InverseSemigroup& S) {
  const auto ord = natural_order(S);
  // Germ relation: common lower bound in the natural order.
  std::vector<int> parent(S.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Idx s = 0; s < S.n; ++s)
    for (Idx t = 0; t < S.n; ++t)
      for (Idx u = 0; u < S.n; ++u)
        if (ord.leq(u, s) && ord.leq(u, t)) {
          int a = find(s), b = find(t);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
          break;
        }
  // Class ids numbered by least representative.
  std::vector<int> cls(S.n, -1);
  int nc = 0;
  for (Idx s = 0; s < S.n; ++s)
    if (find(s) == s) cls[s] = nc++;
  for (Idx s = 0; s < S.n; ++s) cls[s] = cls[find(s)];
  std::vector<Idx> table(static_cast<size_t>(nc) * nc, -1);
  for (Idx s = 0; s < S.n; ++s)
    for (Idx t = 0; t < S.n; ++t) {
      Idx& slot = table[static_cast<size_t>(cls[s]) * nc + cls[t]];
      Idx v = cls[S.mul(s, t)];
      if (slot == -1) slot = v;
      else if (slot != v)
        throw TheoremViolation("germ quotient product not well defined", {s, t});
    }
  GroupImage out;
  out.group = validate_inverse_semigroup(nc, std::move(table));
  if (!out.group.is_group())
    throw TheoremViolation("germ quotient is not a group");
  out.sigma.assign(cls.begin(), cls.end());
  return out;
}

namespace {

bool slice_has_maximum(const NaturalOrder& ord, const std::vector<Idx>& slice) {
  for (Idx m : slice) {
    bool top = true;
    for (Idx s : slice)
      if (!ord.leq(s, m)) {
        top = false;
        break;
      }
    if (top) return true;
  }
  return false;
}

}  // namespace

StructuralProfile structural_profile(const InverseSemigroup& S) {
  StructuralProfile p;
  p.idempotents = S.idempotents();
  p.zero = S.zero();
  p.identity = S.identity();
  for (Idx s = 0; s < S.n; ++s) {
    bool central = true;
    for (Idx t = 0; t < S.n && central; ++t) central = S.mul(s, t) == S.mul(t, s);
    if (central) p.center.push_back(s);
  }
  p.green = green_and_ideals(S);
  const auto ord = natural_order(S);

  p.e_unitary = true;
  for (Idx e : p.idempotents)
    for (Idx s = 0; s < S.n && p.e_unitary; ++s)
      if (ord.leq(e, s) && !S.is_idempotent(s)) p.e_unitary = false;

  p.max_group = maximal_group_image(S);
  const int ng = p.max_group.group.n;

  std::vector<std::vector<Idx>> sigma_class(ng);
  for (Idx s = 0; s < S.n; ++s) sigma_class[p.max_group.sigma[s]].push_back(s);
  p.f_inverse_classical = true;
  for (const auto& c : sigma_class)
    if (!slice_has_maximum(ord, c)) p.f_inverse_classical = false;

  // Literal reading: every nonempty sigma^-1(g) n eSf has a maximum; empty
  // slices are skipped (maximum of an empty set is undefined).
  p.f_inverse_literal = true;
  for (int g = 0; g < ng && p.f_inverse_literal; ++g)
    for (Idx e : p.idempotents)
      for (Idx f : p.idempotents) {
        std::vector<Idx> slice;
        for (Idx s : sigma_class[g])
          if (S.mul(S.mul(e, s), f) == s) slice.push_back(s);
        if (!slice.empty() && !slice_has_maximum(ord, slice)) {
          p.f_inverse_literal = false;
          break;
        }
      }
  return p;
}

namespace {

std::vector<std::vector<int>> element_signatures(const InverseSemigroup& S) {
  std::vector<std::vector<int>> sig(S.n);
  for (Idx s = 0; s < S.n; ++s) {
    int sqrt_count = 0, left_stab = 0, right_stab = 0;
    for (Idx t = 0; t < S.n; ++t) {
      if (S.mul(t, t) == s) ++sqrt_count;
      if (S.mul(t, s) == s) ++left_stab;
      if (S.mul(s, t) == s) ++right_stab;
    }
    sig[s] = {S.is_idempotent(s) ? 1 : 0, S.star(s) == s ? 1 : 0, sqrt_count,
              left_stab, right_stab};
  }
  return sig;
}

}  // namespace

std::optional<std::vector<Idx>> semigroup_isomorphism(const InverseSemigroup& A,
                                                      const InverseSemigroup& B) {
  if (A.n != B.n) return std::nullopt;
  const int n = A.n;
  auto siga = element_signatures(A);
  auto sigb = element_signatures(B);
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Idx> map(n, -1);
  std::vector<std::uint8_t> used(n, 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (Idx j = 0; j < n; ++j) {
      if (used[j] || siga[i] != sigb[j]) continue;
      map[i] = j;
      used[j] = 1;
      bool consistent = true;
      for (int a = 0; a <= i && consistent; ++a)
        for (int b = 0; b <= i && consistent; ++b) {
          Idx ab = A.mul(a, b);
          if (ab <= i) consistent = B.mul(map[a], map[b]) == map[ab];
        }
      if (consistent && place(i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace morita
