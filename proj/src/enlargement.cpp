#include "morita/enlargement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace morita {

namespace {

std::set<Idx> triple_product(const InverseSemigroup& S, const std::vector<Idx>& A,
                             const std::vector<Idx>& B, const std::vector<Idx>& C) {
  std::set<Idx> ab;
  for (Idx a : A)
    for (Idx b : B) ab.insert(S.mul(a, b));
  std::set<Idx> out;
  for (Idx p : ab)
    for (Idx c : C) out.insert(S.mul(p, c));
  return out;
}

std::vector<Idx> all_elements(const InverseSemigroup& S) {
  std::vector<Idx> v(S.n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

EnlargementWitness is_enlargement(const InverseSemigroup& S,
                                  const std::vector<Idx>& t_elems) {
  auto T = extract_subsemigroup(S, t_elems);  // throws NotClosed
  const auto all = all_elements(S);
  std::vector<Idx> idem_T;
  for (Idx t : T.elements)
    if (S.is_idempotent(t)) idem_T.push_back(t);

  EnlargementWitness w;
  w.t_elems = T.elements;
  auto sts = triple_product(S, all, T.elements, all);
  auto tst = triple_product(S, T.elements, all, T.elements);
  auto ists = triple_product(S, all, idem_T, all);
  auto itst = triple_product(S, idem_T, all, idem_T);
  std::set<Idx> s_set(all.begin(), all.end());
  std::set<Idx> t_set(T.elements.begin(), T.elements.end());
  w.sts_is_s = sts == s_set;
  w.tst_is_t = tst == t_set;
  w.idem_sts = ists == s_set;
  w.idem_tst = itst == t_set;
  if (w.sts_is_s != w.idem_sts || w.tst_is_t != w.idem_tst)
    throw TheoremViolation("element and idempotent enlargement forms disagree");
  return w;
}

MoritaContext canonical_context(const InverseSemigroup& S,
                                const std::vector<Idx>& t_elems) {
  auto w = is_enlargement(S, t_elems);
  if (!w.holds())
    throw Error(ErrorKind::NotEnlargement,
                w.sts_is_s ? "TST != T" : "STS != S");
  auto T = extract_subsemigroup(S, w.t_elems);

  // X = ST, a subset of S; duplicates collapse.
  std::set<Idx> xs;
  for (Idx s = 0; s < S.n; ++s)
    for (Idx t : T.elements) xs.insert(S.mul(s, t));
  std::vector<Idx> X(xs.begin(), xs.end());
  std::vector<int> xpos(S.n, -1);
  for (size_t i = 0; i < X.size(); ++i) xpos[X[i]] = static_cast<int>(i);
  std::vector<int> tpos(S.n, -1);
  for (size_t i = 0; i < T.elements.size(); ++i)
    tpos[T.elements[i]] = static_cast<int>(i);

  MoritaContext ctx;
  ctx.S = S;
  ctx.T = T.sub;
  ctx.m = static_cast<int>(X.size());
  ctx.x_in_S = X;
  ctx.t_in_S = T.elements;
  ctx.left.assign(static_cast<size_t>(S.n) * ctx.m, -1);
  ctx.right.assign(static_cast<size_t>(ctx.m) * T.sub.n, -1);
  ctx.ip_S.assign(static_cast<size_t>(ctx.m) * ctx.m, -1);
  ctx.ip_T.assign(static_cast<size_t>(ctx.m) * ctx.m, -1);
  for (Idx s = 0; s < S.n; ++s)
    for (int x = 0; x < ctx.m; ++x) {
      int y = xpos[S.mul(s, X[x])];
      if (y < 0) throw TheoremViolation("ST is not closed under the left action");
      ctx.left[static_cast<size_t>(s) * ctx.m + x] = y;
    }
  for (int x = 0; x < ctx.m; ++x)
    for (Idx t = 0; t < T.sub.n; ++t) {
      int y = xpos[S.mul(X[x], T.elements[t])];
      if (y < 0) throw TheoremViolation("ST is not closed under the right action");
      ctx.right[static_cast<size_t>(x) * T.sub.n + t] = y;
    }
  for (int x = 0; x < ctx.m; ++x)
    for (int y = 0; y < ctx.m; ++y) {
      ctx.ip_S[static_cast<size_t>(x) * ctx.m + y] = S.mul(X[x], S.star(X[y]));
      Idx v = S.mul(S.star(X[x]), X[y]);
      if (tpos[v] < 0) throw TheoremViolation("[x,y] fell outside T");
      ctx.ip_T[static_cast<size_t>(x) * ctx.m + y] = tpos[v];
    }
  return ctx;
}

MoritaContext identity_context(const InverseSemigroup& S) {
  return canonical_context(S, all_elements(S));
}

MoritaContext context_from_isomorphism(const InverseSemigroup& A,
                                       const InverseSemigroup& B,
                                       const std::vector<Idx>& iso) {
  std::vector<Idx> inv(B.n, -1);
  for (Idx a = 0; a < A.n; ++a) inv[iso[a]] = a;
  MoritaContext ctx;
  ctx.S = A;
  ctx.T = B;
  ctx.m = A.n;
  ctx.left.assign(static_cast<size_t>(A.n) * A.n, -1);
  ctx.right.assign(static_cast<size_t>(A.n) * B.n, -1);
  ctx.ip_S.assign(static_cast<size_t>(A.n) * A.n, -1);
  ctx.ip_T.assign(static_cast<size_t>(A.n) * A.n, -1);
  for (Idx s = 0; s < A.n; ++s)
    for (int x = 0; x < A.n; ++x)
      ctx.left[static_cast<size_t>(s) * A.n + x] = A.mul(s, x);
  for (int x = 0; x < A.n; ++x)
    for (Idx t = 0; t < B.n; ++t)
      ctx.right[static_cast<size_t>(x) * B.n + t] = A.mul(x, inv[t]);
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y) {
      ctx.ip_S[static_cast<size_t>(x) * A.n + y] = A.mul(x, A.star(y));
      ctx.ip_T[static_cast<size_t>(x) * A.n + y] = iso[A.mul(A.star(x), y)];
    }
  return ctx;
}

Corner corner(const InverseSemigroup& S, Idx e) {
  if (!S.is_idempotent(e))
    throw Error(ErrorKind::NotIdempotent, "corner base is not idempotent", {e});
  std::set<Idx> elems;
  for (Idx s = 0; s < S.n; ++s) elems.insert(S.mul(S.mul(e, s), e));
  Corner c;
  c.e = e;
  c.sub = extract_subsemigroup(S, {elems.begin(), elems.end()});
  c.full = principal_ideal(S, e).size() == static_cast<size_t>(S.n);
  return c;
}

std::optional<MonoidCriterionResult> monoid_criterion(const InverseSemigroup& S,
                                                      const InverseSemigroup& T) {
  if (!T.is_monoid())
    throw Error(ErrorKind::TNotMonoid, "monoid criterion needs a monoid T");
  for (Idx e : S.idempotents()) {
    auto c = corner(S, e);
    if (!c.full) continue;
    if (auto iso = semigroup_isomorphism(c.sub.sub, T))
      return MonoidCriterionResult{e, *iso};
  }
  return std::nullopt;
}

CenterIsomorphism center_isomorphism(const InverseSemigroup& S, Idx e) {
  auto one = S.identity();
  if (!one) throw Error(ErrorKind::NotMonoid, "center isomorphism needs a monoid");
  if (!S.is_idempotent(e))
    throw Error(ErrorKind::NotIdempotent, "corner base is not idempotent", {e});
  auto c = corner(S, e);
  if (!c.full) throw Error(ErrorKind::NotFull, "SeS != S", {e});

  CenterIsomorphism out;
  for (Idx s = 0; s < S.n; ++s) {
    bool central = true;
    for (Idx t = 0; t < S.n && central; ++t) central = S.mul(s, t) == S.mul(t, s);
    if (central) out.center_S.push_back(s);
  }
  const auto& T = c.sub;
  for (Idx t : T.elements) {
    bool central = true;
    for (Idx u : T.elements)
      if (S.mul(t, u) != S.mul(u, t)) {
        central = false;
        break;
      }
    if (central) out.center_T.push_back(t);
  }
  // Least factorization 1 = s1 e s2.
  for (Idx s1 = 0; s1 < S.n && out.s1 < 0; ++s1)
    for (Idx s2 = 0; s2 < S.n; ++s2)
      if (S.mul(S.mul(s1, e), s2) == *one) {
        out.s1 = s1;
        out.s2 = s2;
        break;
      }
  if (out.s1 < 0) throw TheoremViolation("no factorization of 1 through e", {e});

  auto pos = [](const std::vector<Idx>& v, Idx x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  };
  for (Idx s : out.center_S) {
    Idx img = S.mul(S.mul(e, s), e);
    int p = pos(out.center_T, img);
    if (p < 0) throw TheoremViolation("phi leaves the corner center", {s});
    if (S.mul(e, s) != img || S.mul(s, e) != img)
      throw TheoremViolation("phi(s) = es = ese = se failed", {s});
    out.phi.push_back(p);
  }
  for (Idx t : out.center_T) {
    Idx img = S.mul(S.mul(out.s1, t), out.s2);
    int p = pos(out.center_S, img);
    if (p < 0) throw TheoremViolation("psi leaves the center", {t});
    out.psi.push_back(p);
  }
  for (size_t i = 0; i < out.center_S.size(); ++i)
    if (out.psi[out.phi[i]] != static_cast<Idx>(i))
      throw TheoremViolation("psi . phi != id");
  for (size_t i = 0; i < out.center_T.size(); ++i)
    if (out.phi[out.psi[i]] != static_cast<Idx>(i))
      throw TheoremViolation("phi . psi != id");
  for (size_t i = 0; i < out.center_S.size(); ++i)
    for (size_t j = 0; j < out.center_S.size(); ++j) {
      Idx prod = S.mul(out.center_S[i], out.center_S[j]);
      int pp = pos(out.center_S, prod);
      if (pp < 0 || out.phi[pp] !=
                        pos(out.center_T, S.mul(out.center_T[out.phi[i]],
                                                out.center_T[out.phi[j]])))
        throw TheoremViolation("phi is not multiplicative");
    }
  return out;
}

}  // namespace morita
