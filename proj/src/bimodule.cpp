#include "morita/bimodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace morita {

void check_context_shape(const MoritaContext& ctx) {
  const int m = ctx.m;
  if (m <= 0) throw Error(ErrorKind::BadTable, "context has empty X");
  if (ctx.left.size() != static_cast<size_t>(ctx.S.n) * m ||
      ctx.right.size() != static_cast<size_t>(m) * ctx.T.n ||
      ctx.ip_S.size() != static_cast<size_t>(m) * m ||
      ctx.ip_T.size() != static_cast<size_t>(m) * m)
    throw Error(ErrorKind::BadTable, "context table has wrong size");
  for (Idx v : ctx.left)
    if (v < 0 || v >= m) throw Error(ErrorKind::BadTable, "left action out of range");
  for (Idx v : ctx.right)
    if (v < 0 || v >= m) throw Error(ErrorKind::BadTable, "right action out of range");
  for (Idx v : ctx.ip_S)
    if (v < 0 || v >= ctx.S.n) throw Error(ErrorKind::BadTable, "ip_S out of range");
  for (Idx v : ctx.ip_T)
    if (v < 0 || v >= ctx.T.n) throw Error(ErrorKind::BadTable, "ip_T out of range");
}

namespace {

template <class Ok, class Decode>
void run_check(VerificationReport& report, const std::string& id,
               std::int64_t total, Exec exec, Ok&& ok, Decode&& decode) {
  auto fail = first_failure(total, exec, ok);
  CheckResult r;
  r.id = id;
  r.pass = !fail.has_value();
  if (fail) r.witness = decode(*fail);
  report.checks.push_back(std::move(r));
}

std::function<std::vector<int>(std::int64_t)> decode2(std::int64_t d1) {
  return [d1](std::int64_t i) {
    return std::vector<int>{static_cast<int>(i / d1), static_cast<int>(i % d1)};
  };
}

std::function<std::vector<int>(std::int64_t)> decode3(std::int64_t d1, std::int64_t d2) {
  return [d1, d2](std::int64_t i) {
    return std::vector<int>{static_cast<int>(i / (d1 * d2)),
                            static_cast<int>(i / d2 % d1),
                            static_cast<int>(i % d2)};
  };
}

std::function<std::vector<int>(std::int64_t)> decode4(std::int64_t d1, std::int64_t d2,
                                                      std::int64_t d3) {
  return [d1, d2, d3](std::int64_t i) {
    return std::vector<int>{static_cast<int>(i / (d1 * d2 * d3)),
                            static_cast<int>(i / (d2 * d3) % d1),
                            static_cast<int>(i / d3 % d2),
                            static_cast<int>(i % d3)};
  };
}

}  // namespace

VerificationReport verify_context(const MoritaContext& ctx, Exec exec) {
  check_context_shape(ctx);
  const std::int64_t m = ctx.m, ns = ctx.S.n, nt = ctx.T.n;
  const auto& S = ctx.S;
  const auto& T = ctx.T;
  VerificationReport rep;

  run_check(rep, "act-left", ns * ns * m, exec,
            [&](std::int64_t i) {
              Idx s1 = static_cast<Idx>(i / (ns * m));
              Idx s2 = static_cast<Idx>(i / m % ns);
              int x = static_cast<int>(i % m);
              return ctx.lact(S.mul(s1, s2), x) == ctx.lact(s1, ctx.lact(s2, x));
            },
            decode3(ns, m));

  run_check(rep, "act-right", m * nt * nt, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (nt * nt));
              Idx t1 = static_cast<Idx>(i / nt % nt);
              Idx t2 = static_cast<Idx>(i % nt);
              return ctx.ract(x, T.mul(t1, t2)) == ctx.ract(ctx.ract(x, t1), t2);
            },
            decode3(nt, nt));

  run_check(rep, "act-commute", ns * m * nt, exec,
            [&](std::int64_t i) {
              Idx s = static_cast<Idx>(i / (m * nt));
              int x = static_cast<int>(i / nt % m);
              Idx t = static_cast<Idx>(i % nt);
              return ctx.ract(ctx.lact(s, x), t) == ctx.lact(s, ctx.ract(x, t));
            },
            decode3(m, nt));

  {
    std::vector<std::uint8_t> hit(S.n, 0);
    for (Idx v : ctx.ip_S) hit[v] = 1;
    CheckResult r{"surj-S", true, {}};
    for (Idx s = 0; s < S.n; ++s)
      if (!hit[s]) {
        r.pass = false;
        r.witness = {s};
        break;
      }
    rep.checks.push_back(std::move(r));
  }
  {
    std::vector<std::uint8_t> hit(T.n, 0);
    for (Idx v : ctx.ip_T) hit[v] = 1;
    CheckResult r{"surj-T", true, {}};
    for (Idx t = 0; t < T.n; ++t)
      if (!hit[t]) {
        r.pass = false;
        r.witness = {t};
        break;
      }
    rep.checks.push_back(std::move(r));
  }

  run_check(rep, "axiom1", ns * m * m, exec,
            [&](std::int64_t i) {
              Idx s = static_cast<Idx>(i / (m * m));
              int x = static_cast<int>(i / m % m);
              int y = static_cast<int>(i % m);
              return ctx.ips(ctx.lact(s, x), y) == S.mul(s, ctx.ips(x, y));
            },
            decode3(m, m));

  run_check(rep, "axiom2", m * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / m), y = static_cast<int>(i % m);
              return ctx.ips(y, x) == S.star(ctx.ips(x, y));
            },
            decode2(m));

  run_check(rep, "axiom3", m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i);
              return ctx.lact(ctx.ips(x, x), x) == x;
            },
            [](std::int64_t i) { return std::vector<int>{static_cast<int>(i)}; });

  run_check(rep, "axiom4", m * m * nt, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (m * nt));
              int y = static_cast<int>(i / nt % m);
              Idx t = static_cast<Idx>(i % nt);
              return ctx.ipt(x, ctx.ract(y, t)) == T.mul(ctx.ipt(x, y), t);
            },
            decode3(m, nt));

  run_check(rep, "axiom5", m * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / m), y = static_cast<int>(i % m);
              return ctx.ipt(y, x) == T.star(ctx.ipt(x, y));
            },
            decode2(m));

  run_check(rep, "axiom6", m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i);
              return ctx.ract(x, ctx.ipt(x, x)) == x;
            },
            [](std::int64_t i) { return std::vector<int>{static_cast<int>(i)}; });

  run_check(rep, "axiom7", m * m * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (m * m));
              int y = static_cast<int>(i / m % m);
              int z = static_cast<int>(i % m);
              return ctx.lact(ctx.ips(x, y), z) == ctx.ract(x, ctx.ipt(y, z));
            },
            decode3(m, m));

  return rep;
}

VerificationReport derived_identities(const MoritaContext& ctx, Exec exec) {
  if (!verify_context(ctx, exec).all_pass())
    throw Error(ErrorKind::ContextNotVerified,
                "derived identities need a verified context");
  const std::int64_t m = ctx.m, ns = ctx.S.n, nt = ctx.T.n;
  const auto& S = ctx.S;
  const auto& T = ctx.T;
  VerificationReport rep;

  run_check(rep, "p23-1", m * m * m * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (m * m * m));
              int y = static_cast<int>(i / (m * m) % m);
              int z = static_cast<int>(i / m % m);
              int w = static_cast<int>(i % m);
              return S.mul(ctx.ips(x, y), ctx.ips(z, w)) ==
                     ctx.ips(ctx.ract(x, ctx.ipt(y, z)), w);
            },
            decode4(m, m, m));

  run_check(rep, "p23-2", m * m * m * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (m * m * m));
              int y = static_cast<int>(i / (m * m) % m);
              int z = static_cast<int>(i / m % m);
              int w = static_cast<int>(i % m);
              return T.mul(ctx.ipt(x, y), ctx.ipt(z, w)) ==
                     ctx.ipt(x, ctx.lact(ctx.ips(y, z), w));
            },
            decode4(m, m, m));

  run_check(rep, "p23-3", m * ns * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (ns * m));
              Idx s = static_cast<Idx>(i / m % ns);
              int y = static_cast<int>(i % m);
              return ctx.ips(x, ctx.lact(s, y)) == S.mul(ctx.ips(x, y), S.star(s));
            },
            decode3(ns, m));

  run_check(rep, "p23-4", m * nt * m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (nt * m));
              Idx t = static_cast<Idx>(i / m % nt);
              int y = static_cast<int>(i % m);
              return ctx.ipt(ctx.ract(x, t), y) == T.mul(T.star(t), ctx.ipt(x, y));
            },
            decode3(nt, m));

  run_check(rep, "p23-5", ns * m, exec,
            [&](std::int64_t i) {
              Idx s = static_cast<Idx>(i / m);
              int x = static_cast<int>(i % m);
              int sx = ctx.lact(s, x);
              return ctx.ips(sx, sx) == S.mul(S.mul(s, ctx.ips(x, x)), S.star(s));
            },
            decode2(m));

  run_check(rep, "p23-6", m * nt, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / nt);
              Idx t = static_cast<Idx>(i % nt);
              int xt = ctx.ract(x, t);
              return ctx.ipt(xt, xt) == T.mul(T.mul(T.star(t), ctx.ipt(x, x)), t);
            },
            decode2(nt));

  run_check(rep, "p23-7", m, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i);
              return S.is_idempotent(ctx.ips(x, x)) && T.is_idempotent(ctx.ipt(x, x));
            },
            [](std::int64_t i) { return std::vector<int>{static_cast<int>(i)}; });

  {
    CheckResult r{"p23-8", true, {}};
    for (Idx e : ctx.S.idempotents()) {
      bool hit = false;
      for (int x = 0; x < ctx.m && !hit; ++x) hit = ctx.ips(x, x) == e;
      if (!hit) {
        r.pass = false;
        r.witness = {0, e};
        break;
      }
    }
    if (r.pass)
      for (Idx f : ctx.T.idempotents()) {
        bool hit = false;
        for (int x = 0; x < ctx.m && !hit; ++x) hit = ctx.ipt(x, x) == f;
        if (!hit) {
          r.pass = false;
          r.witness = {1, f};
          break;
        }
      }
    rep.checks.push_back(std::move(r));
  }

  run_check(rep, "p23-9", m * m * nt, exec,
            [&](std::int64_t i) {
              int x = static_cast<int>(i / (m * nt));
              int y = static_cast<int>(i / nt % m);
              Idx t = static_cast<Idx>(i % nt);
              return ctx.ips(ctx.ract(x, t), y) == ctx.ips(x, ctx.ract(y, T.star(t))) &&
                     ctx.ips(x, ctx.ract(y, t)) == ctx.ips(ctx.ract(x, T.star(t)), y);
            },
            decode3(m, nt));

  run_check(rep, "p23-10", ns * m * m, exec,
            [&](std::int64_t i) {
              Idx s = static_cast<Idx>(i / (m * m));
              int x = static_cast<int>(i / m % m);
              int y = static_cast<int>(i % m);
              return ctx.ipt(ctx.lact(s, x), y) == ctx.ipt(x, ctx.lact(S.star(s), y)) &&
                     ctx.ipt(x, ctx.lact(s, y)) == ctx.ipt(ctx.lact(S.star(s), x), y);
            },
            decode3(m, m));

  return rep;
}

HomPair hom_pair(const MoritaContext& ctx, int x) {
  HomPair hp;
  hp.idem_S = ctx.S.idempotents();
  hp.idem_T = ctx.T.idempotents();
  for (Idx e : hp.idem_S) {
    int ex = ctx.lact(e, x);
    hp.eps.push_back(ctx.ipt(ex, ex));
  }
  for (Idx f : hp.idem_T) {
    int xf = ctx.ract(x, f);
    hp.eta.push_back(ctx.ips(xf, xf));
  }
  auto pos = [](const std::vector<Idx>& v, Idx e) {
    return static_cast<int>(std::find(v.begin(), v.end(), e) - v.begin());
  };
  for (size_t i = 0; i < hp.idem_S.size(); ++i)
    for (size_t j = 0; j < hp.idem_S.size(); ++j) {
      Idx ef = ctx.S.mul(hp.idem_S[i], hp.idem_S[j]);
      if (ctx.T.mul(hp.eps[i], hp.eps[j]) != hp.eps[pos(hp.idem_S, ef)])
        throw TheoremViolation("eps_x is not a homomorphism",
                               {x, hp.idem_S[i], hp.idem_S[j]});
    }
  for (size_t i = 0; i < hp.idem_T.size(); ++i)
    for (size_t j = 0; j < hp.idem_T.size(); ++j) {
      Idx ef = ctx.T.mul(hp.idem_T[i], hp.idem_T[j]);
      if (ctx.S.mul(hp.eta[i], hp.eta[j]) != hp.eta[pos(hp.idem_T, ef)])
        throw TheoremViolation("eta_x is not a homomorphism",
                               {x, hp.idem_T[i], hp.idem_T[j]});
    }
  return hp;
}

namespace {

Idx etale_act(const EtaleSet& X, Idx s, int x) {
  return X.side == Side::left ? X.action[static_cast<size_t>(s) * X.size + x]
                              : X.action[static_cast<size_t>(x) * X.n_acting + s];
}

}  // namespace

VerificationReport validate_etale(const InverseSemigroup& S, const EtaleSet& X) {
  VerificationReport rep;
  CheckResult anchor{"etale-anchor", true, {}};
  for (int x = 0; x < X.size && anchor.pass; ++x) {
    if (!S.is_idempotent(X.anchor[x]) || etale_act(X, X.anchor[x], x) != x) {
      anchor.pass = false;
      anchor.witness = {x};
    }
  }
  rep.checks.push_back(std::move(anchor));
  CheckResult conj{"etale-conjugation", true, {}};
  for (Idx s = 0; s < S.n && conj.pass; ++s)
    for (int x = 0; x < X.size && conj.pass; ++x) {
      Idx expected = X.side == Side::left
                         ? S.mul(S.mul(s, X.anchor[x]), S.star(s))
                         : S.mul(S.mul(S.star(s), X.anchor[x]), s);
      if (X.anchor[etale_act(X, s, x)] != expected) {
        conj.pass = false;
        conj.witness = {s, x};
      }
    }
  rep.checks.push_back(std::move(conj));
  return rep;
}

Poset etale_order(const InverseSemigroup&, const EtaleSet& X) {
  Poset p;
  p.n = X.size;
  p.rel.assign(static_cast<size_t>(X.size) * X.size, 0);
  for (int x = 0; x < X.size; ++x)
    for (int y = 0; y < X.size; ++y)
      p.rel[static_cast<size_t>(x) * X.size + y] = etale_act(X, X.anchor[x], y) == x;
  return p;
}

Idx etale_meet(const InverseSemigroup&, const EtaleSet& X, int y, int z) {
  return etale_act(X, X.anchor[y], z);
}

GermSpace germ_space(const Poset& order) {
  const int n = order.n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (order.le(c, a) && order.le(c, b)) {
          int ra = find(a), rb = find(b);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
          break;
        }
  GermSpace g;
  g.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a)
    if (find(a) == a) {
      g.class_of[a] = g.n_classes++;
      g.rep.push_back(a);
    }
  for (int a = 0; a < n; ++a) g.class_of[a] = g.class_of[find(a)];
  return g;
}

EtaleStructures etale_structures(const MoritaContext& ctx) {
  check_context_shape(ctx);
  EtaleStructures out;
  out.left.side = Side::left;
  out.left.size = ctx.m;
  out.left.n_acting = ctx.S.n;
  out.left.action = ctx.left;
  out.right.side = Side::right;
  out.right.size = ctx.m;
  out.right.n_acting = ctx.T.n;
  out.right.action = ctx.right;
  for (int x = 0; x < ctx.m; ++x) {
    out.left.anchor.push_back(ctx.ips(x, x));
    out.right.anchor.push_back(ctx.ipt(x, x));
  }
  auto repL = validate_etale(ctx.S, out.left);
  auto repR = validate_etale(ctx.T, out.right);
  for (auto& c : repL.checks) {
    c.id = "left-" + c.id;
    out.checks.checks.push_back(c);
  }
  for (auto& c : repR.checks) {
    c.id = "right-" + c.id;
    out.checks.checks.push_back(c);
  }

  Poset lo = etale_order(ctx.S, out.left);
  Poset ro = etale_order(ctx.T, out.right);
  for (int x = 0; x < ctx.m; ++x)
    for (int y = 0; y < ctx.m; ++y)
      if (lo.le(x, y) != ro.le(x, y))
        throw Error(ErrorKind::OrdersDiffer,
                    "left and right induced orders differ", {x, y});
  out.order = lo;
  out.checks.checks.push_back(CheckResult{"order-partial", is_partial_order(lo), {}});

  CheckResult mono{"monotone", true, {}};
  for (int x = 0; x < ctx.m && mono.pass; ++x)
    for (int x2 = 0; x2 < ctx.m && mono.pass; ++x2)
      for (int y = 0; y < ctx.m && mono.pass; ++y)
        for (int y2 = 0; y2 < ctx.m && mono.pass; ++y2) {
          if (!lo.le(x, x2) || !lo.le(y, y2)) continue;
          bool ordS = ctx.S.leq(ctx.ips(x, y), ctx.ips(x2, y2));
          bool ordT = ctx.T.leq(ctx.ipt(x, y), ctx.ipt(x2, y2));
          if (!ordS || !ordT) {
            mono.pass = false;
            mono.witness = {x, x2, y, y2};
          }
        }
  out.checks.checks.push_back(std::move(mono));
  return out;
}

GermGroupIso germ_group_isomorphism(const MoritaContext& ctx) {
  if (!verify_context(ctx).all_pass())
    throw Error(ErrorKind::ContextNotVerified,
                "germ group isomorphism needs a verified context");
  auto es = etale_structures(ctx);
  GermGroupIso out;
  out.Y = germ_space(es.order);
  out.GS = maximal_group_image(ctx.S);
  out.GT = maximal_group_image(ctx.T);
  const int ny = out.Y.n_classes, ngs = out.GS.group.n, ngt = out.GT.group.n;

  out.left_action.assign(static_cast<size_t>(ngs) * ny, -1);
  for (Idx s = 0; s < ctx.S.n; ++s)
    for (int x = 0; x < ctx.m; ++x) {
      int g = out.GS.sigma[s];
      int cls = out.Y.class_of[x];
      int img = out.Y.class_of[ctx.lact(s, x)];
      int& slot = out.left_action[static_cast<size_t>(g) * ny + cls];
      if (slot == -1)
        slot = img;
      else if (slot != img)
        throw TheoremViolation("G(S)-action on germs not well defined", {s, x});
    }
  out.right_action.assign(static_cast<size_t>(ny) * ngt, -1);
  for (Idx t = 0; t < ctx.T.n; ++t)
    for (int x = 0; x < ctx.m; ++x) {
      int h = out.GT.sigma[t];
      int cls = out.Y.class_of[x];
      int img = out.Y.class_of[ctx.ract(x, t)];
      int& slot = out.right_action[static_cast<size_t>(cls) * ngt + h];
      if (slot == -1)
        slot = img;
      else if (slot != img)
        throw TheoremViolation("G(T)-action on germs not well defined", {t, x});
    }
  for (int v : out.left_action)
    if (v < 0) throw TheoremViolation("G(S)-action on germs is partial");
  for (int v : out.right_action)
    if (v < 0) throw TheoremViolation("G(T)-action on germs is partial");

  auto lact = [&](int g, int y) {
    return out.left_action[static_cast<size_t>(g) * ny + y];
  };
  auto ract = [&](int y, int h) {
    return out.right_action[static_cast<size_t>(y) * ngt + h];
  };

  for (int y = 0; y < ny; ++y)
    for (int y2 = 0; y2 < ny; ++y2) {
      bool hit = false;
      for (int g = 0; g < ngs && !hit; ++g) hit = lact(g, y) == y2;
      if (!hit) throw TheoremViolation("G(S)-action not transitive", {y, y2});
      hit = false;
      for (int h = 0; h < ngt && !hit; ++h) hit = ract(y, h) == y2;
      if (!hit) throw TheoremViolation("G(T)-action not transitive", {y, y2});
    }
  const int oneS = out.GS.group.identity().value();
  const int oneT = out.GT.group.identity().value();
  for (int g = 0; g < ngs; ++g)
    for (int y = 0; y < ny; ++y)
      if (lact(g, y) == y && g != oneS)
        throw TheoremViolation("G(S)-action not free", {g, y});
  for (int h = 0; h < ngt; ++h)
    for (int y = 0; y < ny; ++y)
      if (ract(y, h) == y && h != oneT)
        throw TheoremViolation("G(T)-action not free", {h, y});
  for (int g = 0; g < ngs; ++g)
    for (int y = 0; y < ny; ++y)
      for (int h = 0; h < ngt; ++h)
        if (ract(lact(g, y), h) != lact(g, ract(y, h)))
          throw TheoremViolation("germ actions do not commute", {g, y, h});

  // g x0 = x0 h pins h; the map or its pointwise inverse is the isomorphism.
  const int y0 = 0;
  std::vector<Idx> psi(ngs, -1);
  for (int g = 0; g < ngs; ++g)
    for (int h = 0; h < ngt; ++h)
      if (ract(y0, h) == lact(g, y0)) {
        psi[g] = h;
        break;
      }
  auto is_iso = [&](const std::vector<Idx>& f) {
    for (int a = 0; a < ngs; ++a)
      for (int b = 0; b < ngs; ++b)
        if (f[out.GS.group.mul(a, b)] != out.GT.group.mul(f[a], f[b])) return false;
    std::vector<std::uint8_t> hit(ngt, 0);
    for (Idx v : f) hit[v] = 1;
    for (std::uint8_t h : hit)
      if (!h) return false;
    return true;
  };
  if (is_iso(psi)) {
    out.iso = psi;
  } else {
    std::vector<Idx> inv_psi(ngs);
    for (int g = 0; g < ngs; ++g) inv_psi[g] = out.GT.group.star(psi[g]);
    if (!is_iso(inv_psi))
      throw TheoremViolation("germ-derived map is not an isomorphism");
    out.iso = inv_psi;
  }
  return out;
}

}  // namespace morita
