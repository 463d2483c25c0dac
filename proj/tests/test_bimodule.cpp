#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "morita/bimodule.hpp"
#include "morita/enlargement.hpp"

using namespace morita;

namespace {

Idx by_name(const InverseSemigroup& S, const std::string& name) {
  for (Idx i = 0; i < S.n; ++i)
    if (S.name(i) == name) return i;
  REQUIRE(false);
  return -1;
}

// B5 over its copy of SL2 = {0, E11}.
MoritaContext ctx_b5_sl2() {
  auto B5 = fixtures::get("brandt(triv,2)");
  return canonical_context(B5, {by_name(B5, "0"), by_name(B5, "E11")});
}

}  // namespace

TEST_CASE("canonical context of B5 over SL2 verifies; X = {0, E11, E21}") {
  auto ctx = ctx_b5_sl2();
  CHECK(ctx.m == 3);
  std::vector<std::string> xnames;
  for (Idx x : ctx.x_in_S) xnames.push_back(ctx.S.name(x));
  std::sort(xnames.begin(), xnames.end());
  CHECK(xnames == std::vector<std::string>{"0", "E11", "E21"});
  CHECK(verify_context(ctx).all_pass());
  CHECK(derived_identities(ctx).all_pass());
}

TEST_CASE("a corrupted inner product breaks axiom 2 with a witness") {
  auto ctx = ctx_b5_sl2();
  // Corrupt one off-diagonal ip_S entry.
  ctx.ip_S[1] = (ctx.ip_S[1] + 1) % ctx.S.n;
  auto rep = verify_context(ctx);
  CHECK_FALSE(rep.all_pass());
  auto* ax2 = rep.find("axiom2");
  REQUIRE(ax2 != nullptr);
  CHECK_FALSE(ax2->pass);
  CHECK_FALSE(ax2->witness.empty());
}

TEST_CASE("serial and parallel verification agree, witnesses included") {
  auto good = ctx_b5_sl2();
  auto bad = good;
  bad.ip_T[2] = (bad.ip_T[2] + 1) % bad.T.n;
  for (const auto& ctx : {good, bad}) {
    auto rs = verify_context(ctx, Exec::serial);
    auto rp = verify_context(ctx, Exec::parallel);
    REQUIRE(rs.checks.size() == rp.checks.size());
    for (size_t i = 0; i < rs.checks.size(); ++i) {
      CHECK(rs.checks[i].id == rp.checks[i].id);
      CHECK(rs.checks[i].pass == rp.checks[i].pass);
      CHECK(rs.checks[i].witness == rp.checks[i].witness);
    }
  }
}

TEST_CASE("identity contexts verify for every catalog entry of size <= 9") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 9) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    CHECK(ctx.m == S.n);
    CHECK(verify_context(ctx).all_pass());
    CHECK(derived_identities(ctx).all_pass());
  }
}

TEST_CASE("axioms (3)+(7) imply (6) on contexts passing the others") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 7) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    auto rep = verify_context(ctx);
    bool others = true;
    for (const auto& c : rep.checks)
      if (c.id != "axiom6" && !c.pass) others = false;
    if (others) CHECK(rep.find("axiom6")->pass);
  }
}

TEST_CASE("derived identities include diagonal idempotence and p/q surjectivity") {
  auto ctx = ctx_b5_sl2();
  auto rep = derived_identities(ctx);
  for (const char* id : {"p23-7", "p23-8", "p23-10"}) {
    auto* c = rep.find(id);
    REQUIRE(c != nullptr);
    CHECK(c->pass);
  }
  CHECK_THROWS_AS(
      [] {
        auto bad = ctx_b5_sl2();
        bad.ip_S[1] = (bad.ip_S[1] + 1) % bad.S.n;
        derived_identities(bad);
      }(),
      Error);
}

TEST_CASE("hom pair of the context (B5, SL2)") {
  auto ctx = ctx_b5_sl2();
  // x with <x,x> = E11 — the X element equal to E11 in S.
  int x = -1;
  for (int i = 0; i < ctx.m; ++i)
    if (ctx.S.name(ctx.x_in_S[i]) == "E11") x = i;
  REQUIRE(x >= 0);
  auto hp = hom_pair(ctx, x);
  // eps_x(E11) = 1 of T (the element named E11 inside T), eps_x(0) = 0.
  Idx e11 = by_name(ctx.S, "E11");
  Idx zeroS = by_name(ctx.S, "0");
  for (size_t i = 0; i < hp.idem_S.size(); ++i) {
    if (hp.idem_S[i] == e11) CHECK(ctx.T.is_idempotent(hp.eps[i]));
    if (hp.idem_S[i] == zeroS) CHECK(hp.eps[i] == *ctx.T.zero());
  }
  // eta_x . eps_x fixes every e <= <x,x>.
  auto ord = natural_order(ctx.S);
  for (size_t i = 0; i < hp.idem_S.size(); ++i) {
    Idx e = hp.idem_S[i];
    if (!ord.leq(e, ctx.ips(x, x))) continue;
    Idx f = hp.eps[i];
    auto it = std::find(hp.idem_T.begin(), hp.idem_T.end(), f);
    REQUIRE(it != hp.idem_T.end());
    CHECK(hp.eta[it - hp.idem_T.begin()] == e);
  }
}

TEST_CASE("hom pairs are homomorphisms on every small identity context") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 7) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    for (int x = 0; x < ctx.m; ++x) CHECK_NOTHROW(hom_pair(ctx, x));
  }
}

TEST_CASE("etale structures of ctx(B5,SL2): order has 0 below both others") {
  auto ctx = ctx_b5_sl2();
  auto es = etale_structures(ctx);
  CHECK(es.checks.all_pass());
  int x0 = -1;
  for (int i = 0; i < ctx.m; ++i)
    if (ctx.S.name(ctx.x_in_S[i]) == "0") x0 = i;
  REQUIRE(x0 >= 0);
  for (int y = 0; y < ctx.m; ++y) CHECK(es.order.le(x0, y));
  for (int x = 0; x < ctx.m; ++x)
    for (int y = 0; y < ctx.m; ++y)
      if (x != y && x != x0 && y != x0) CHECK_FALSE(es.order.le(x, y));
}

TEST_CASE("etale structures: singleton X and corrupted order detection") {
  auto triv = fixtures::get("triv");
  auto ctx = identity_context(triv);
  auto es = etale_structures(ctx);
  CHECK(es.order.n == 1);
  CHECK(es.order.le(0, 0));

  auto bad = ctx_b5_sl2();
  // Corrupt the right action so the two induced orders disagree.
  bad.right[0 * bad.T.n + 1] = 1;
  bool orders_differ_or_invalid = false;
  try {
    auto e2 = etale_structures(bad);
    orders_differ_or_invalid = !e2.checks.all_pass();
  } catch (const Error& e) {
    orders_differ_or_invalid = e.kind() == ErrorKind::OrdersDiffer;
  }
  CHECK(orders_differ_or_invalid);
}

TEST_CASE("meet property: restrictions below a common upper bound") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 7) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    auto es = etale_structures(ctx);
    for (int x = 0; x < ctx.m; ++x)
      for (int y = 0; y < ctx.m; ++y)
        for (int z = 0; z < ctx.m; ++z) {
          if (!es.order.le(y, x) || !es.order.le(z, x)) continue;
          Idx m1 = etale_meet(ctx.S, es.left, y, z);
          Idx m2 = etale_meet(ctx.S, es.left, z, y);
          CHECK(m1 == m2);
          CHECK(es.order.le(m1, y));
          CHECK(es.order.le(m1, z));
          for (int w = 0; w < ctx.m; ++w)
            if (es.order.le(w, y) && es.order.le(w, z)) CHECK(es.order.le(w, m1));
        }
  }
}

TEST_CASE("germ transitivity is realized via the meet construction") {
  auto ctx = ctx_b5_sl2();
  auto es = etale_structures(ctx);
  for (int x = 0; x < ctx.m; ++x)
    for (int y = 0; y < ctx.m; ++y)
      for (int z = 0; z < ctx.m; ++z)
        for (int u = 0; u < ctx.m; ++u)
          for (int v = 0; v < ctx.m; ++v) {
            if (!es.order.le(u, x) || !es.order.le(u, y)) continue;
            if (!es.order.le(v, y) || !es.order.le(v, z)) continue;
            Idx w = etale_meet(ctx.S, es.left, u, v);
            CHECK(es.order.le(w, x));
            CHECK(es.order.le(w, z));
          }
}

TEST_CASE("<x,x>x = x and x[x,x] = x for all x on fixtures") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 9) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    for (int x = 0; x < ctx.m; ++x) {
      CHECK(ctx.lact(ctx.ips(x, x), x) == x);
      CHECK(ctx.ract(x, ctx.ipt(x, x)) == x);
    }
  }
}

TEST_CASE("germ group isomorphism: B5/SL2 collapses to a point") {
  auto gi = germ_group_isomorphism(ctx_b5_sl2());
  CHECK(gi.Y.n_classes == 1);
  CHECK(gi.GS.group.n == 1);
  CHECK(gi.GT.group.n == 1);
}

TEST_CASE("germ group isomorphism: the Birget-Rhodes pair gives Z2 = Z2") {
  auto S = fixtures::get("sdp(pfinZ2,Z2,shift)");
  auto BR = fixtures::get("br(Z2)");
  // Locate the embedded copy of BR(Z2) inside pfinZ2 x| Z2: the elements
  // (A,g) with 1 in A and g in A; equivalently s with corner at the least
  // idempotent... build via monoid criterion on the corner.
  auto mc = monoid_criterion(S, BR);
  REQUIRE(mc.has_value());
  auto c = corner(S, mc->e);
  auto ctx = canonical_context(S, c.sub.elements);
  auto gi = germ_group_isomorphism(ctx);
  CHECK(gi.GS.group.n == 2);
  CHECK(gi.GT.group.n == 2);
  CHECK(gi.Y.n_classes == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(gi.iso[gi.GS.group.mul(a, b)] == gi.GT.group.mul(gi.iso[a], gi.iso[b]));
}

TEST_CASE("germ group isomorphism: group identity context is regular") {
  auto G = fixtures::get("S3");
  auto gi = germ_group_isomorphism(identity_context(G));
  CHECK(gi.Y.n_classes == 6);
  CHECK(gi.GS.group.n == 6);
  CHECK(isomorphic(gi.GS.group, gi.GT.group));
}
