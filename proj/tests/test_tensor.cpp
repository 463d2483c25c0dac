#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "morita/enlargement.hpp"
#include "morita/tensor.hpp"

using namespace morita;

namespace {

Idx by_name(const InverseSemigroup& S, const std::string& name) {
  for (Idx i = 0; i < S.n; ++i)
    if (S.name(i) == name) return i;
  REQUIRE(false);
  return -1;
}

MoritaContext ctx_b5_sl2() {
  auto B5 = fixtures::get("brandt(triv,2)");
  return canonical_context(B5, {by_name(B5, "0"), by_name(B5, "E11")});
}

}  // namespace

TEST_CASE("tensor product of the 2-chain acting on itself") {
  auto T = fixtures::get("SL2");
  // X = Y = T with multiplication actions.
  std::vector<Idx> ra(4), la(4);
  for (Idx x = 0; x < 2; ++x)
    for (Idx t = 0; t < 2; ++t) {
      ra[x * 2 + t] = T.mul(x, t);
      la[t * 2 + x] = T.mul(t, x);
    }
  auto tp = tensor_product(T, 2, ra, 2, la);
  // Classes collapse along products xty: {(0,0),(0,1),(1,0)} and {(1,1)}.
  CHECK(tp.size() == 2);
  CHECK(tp.class_of(0, 0) == tp.class_of(0, 1));
  CHECK(tp.class_of(0, 0) == tp.class_of(1, 0));
  CHECK(tp.class_of(0, 0) != tp.class_of(1, 1));
}

TEST_CASE("tensor with singleton X over the trivial group is Y") {
  auto T = fixtures::get("triv");
  int ny = 5;
  std::vector<Idx> ra(1, 0);
  std::vector<Idx> la(ny);
  std::iota(la.begin(), la.end(), 0);
  auto tp = tensor_product(T, 1, ra, ny, la);
  CHECK(tp.size() == ny);
}

TEST_CASE("tensor rejects invalid actions") {
  auto T = fixtures::get("Z2");
  std::vector<Idx> bad_ra = {1, 1, 0, 0};  // x.t not associative over Z2
  std::vector<Idx> la = {0, 1, 1, 0};
  CHECK_THROWS_AS(tensor_product(T, 2, bad_ra, 2, la), Error);
}

TEST_CASE("bilinear maps factor through tensor classes") {
  auto T = fixtures::get("SL2");
  std::vector<Idx> ra(4), la(4);
  for (Idx x = 0; x < 2; ++x)
    for (Idx t = 0; t < 2; ++t) {
      ra[x * 2 + t] = T.mul(x, t);
      la[t * 2 + x] = T.mul(t, x);
    }
  // f(x,y) = x*y is T-bilinear here.
  std::vector<int> values(4);
  for (Idx x = 0; x < 2; ++x)
    for (Idx y = 0; y < 2; ++y) values[x * 2 + y] = T.mul(x, y);
  CHECK(verify_bilinear_factors(T, 2, ra, 2, la, values).all_pass());
  // A non-bilinear map is flagged.
  std::vector<int> bad = {0, 1, 1, 1};
  auto rep = verify_bilinear_factors(T, 2, ra, 2, la, bad);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("self tensor of ctx(B5,SL2) reconstructs B5, dual reconstructs SL2") {
  auto ctx = ctx_b5_sl2();
  auto st = self_tensor_isomorphism(ctx);
  CHECK(st.tp.size() == 5);
  auto dual = self_tensor_isomorphism_dual(ctx);
  CHECK(dual.tp.size() == 2);
}

TEST_CASE("self tensor of the trivial context has one class") {
  auto ctx = identity_context(fixtures::get("triv"));
  CHECK(self_tensor_isomorphism(ctx).tp.size() == 1);
}

TEST_CASE("self tensor works across small identity contexts") {
  for (const auto& [name, S] : fixtures::catalog()) {
    if (S.n > 7) continue;
    CAPTURE(name);
    auto ctx = identity_context(S);
    CHECK(self_tensor_isomorphism(ctx).tp.size() == S.n);
    CHECK(self_tensor_isomorphism_dual(ctx).tp.size() == S.n);
  }
}

TEST_CASE("opposite context verifies and is involutive") {
  auto ctx = ctx_b5_sl2();
  auto opp = opposite_context(ctx);
  CHECK(verify_context(opp).all_pass());
  CHECK(derived_identities(opp).all_pass());
  auto back = opposite_context(opp);
  CHECK(back.left == ctx.left);
  CHECK(back.right == ctx.right);
  CHECK(back.ip_S == ctx.ip_S);
  CHECK(back.ip_T == ctx.ip_T);

  // Germ groups of ctx and opposite agree.
  auto g1 = germ_group_isomorphism(ctx);
  auto g2 = germ_group_isomorphism(opp);
  CHECK(g1.Y.n_classes == g2.Y.n_classes);
  CHECK(isomorphic(g1.GS.group, g2.GT.group));
}

TEST_CASE("compose ctx(B5,SL2) with its opposite: a verified (B5,B5) context") {
  auto ctx = ctx_b5_sl2();
  auto opp = opposite_context(ctx);
  auto comp = compose_contexts(ctx, opp);
  CHECK(comp.ctx.S.n == 5);
  CHECK(comp.ctx.T.n == 5);
  CHECK(verify_context(comp.ctx).all_pass());
  CHECK(derived_identities(comp.ctx).all_pass());

  // Opposite composed with ctx: a context of SL2 with itself.
  auto comp2 = compose_contexts(opp, ctx);
  CHECK(comp2.ctx.S.n == 2);
  CHECK(comp2.ctx.T.n == 2);
  CHECK(verify_context(comp2.ctx).all_pass());
}

TEST_CASE("composing with the identity context preserves verdicts and germs") {
  auto ctx = ctx_b5_sl2();
  auto idT = identity_context(ctx.T);
  auto comp = compose_contexts(ctx, idT);
  CHECK(verify_context(comp.ctx).all_pass());
  CHECK(derived_identities(comp.ctx).all_pass());
  auto g1 = germ_group_isomorphism(ctx);
  auto g2 = germ_group_isomorphism(comp.ctx);
  CHECK(g1.Y.n_classes == g2.Y.n_classes);
  CHECK(isomorphic(g1.GS.group, g2.GS.group));
}

TEST_CASE("compose rejects mismatched middles and unverified inputs") {
  auto ctx = ctx_b5_sl2();
  auto idS = identity_context(fixtures::get("chain3"));
  CHECK_THROWS_AS(compose_contexts(ctx, idS), Error);
  auto bad = opposite_context(ctx);
  bad.ip_S[1] = (bad.ip_S[1] + 1) % bad.S.n;
  CHECK_THROWS_AS(compose_contexts(ctx, bad), Error);
}

TEST_CASE("composition is associative up to the canonical class bijection") {
  auto c1 = ctx_b5_sl2();
  auto c2 = opposite_context(c1);
  auto c3 = c1;  // chain (B5,SL2), (SL2,B5), (B5,SL2)
  auto left = compose_contexts(compose_contexts(c1, c2).ctx, c3);
  auto right = compose_contexts(c1, compose_contexts(c2, c3).ctx);
  CHECK(left.ctx.m == right.ctx.m);
  CHECK(verify_context(left.ctx).all_pass());
  CHECK(verify_context(right.ctx).all_pass());

  // The canonical triple-class correspondence is a bijection intertwining
  // the inner products.
  auto lc = compose_contexts(c1, c2);
  auto rc = compose_contexts(c2, c3);
  std::vector<int> corr(left.ctx.m, -1);
  for (int x = 0; x < c1.m; ++x)
    for (int y = 0; y < c2.m; ++y)
      for (int z = 0; z < c3.m; ++z) {
        int a = left.tp.class_of(lc.tp.class_of(x, y), z);
        int b = right.tp.class_of(x, rc.tp.class_of(y, z));
        if (corr[a] == -1) corr[a] = b;
        CHECK(corr[a] == b);
      }
  std::vector<std::uint8_t> hit(right.ctx.m, 0);
  for (int b : corr) {
    REQUIRE(b >= 0);
    hit[b] = 1;
  }
  for (auto h : hit) CHECK(h);
  for (int a = 0; a < left.ctx.m; ++a)
    for (int b = 0; b < left.ctx.m; ++b)
      CHECK(left.ctx.ips(a, b) == right.ctx.ips(corr[a], corr[b]));
}

TEST_CASE("|classes(X tensor X)| = |S| for every verified fixture context") {
  auto pairs = {ctx_b5_sl2(), identity_context(fixtures::get("diamond")),
                identity_context(fixtures::get("br(Z2)"))};
  for (const auto& ctx : pairs) {
    auto st = self_tensor_isomorphism(ctx);
    CHECK(st.tp.size() == ctx.S.n);
  }
}
