#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "morita/bimodule.hpp"
#include "morita/constructions.hpp"
#include "morita/enlargement.hpp"

using namespace morita;

namespace {

Idx by_name(const InverseSemigroup& S, const std::string& name) {
  for (Idx i = 0; i < S.n; ++i)
    if (S.name(i) == name) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("B5 is an enlargement of {0, E11} but not of its idempotents") {
  auto S = fixtures::get("brandt(triv,2)");
  auto w = is_enlargement(S, {by_name(S, "0"), by_name(S, "E11")});
  CHECK(w.holds());
  CHECK(w.idem_sts);
  CHECK(w.idem_tst);

  // E(B5) = {0, E11, E22}: STS = S holds, TST != T (E12 = E11 E12 E22).
  auto w2 = is_enlargement(
      S, {by_name(S, "0"), by_name(S, "E11"), by_name(S, "E22")});
  CHECK(w2.sts_is_s);
  CHECK_FALSE(w2.tst_is_t);
  CHECK_FALSE(w2.holds());

  // Reflexive.
  std::vector<Idx> all(S.n);
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_enlargement(S, all).holds());

  CHECK_THROWS_AS(is_enlargement(S, {by_name(S, "E12")}), Error);
}

TEST_CASE("canonical context errors on non-enlargements") {
  auto S = fixtures::get("brandt(triv,2)");
  try {
    canonical_context(S, {by_name(S, "0"), by_name(S, "E11"), by_name(S, "E22")});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEnlargement);
  }
}

TEST_CASE("canonical context of the matrix enlargement B_2(SL2)") {
  auto me = build_matrix_enlargement(fixtures::get("SL2"), 2);
  std::vector<Idx> image(me.embedding.begin(), me.embedding.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(is_enlargement(me.B, image).holds());
  auto ctx = canonical_context(me.B, image);
  CHECK(verify_context(ctx).all_pass());
  CHECK(derived_identities(ctx).all_pass());
}

TEST_CASE("corners") {
  auto S = fixtures::get("brandt(triv,2)");
  auto c = corner(S, by_name(S, "E11"));
  CHECK(c.sub.sub.n == 2);
  CHECK(isomorphic(c.sub.sub, fixtures::get("SL2")));
  CHECK(c.full);  // SeS = S for e = E11
  CHECK(is_enlargement(S, c.sub.elements).holds());

  auto M = fixtures::get("sym(2)");
  auto cm = corner(M, *M.identity());
  CHECK(cm.sub.sub.n == M.n);

  CHECK_THROWS_AS(corner(S, by_name(S, "E12")), Error);
}

TEST_CASE("monoid criterion") {
  auto S = fixtures::get("brandt(triv,2)");
  auto SL2 = fixtures::get("SL2");
  auto r = monoid_criterion(S, SL2);
  REQUIRE(r.has_value());
  CHECK(S.name(r->e) == "E11");  // least full idempotent

  auto self = monoid_criterion(SL2, SL2);
  REQUIRE(self.has_value());
  CHECK(self->e == *SL2.identity());

  CHECK_FALSE(monoid_criterion(SL2, fixtures::get("chain3")).has_value());
  CHECK_THROWS_AS(monoid_criterion(SL2, S), Error);  // B5 is not a monoid
}

TEST_CASE("monoid criterion succeeds iff isomorphic, over catalog monoids <= 7") {
  std::vector<fixtures::Entry> monoids;
  for (const auto& entry : fixtures::catalog())
    if (entry.S.n <= 7 && entry.S.is_monoid()) monoids.push_back(entry);
  REQUIRE(monoids.size() >= 8);
  for (const auto& a : monoids)
    for (const auto& b : monoids) {
      CAPTURE(a.name);
      CAPTURE(b.name);
      bool iso = isomorphic(a.S, b.S);
      CHECK(monoid_criterion(a.S, b.S).has_value() == iso);
    }
}

TEST_CASE("center isomorphism is the identity at e = 1 and refuses non-monoids") {
  for (const char* name : {"sym(2)", "adjone(brandt(triv,2))", "diamond"}) {
    CAPTURE(name);
    auto S = fixtures::get(name);
    auto ci = center_isomorphism(S, *S.identity());
    CHECK(ci.center_S.size() == ci.center_T.size());
    for (size_t i = 0; i < ci.center_S.size(); ++i)
      CHECK(ci.center_T[ci.phi[i]] == ci.center_S[i]);
  }
  auto B5 = fixtures::get("brandt(triv,2)");
  CHECK_THROWS_AS(center_isomorphism(B5, by_name(B5, "E11")), Error);
  auto M = fixtures::get("sym(2)");
  // Any non-full idempotent is rejected.
  for (Idx e : M.idempotents())
    if (!corner(M, e).full) CHECK_THROWS_AS(center_isomorphism(M, e), Error);
}

TEST_CASE("center map is independent of the factorization of 1") {
  for (const char* name : {"sym(2)", "adjone(brandt(triv,2))", "Z4"}) {
    CAPTURE(name);
    auto S = fixtures::get(name);
    Idx one = *S.identity();
    for (Idx e : S.idempotents()) {
      if (!corner(S, e).full) continue;
      auto ci = center_isomorphism(S, e);
      // All factorizations 1 = s1 e s2 give the same psi on Z(eSe).
      for (Idx s1 = 0; s1 < S.n; ++s1)
        for (Idx s2 = 0; s2 < S.n; ++s2) {
          if (S.mul(S.mul(s1, e), s2) != one) continue;
          for (size_t i = 0; i < ci.center_T.size(); ++i) {
            Idx t = ci.center_T[i];
            CHECK(S.mul(S.mul(s1, t), s2) == ci.center_S[ci.psi[i]]);
          }
        }
    }
  }
}

TEST_CASE("Z(B5) is trivial and differs from Z(SL2) — the paper's failure case") {
  auto B5 = fixtures::get("brandt(triv,2)");
  auto p = structural_profile(B5);
  CHECK(p.center.size() == 1);  // only the zero matrix
  auto SL2 = fixtures::get("SL2");
  auto p2 = structural_profile(SL2);
  CHECK(p2.center.size() == 2);
}

TEST_CASE("Prop 2.2 end-to-end over the enlargement fixtures") {
  struct Pair {
    std::string name;
    InverseSemigroup S;
    std::vector<Idx> sub;
  };
  std::vector<Pair> pairs;
  {
    auto B5 = fixtures::get("brandt(triv,2)");
    pairs.push_back({"B5/SL2", B5, {by_name(B5, "0"), by_name(B5, "E11")}});
    auto me = build_matrix_enlargement(fixtures::get("SL2"), 2);
    std::vector<Idx> img(me.embedding.begin(), me.embedding.end());
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    pairs.push_back({"B_2(SL2)/SL2", me.B, img});
    auto S = fixtures::get("sdp(pfinZ2,Z2,shift)");
    auto mc = monoid_criterion(S, fixtures::get("br(Z2)"));
    REQUIRE(mc.has_value());
    pairs.push_back({"pfinZ2:Z2/BR(Z2)", S, corner(S, mc->e).sub.elements});
  }
  for (const auto& p : pairs) {
    CAPTURE(p.name);
    CHECK(is_enlargement(p.S, p.sub).holds());
    auto ctx = canonical_context(p.S, p.sub);
    CHECK(verify_context(ctx).all_pass());
    CHECK(derived_identities(ctx).all_pass());
  }
}

TEST_CASE("context from an isomorphism verifies") {
  auto S = fixtures::get("diamond");
  std::vector<Idx> perm = {3, 1, 0, 2};
  std::vector<Idx> table(16);
  for (Idx a = 0; a < 4; ++a)
    for (Idx b = 0; b < 4; ++b) table[perm[a] * 4 + perm[b]] = perm[S.mul(a, b)];
  auto T = validate_inverse_semigroup(4, table);
  auto iso = semigroup_isomorphism(S, T);
  REQUIRE(iso.has_value());
  auto ctx = context_from_isomorphism(S, T, *iso);
  CHECK(verify_context(ctx).all_pass());
  CHECK(derived_identities(ctx).all_pass());
}
