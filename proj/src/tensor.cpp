#include "morita/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace morita {

namespace {

void check_action_tables(const InverseSemigroup& T, int nx,
                         const std::vector<Idx>& right_action, int ny,
                         const std::vector<Idx>& left_action) {
  if (right_action.size() != static_cast<size_t>(nx) * T.n ||
      left_action.size() != static_cast<size_t>(T.n) * ny)
    throw Error(ErrorKind::NotAnAction, "action table has wrong size");
  auto ra = [&](int x, Idx t) { return right_action[static_cast<size_t>(x) * T.n + t]; };
  auto la = [&](Idx t, int y) { return left_action[static_cast<size_t>(t) * ny + y]; };
  for (int x = 0; x < nx; ++x)
    for (Idx t = 0; t < T.n; ++t) {
      if (ra(x, t) < 0 || ra(x, t) >= nx)
        throw Error(ErrorKind::NotAnAction, "right action out of range", {x, t});
      for (Idx u = 0; u < T.n; ++u)
        if (ra(ra(x, t), u) != ra(x, T.mul(t, u)))
          throw Error(ErrorKind::NotAnAction, "right action not associative", {x, t, u});
    }
  for (Idx t = 0; t < T.n; ++t)
    for (int y = 0; y < ny; ++y) {
      if (la(t, y) < 0 || la(t, y) >= ny)
        throw Error(ErrorKind::NotAnAction, "left action out of range", {t, y});
      for (Idx u = 0; u < T.n; ++u)
        if (la(t, la(u, y)) != la(T.mul(t, u), y))
          throw Error(ErrorKind::NotAnAction, "left action not associative", {t, u, y});
    }
}

}  // namespace

TensorProduct tensor_product(const InverseSemigroup& T, int nx,
                             const std::vector<Idx>& right_action, int ny,
                             const std::vector<Idx>& left_action) {
  check_action_tables(T, nx, right_action, ny, left_action);
  TensorProduct tp;
  tp.nx = nx;
  tp.ny = ny;
  const int total = nx * ny;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int x = 0; x < nx; ++x)
    for (Idx t = 0; t < T.n; ++t)
      for (int y = 0; y < ny; ++y) {
        int xt = right_action[static_cast<size_t>(x) * T.n + t];
        int ty = left_action[static_cast<size_t>(t) * ny + y];
        unite(xt * ny + y, x * ny + ty);
      }
  tp.classes.class_of.assign(total, -1);
  for (int p = 0; p < total; ++p)
    if (find(p) == p) {
      tp.classes.class_of[p] = tp.classes.n_classes++;
      tp.classes.rep.push_back(p);
    }
  for (int p = 0; p < total; ++p) tp.classes.class_of[p] = tp.classes.class_of[find(p)];
  return tp;
}

VerificationReport verify_bilinear_factors(const InverseSemigroup& T, int nx,
                                           const std::vector<Idx>& right_action,
                                           int ny, const std::vector<Idx>& left_action,
                                           const std::vector<int>& values) {
  VerificationReport rep;
  CheckResult bilinear{"bilinear", true, {}};
  auto val = [&](int x, int y) { return values[static_cast<size_t>(x) * ny + y]; };
  for (int x = 0; x < nx && bilinear.pass; ++x)
    for (Idx t = 0; t < T.n && bilinear.pass; ++t)
      for (int y = 0; y < ny && bilinear.pass; ++y) {
        int xt = right_action[static_cast<size_t>(x) * T.n + t];
        int ty = left_action[static_cast<size_t>(t) * ny + y];
        if (val(xt, y) != val(x, ty)) {
          bilinear.pass = false;
          bilinear.witness = {x, t, y};
        }
      }
  rep.checks.push_back(std::move(bilinear));

  auto tp = tensor_product(T, nx, right_action, ny, left_action);
  CheckResult factors{"factors-through-classes", true, {}};
  for (int cls = 0; cls < tp.size() && factors.pass; ++cls) {
    int want = -1;
    for (int x = 0; x < nx && factors.pass; ++x)
      for (int y = 0; y < ny && factors.pass; ++y) {
        if (tp.class_of(x, y) != cls) continue;
        if (want == -1) want = val(x, y);
        else if (val(x, y) != want) {
          factors.pass = false;
          factors.witness = {x, y};
        }
      }
  }
  rep.checks.push_back(std::move(factors));
  return rep;
}

ComposedContext compose_contexts(const MoritaContext& a, const MoritaContext& b) {
  if (a.T.n != b.S.n || a.T.mult != b.S.mult)
    throw Error(ErrorKind::MiddleMismatch,
                "middle semigroups are not identical table-for-table");
  if (!verify_context(a).all_pass() || !verify_context(b).all_pass())
    throw Error(ErrorKind::ContextNotVerified, "compose needs verified contexts");

  const auto& T = a.T;
  auto tp = tensor_product(T, a.m, a.right, b.m, b.left);
  const int mz = tp.size();

  MoritaContext z;
  z.S = a.S;
  z.T = b.T;
  z.m = mz;
  z.left.assign(static_cast<size_t>(z.S.n) * mz, -1);
  z.right.assign(static_cast<size_t>(mz) * z.T.n, -1);
  z.ip_S.assign(static_cast<size_t>(mz) * mz, -1);
  z.ip_T.assign(static_cast<size_t>(mz) * mz, -1);

  // Every value is computed from every representative pair; a disagreement
  // would contradict the bilinearity argument in the paper.
  for (int x = 0; x < a.m; ++x)
    for (int y = 0; y < b.m; ++y) {
      int cls = tp.class_of(x, y);
      for (Idx s = 0; s < z.S.n; ++s) {
        int img = tp.class_of(a.lact(s, x), y);
        Idx& slot = z.left[static_cast<size_t>(s) * mz + cls];
        if (slot == -1)
          slot = img;
        else if (slot != img)
          throw TheoremViolation("composite left action not well defined", {s, x, y});
      }
      for (Idx u = 0; u < z.T.n; ++u) {
        int img = tp.class_of(x, b.ract(y, u));
        Idx& slot = z.right[static_cast<size_t>(cls) * z.T.n + u];
        if (slot == -1)
          slot = img;
        else if (slot != img)
          throw TheoremViolation("composite right action not well defined", {x, y, u});
      }
    }
  for (int x = 0; x < a.m; ++x)
    for (int y = 0; y < b.m; ++y) {
      int cls = tp.class_of(x, y);
      for (int x2 = 0; x2 < a.m; ++x2)
        for (int y2 = 0; y2 < b.m; ++y2) {
          int cls2 = tp.class_of(x2, y2);
          // <x@y, x2@y2> = < x <y,y2>_T, x2 >_S
          Idx ips_val = a.ips(a.ract(x, b.ips(y, y2)), x2);
          Idx& s_slot = z.ip_S[static_cast<size_t>(cls) * mz + cls2];
          if (s_slot == -1)
            s_slot = ips_val;
          else if (s_slot != ips_val)
            throw TheoremViolation("composite ip_S not well defined", {x, y, x2, y2});
          // [x@y, x2@y2] = [ y, [x,x2]_T y2 ]_U
          Idx ipt_val = b.ipt(y, b.lact(a.ipt(x, x2), y2));
          Idx& t_slot = z.ip_T[static_cast<size_t>(cls) * mz + cls2];
          if (t_slot == -1)
            t_slot = ipt_val;
          else if (t_slot != ipt_val)
            throw TheoremViolation("composite ip_T not well defined", {x, y, x2, y2});
        }
    }
  if (!verify_context(z).all_pass())
    throw TheoremViolation("composite context failed verification");
  return ComposedContext{std::move(z), std::move(tp)};
}

namespace {

SelfTensor self_tensor(const MoritaContext& ctx, bool dual) {
  if (!verify_context(ctx).all_pass())
    throw Error(ErrorKind::ContextNotVerified, "self tensor needs a verified context");
  // S side: X is a right T-set as given and a left T-set by tx = xt*.
  // T side: X is a left S-set as given and a right S-set by xs = s*x.
  const auto& M = dual ? ctx.S : ctx.T;   // tensor over this semigroup
  const auto& R = dual ? ctx.T : ctx.S;   // reconstructed semigroup
  const int m = ctx.m;
  std::vector<Idx> right_action(static_cast<size_t>(m) * M.n);
  std::vector<Idx> left_action(static_cast<size_t>(M.n) * m);
  for (int x = 0; x < m; ++x)
    for (Idx t = 0; t < M.n; ++t) {
      right_action[static_cast<size_t>(x) * M.n + t] =
          dual ? ctx.lact(M.star(t), x) : ctx.ract(x, t);
      left_action[static_cast<size_t>(t) * m + x] =
          dual ? ctx.lact(t, x) : ctx.ract(x, M.star(t));
    }

  SelfTensor st;
  st.tp = tensor_product(M, m, right_action, m, left_action);
  auto ip = [&](int x, int y) { return dual ? ctx.ipt(x, y) : ctx.ips(x, y); };

  st.class_to_S.assign(st.tp.size(), -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int cls = st.tp.class_of(x, y);
      Idx v = ip(x, y);
      if (st.class_to_S[cls] == -1)
        st.class_to_S[cls] = v;
      else if (st.class_to_S[cls] != v)
        throw TheoremViolation("self-tensor map not well defined", {x, y});
    }
  if (st.tp.size() != R.n)
    throw TheoremViolation("self-tensor class count differs from |S|",
                           {st.tp.size(), R.n});
  std::vector<std::uint8_t> hit(R.n, 0);
  for (Idx v : st.class_to_S) {
    if (hit[v]) throw TheoremViolation("self-tensor map not injective", {v});
    hit[v] = 1;
  }
  // Product and involution match the tables of R:
  //   S side: (x@y)(x2@y2) = x[y,x2] @ y2
  //   T side: (x@y)(x2@y2) = x @ <y,x2> y2
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int x2 = 0; x2 < m; ++x2)
        for (int y2 = 0; y2 < m; ++y2) {
          int prod_cls = dual ? st.tp.class_of(x, ctx.lact(ctx.ips(y, x2), y2))
                              : st.tp.class_of(ctx.ract(x, ctx.ipt(y, x2)), y2);
          if (st.class_to_S[prod_cls] != R.mul(ip(x, y), ip(x2, y2)))
            throw TheoremViolation("self-tensor product mismatch", {x, y, x2, y2});
        }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (st.class_to_S[st.tp.class_of(y, x)] != R.star(ip(x, y)))
        throw TheoremViolation("self-tensor involution mismatch", {x, y});
  return st;
}

}  // namespace

SelfTensor self_tensor_isomorphism(const MoritaContext& ctx) {
  return self_tensor(ctx, false);
}

SelfTensor self_tensor_isomorphism_dual(const MoritaContext& ctx) {
  return self_tensor(ctx, true);
}

MoritaContext opposite_context(const MoritaContext& ctx) {
  MoritaContext o;
  o.S = ctx.T;
  o.T = ctx.S;
  o.m = ctx.m;
  o.left.assign(static_cast<size_t>(o.S.n) * o.m, -1);
  o.right.assign(static_cast<size_t>(o.m) * o.T.n, -1);
  for (Idx t = 0; t < o.S.n; ++t)
    for (int x = 0; x < o.m; ++x)
      o.left[static_cast<size_t>(t) * o.m + x] = ctx.ract(x, ctx.T.star(t));
  for (int x = 0; x < o.m; ++x)
    for (Idx s = 0; s < o.T.n; ++s)
      o.right[static_cast<size_t>(x) * o.T.n + s] = ctx.lact(ctx.S.star(s), x);
  o.ip_S = ctx.ip_T;
  o.ip_T = ctx.ip_S;
  return o;
}

}  // namespace morita
