#include "morita/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace morita {

bool is_partial_order(const Poset& p) {
  const int n = p.n;
  for (int a = 0; a < n; ++a)
    if (!p.le(a, a)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && p.le(a, b) && p.le(b, a)) return false;
      for (int c = 0; c < n; ++c)
        if (p.le(a, b) && p.le(b, c) && !p.le(a, c)) return false;
    }
  return true;
}

Lattice downset_lattice(const Poset& p) {
  const int n = p.n;
  if (n > 62) throw Error(ErrorKind::TooLarge, "poset too large for downset lattice");
  std::vector<std::uint64_t> downsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n; ++b)
        if (p.le(b, a) && !(mask >> b & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) downsets.push_back(mask);
  }
  const int m = static_cast<int>(downsets.size());
  Lattice lat;
  lat.order.n = m;
  lat.order.rel.assign(static_cast<size_t>(m) * m, 0);
  lat.meet.assign(static_cast<size_t>(m) * m, -1);
  lat.join.assign(static_cast<size_t>(m) * m, -1);
  lat.member_mask = downsets;
  auto index_of = [&](std::uint64_t mask) {
    return static_cast<int>(std::lower_bound(downsets.begin(), downsets.end(), mask) -
                            downsets.begin());
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      lat.order.rel[static_cast<size_t>(a) * m + b] =
          (downsets[a] & ~downsets[b]) == 0;
      lat.meet[static_cast<size_t>(a) * m + b] = index_of(downsets[a] & downsets[b]);
      lat.join[static_cast<size_t>(a) * m + b] = index_of(downsets[a] | downsets[b]);
    }
  return lat;
}

Lattice lattice_from_poset(const Poset& p) {
  const int n = p.n;
  Lattice lat;
  lat.order = p;
  lat.meet.assign(static_cast<size_t>(n) * n, -1);
  lat.join.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int meet = -1, join = -1;
      for (int c = 0; c < n; ++c) {
        if (p.le(c, a) && p.le(c, b) && (meet < 0 || p.le(meet, c))) meet = c;
        if (p.le(a, c) && p.le(b, c) && (join < 0 || p.le(c, join))) join = c;
      }
      // The greatest lower bound must dominate every lower bound.
      for (int c = 0; c < n; ++c) {
        if (p.le(c, a) && p.le(c, b) && (meet < 0 || !p.le(c, meet)))
          throw Error(ErrorKind::BadTable, "poset is not a lattice (no meet)", {a, b});
        if (p.le(a, c) && p.le(b, c) && (join < 0 || !p.le(join, c)))
          throw Error(ErrorKind::BadTable, "poset is not a lattice (no join)", {a, b});
      }
      lat.meet[static_cast<size_t>(a) * n + b] = meet;
      lat.join[static_cast<size_t>(a) * n + b] = join;
    }
  return lat;
}

namespace {

// (height, #below, #above) per element; isomorphic posets must match these.
std::vector<std::array<int, 3>> poset_signature(const Poset& p) {
  const int n = p.n;
  std::vector<std::array<int, 3>> sig(n);
  std::vector<int> height(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && p.le(b, a) && height[a] < height[b] + 1) {
          height[a] = height[b] + 1;
          changed = true;
        }
  }
  for (int a = 0; a < n; ++a) {
    int below = 0, above = 0;
    for (int b = 0; b < n; ++b) {
      if (p.le(b, a)) ++below;
      if (p.le(a, b)) ++above;
    }
    sig[a] = {height[a], below, above};
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& a, const Poset& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  auto siga = poset_signature(a);
  auto sigb = poset_signature(b);
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || siga[i] != sigb[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = (a.le(i, k) == b.le(j, map[k])) && (a.le(k, i) == b.le(map[k], j));
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (place(i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace morita
