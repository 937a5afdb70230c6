#include "gl3/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

enum class Side { zero, first, second, full };

// (c,0,c) is "first" (only the (2,1) entry is constrained), (0,c,c) "second".
Side side_of(const Triple& c) {
  if (c == Triple{0, 0, 0}) return Side::zero;
  if (c.c2 == 0) return Side::first;
  if (c.c1 == 0) return Side::second;
  return Side::full;
}

bool is_zero(const Triple& c) { return c == Triple{0, 0, 0}; }

int min_prime(std::initializer_list<int> terms) {
  int m = *std::min_element(terms.begin(), terms.end());
  return m < 0 ? 0 : m;
}

Triple reduce_once(const Triple& a, const Triple& c, const Triple& d) {
  const Triple cu = c.floor1(), du = d.floor1();
  const int b1 = std::min({a.c1, cu.c1, du.c1});
  const int b2 = std::min({a.c2, cu.c2, du.c2});
  const int left = (c.c2 == 0 && d.c2 == 0) ? a.c1 : a.c1 + cu.c2;
  const int right = (c.c1 == 0 && d.c1 == 0) ? a.c2 : du.c1 + a.c2;
  const int b3 = std::min({a.c3, c.c3, d.c3, left, right});
  return {b1, b2, b3};
}

}  // namespace

std::string_view weyl_name(Weyl w) {
  switch (w) {
    case Weyl::e: return "1";
    case Weyl::s1: return "s1";
    case Weyl::s2: return "s2";
    case Weyl::s1s2: return "s1s2";
    case Weyl::s2s1: return "s2s1";
    case Weyl::w0: return "w0";
  }
  return "?";
}

Weyl parse_weyl(std::string_view s) {
  if (s == "1" || s == "e") return Weyl::e;
  for (Weyl w : kAllWeyl)
    if (weyl_name(w) == s) return w;
  throw InvalidDescriptor("unknown Weyl element '" + std::string(s) + "'");
}

std::vector<Weyl> WSet::elements() const {
  std::vector<Weyl> out;
  for (Weyl w : kAllWeyl)
    if (contains(w)) out.push_back(w);
  return out;
}

std::string RepDescriptor::str() const {
  std::ostringstream os;
  os << weyl_name(w);
  switch (w) {
    case Weyl::e: os << " a=" << a.str() << " x=" << x; break;
    case Weyl::s1:
    case Weyl::s2: os << " (" << alpha << "," << beta << ")"; break;
    case Weyl::s1s2:
    case Weyl::s2s1: os << " (" << alpha << ")"; break;
    case Weyl::w0: break;
  }
  return os.str();
}

WSet w_set(const Triple& c, const Triple& d) {
  require_in_T(c);
  require_in_T(d);
  WSet s;
  s.insert(Weyl::e);
  const Side sc = side_of(c), sd = side_of(d);
  if (sc == Side::zero || sd == Side::zero) return s;
  s.insert(Weyl::w0);
  if (sc != Side::full && sd != Side::full) return s;
  if (sc == Side::full && sd == Side::full) {
    for (Weyl w : kAllWeyl) s.insert(w);
    return s;
  }
  const Side degenerate = sc == Side::full ? sd : sc;
  s.insert(degenerate == Side::first ? Weyl::s1 : Weyl::s2);
  return s;
}

Triple reduce_triple(const Triple& a, const Triple& c, const Triple& d) {
  require_in_T(c);
  require_in_T(d);
  if (a.c1 < 1 || a.c2 < 1 || a.c3 < std::max(a.c1, a.c2))
    throw InvalidTriple("reduce_triple needs a1, a2 >= 1 and a3 >= max(a1, a2), got " + a.str());
  if (is_zero(c) || is_zero(d)) return {1, 1, 1};
  // A single pass can leave a3 above the new bound min(b1 + c2, d1 + b2)
  // once b1 or b2 has dropped; repeating reaches the fixed point.
  Triple cur = a;
  for (;;) {
    Triple next = reduce_once(cur, c, d);
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Triple> t_cd(const Triple& c, const Triple& d) {
  require_in_T(c);
  require_in_T(d);
  std::vector<Triple> out;
  if (is_zero(c) || is_zero(d)) return {{1, 1, 1}};
  if (c.c1 == 0 && d.c1 == 0) {
    for (int a = 1; a <= std::min(c.c2, d.c2); ++a) out.push_back({1, a, a});
    return out;
  }
  if (c.c2 == 0 && d.c2 == 0) {
    for (int a = 1; a <= std::min(c.c1, d.c1); ++a) out.push_back({a, 1, a});
    return out;
  }
  const Triple cu = c.floor1(), du = d.floor1();
  for (int a1 = 1; a1 <= std::min(cu.c1, du.c1); ++a1)
    for (int a2 = 1; a2 <= std::min(cu.c2, du.c2); ++a2) {
      const int hi = std::min({cu.c3, du.c3, a1 + cu.c2, du.c1 + a2});
      for (int a3 = std::max(a1, a2); a3 <= hi; ++a3) out.push_back({a1, a2, a3});
    }
  return out;
}

bool in_t_cd(const Triple& a, const Triple& c, const Triple& d) {
  const auto all = t_cd(c, d);
  return std::find(all.begin(), all.end(), a) != all.end();
}

ABounds a_bounds(const Triple& c, const Triple& d, const Triple& a) {
  ABounds b;
  b.a_min = min_prime({a.c1, a.c2, a.c3 - a.c1, a.c3 - a.c2, c.c1 - a.c1, c.c2 - a.c2, c.c3 - a.c3, d.c1 - a.c1,
                       d.c2 - a.c2, d.c3 - a.c3, a.c1 + c.c2 - a.c3, d.c1 + a.c2 - a.c3});
  b.a_min_prime = min_prime({d.c3 - a.c3, c.c3 - a.c3, c.c1 - a.c1, d.c2 - a.c2});
  return b;
}

QPoly x_size(const Triple& c, const Triple& d, const Triple& a) {
  const auto [m, mp] = a_bounds(c, d, a);
  const QPoly unit_part = m == 0 ? QPoly(1) : QPoly{-1, 1} * QPoly::monomial(1, m - 1);
  if (a.c1 + a.c2 != a.c3) return unit_part;
  if (m == 0) return QPoly(mp + 1);
  return QPoly(mp - m + 1) * unit_part;
}

std::vector<std::pair<int, int>> weyl_params(const Triple& c, const Triple& d, Weyl w) {
  std::vector<std::pair<int, int>> out;
  if (!w_set(c, d).contains(w)) return out;
  const Triple cu = c.floor1(), du = d.floor1();
  switch (w) {
    case Weyl::e: break;
    case Weyl::s1:
      for (int al = 1; al <= std::min(du.c2, c.c3); ++al)
        for (int be = 1; be <= std::min(cu.c2, d.c3); ++be)
          if (-c.c1 <= be - al && be - al <= d.c1) out.emplace_back(al, be);
      break;
    case Weyl::s2:
      for (int al = 1; al <= std::min(du.c1, c.c3); ++al)
        for (int be = 1; be <= std::min(cu.c1, d.c3); ++be)
          if (-c.c2 <= be - al && be - al <= d.c2) out.emplace_back(al, be);
      break;
    case Weyl::s1s2:
      for (int al = 1; al <= std::min(d.c1, c.c2); ++al) out.emplace_back(al, 0);
      break;
    case Weyl::s2s1:
      for (int al = 1; al <= std::min(c.c1, d.c2); ++al) out.emplace_back(al, 0);
      break;
    case Weyl::w0: out.emplace_back(0, 0); break;
  }
  return out;
}

QPoly catalog_count_w(const Triple& c, const Triple& d, Weyl w) {
  if (!w_set(c, d).contains(w)) return QPoly();
  if (w != Weyl::e) return QPoly(static_cast<std::int64_t>(weyl_params(c, d, w).size()));
  QPoly total;
  for (const auto& a : t_cd(c, d)) total += x_size(c, d, a);
  return total;
}

QPoly catalog_count(const Triple& c, const Triple& d) {
  QPoly total;
  for (Weyl w : kAllWeyl) total += catalog_count_w(c, d, w);
  return total;
}

namespace {

std::vector<Residue> units_below(const RingCtx& ctx, int m) {
  std::vector<Residue> out;
  const Residue bound = ctx.p_pow(m);
  for (Residue u = 1; u < bound; ++u)
    if (ctx.is_unit(u)) out.push_back(u);
  return out;
}

void check_x_level(const RingCtx& ctx, int k) {
  if (k > ctx.level())
    throw LevelTooSmall("X-set needs residues mod p^" + std::to_string(k) + " but N=" + std::to_string(ctx.level()));
}

}  // namespace

std::vector<Residue> x_set(const Triple& c, const Triple& d, const Triple& a, const RingCtx& ctx) {
  const auto [m, mp] = a_bounds(c, d, a);
  if (a.c1 + a.c2 != a.c3) {
    if (m == 0) return {1};
    check_x_level(ctx, m);
    return units_below(ctx, m);
  }
  check_x_level(ctx, mp);
  // x = 1 stands for the class val(1 - x) >= a'; otherwise x = 1 - p^i u with
  // i = val(1 - x) < a' and u taken mod p^min(a, a' - i).
  std::vector<Residue> out{1};
  for (int i = 0; i < mp; ++i) {
    const int len = std::min(m, mp - i);
    const Residue pi = ctx.p_pow(i);
    if (len == 0) {
      out.push_back(ctx.add(1, pi));
      continue;
    }
    for (Residue u : units_below(ctx, len)) {
      if (i == 0 && u % ctx.p() == 1) continue;
      out.push_back(ctx.sub(1, ctx.mul(pi, u)));
    }
  }
  return out;
}

namespace {

// X-set element for a with a1 + a2 = a3 whose class has val(1 - x) = i and
// unit part `unit` of 1 - x.
Residue sum_case_x(const RingCtx& ctx, int m, int mp, int i, Residue unit) {
  if (i >= mp) return 1;
  const int len = std::min(m, mp - i);
  const Residue pi = ctx.p_pow(i);
  if (len == 0) return ctx.add(1, pi);
  return ctx.sub(1, ctx.mul(pi, unit % ctx.p_pow(len)));
}

}  // namespace

Residue canonical_x(const Triple& c, const Triple& d, const Triple& a, Residue x, const RingCtx& ctx) {
  if (!ctx.is_unit(x)) throw InvalidDescriptor("x must be a unit");
  const auto [m, mp] = a_bounds(c, d, a);
  if (a.c1 + a.c2 != a.c3) {
    if (m == 0) return 1;
    check_x_level(ctx, m);
    return x % ctx.p_pow(m);
  }
  check_x_level(ctx, mp);
  const Residue one_minus = ctx.sub(1, x);
  return sum_case_x(ctx, m, mp, ctx.trunc_val(one_minus), ctx.unit_part(one_minus));
}

RepDescriptor reduce_descriptor(const Triple& a, Residue x, const Triple& c, const Triple& d, const RingCtx& ctx) {
  if (!ctx.is_unit(x)) throw InvalidDescriptor("x must be a unit");
  RepDescriptor out;
  out.a = reduce_triple(a, c, d);
  if (out.a.c1 + out.a.c2 != out.a.c3) {
    out.x = canonical_x(c, d, out.a, x, ctx);
    return out;
  }
  // 1 - x generalises to (p^(a1+a2) - x p^a3) / p^b3; b ⪯ a keeps this integral
  const auto [m, mp] = a_bounds(c, d, out.a);
  check_x_level(ctx, mp);
  const Residue r = ctx.sub(ctx.p_pow(a.c1 + a.c2), ctx.mul(x, ctx.p_pow(a.c3)));
  const int i = std::min(ctx.trunc_val(r), ctx.level()) - out.a.c3;
  out.x = sum_case_x(ctx, m, mp, i, ctx.unit_part(r));
  return out;
}

RingMat rep_matrix(const RepDescriptor& r, const RingCtx& ctx) {
  RingMat g;
  auto set_rows = [&](std::array<Residue, 9> e) { g.e = e; };
  auto pp = [&](int k) { return ctx.p_pow(k); };
  switch (r.w) {
    case Weyl::e:
      set_rows({1, 0, 0, pp(r.a.c1), 1, 0, ctx.mul(pp(r.a.c3), r.x), pp(r.a.c2), 1});
      break;
    case Weyl::s1: set_rows({0, 1, 0, 1, 0, 0, pp(r.beta), pp(r.alpha), 1}); break;
    case Weyl::s2: set_rows({1, 0, 0, pp(r.beta), 0, 1, pp(r.alpha), 1, 0}); break;
    case Weyl::s1s2: set_rows({0, 0, 1, 1, 0, 0, pp(r.alpha), 1, 0}); break;
    case Weyl::s2s1: set_rows({0, 1, 0, 0, pp(r.alpha), 1, 1, 0, 0}); break;
    case Weyl::w0: g = RingMat::w0(); break;
  }
  return g;
}

std::vector<RepDescriptor> descriptors(const Triple& c, const Triple& d, const RingCtx& ctx) {
  std::vector<RepDescriptor> out;
  const WSet ws = w_set(c, d);
  for (Weyl w : kAllWeyl) {
    if (!ws.contains(w)) continue;
    if (w == Weyl::e) {
      for (const auto& a : t_cd(c, d))
        for (Residue x : x_set(c, d, a, ctx)) out.push_back({Weyl::e, a, x, 0, 0});
      continue;
    }
    for (auto [al, be] : weyl_params(c, d, w)) {
      RepDescriptor r;
      r.w = w;
      r.alpha = al;
      r.beta = be;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<std::pair<RepDescriptor, RingMat>> materialize(const Triple& c, const Triple& d, const RingCtx& ctx) {
  require_in_T(c);
  require_in_T(d);
  if (ctx.level() < std::max(c.c3, d.c3))
    throw LevelTooSmall("materialize needs N >= max(c3, d3) = " + std::to_string(std::max(c.c3, d.c3)));
  std::vector<std::pair<RepDescriptor, RingMat>> out;
  for (const auto& r : descriptors(c, d, ctx)) out.emplace_back(r, rep_matrix(r, ctx));
  return out;
}

bool is_valid_descriptor(const Triple& c, const Triple& d, const RepDescriptor& r, const RingCtx& ctx) {
  const auto all = descriptors(c, d, ctx);
  return std::find(all.begin(), all.end(), r) != all.end();
}

RepDescriptor invert_descriptor(const Triple& c, const Triple& d, const RepDescriptor& r, const RingCtx& ctx) {
  if (!is_valid_descriptor(c, d, r, ctx)) throw InvalidDescriptor(r.str() + " is not a representative for " + c.str() + "," + d.str());
  RepDescriptor out = r;
  switch (r.w) {
    case Weyl::s1:
    case Weyl::s2: std::swap(out.alpha, out.beta); return out;
    case Weyl::s1s2: out.w = Weyl::s2s1; return out;
    case Weyl::s2s1: out.w = Weyl::s1s2; return out;
    case Weyl::w0: return out;
    case Weyl::e: break;
  }
  // The inverse of t_{a,x} is conjugate by diag(1,-1,1) to the lower
  // unitriangular matrix with entries p^a1, p^a2 and r = p^(a1+a2) - x p^a3.
  const Triple& a = r.a;
  Residue x = r.x;
  // x = 1 names the class val(1 - x) >= a'; use the member 1 + p^a', whose
  // inverse needs no further reduction.
  if (a.c1 + a.c2 == a.c3 && x == 1) x = ctx.add(1, ctx.p_pow(a_bounds(c, d, a).a_min_prime));
  const Residue rx = ctx.sub(ctx.p_pow(a.c1 + a.c2), ctx.mul(x, ctx.p_pow(a.c3)));
  Triple b{a.c1, a.c2, ctx.level() + std::max(a.c1, a.c2)};
  Residue y = 1;
  if (rx != 0) {
    b.c3 = ctx.trunc_val(rx);
    y = ctx.unit_part(rx);
  }
  out.a = reduce_triple(b, d, c);
  out.x = canonical_x(d, c, out.a, y, ctx);
  return out;
}

}  // namespace gl3
