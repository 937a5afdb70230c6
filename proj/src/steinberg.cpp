#include "gl3/steinberg.hpp"

#include <algorithm>
#include <sstream>

#include "gl3/errors.hpp"
#include "gl3/intertwine.hpp"

namespace gl3 {

void VirtualRep::add(const Triple& c, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(c, coeff);
  if (!inserted && (it->second += coeff) == 0) terms.erase(it);
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (o.basis != basis) throw Error("adding virtual representations in different bases");
  for (const auto& [c, v] : o.terms) add(c, v);
  return *this;
}

std::string VirtualRep::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  const char sym = basis == Basis::U ? 'U' : 'V';
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [c, v] = *it;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    const auto mag = v < 0 ? -v : v;
    if (mag != 1) os << mag;
    os << "[" << sym << c.str() << "]";
    first = false;
  }
  return os.str();
}

VirtualRep v_in_u(const Triple& c) {
  VirtualRep out;
  out.basis = Basis::U;
  for (const auto& I : subset_terms(c)) out.add(I.t, I.size % 2 == 0 ? 1 : -1);
  return out;
}

VirtualRep u_in_v(const Triple& c) {
  VirtualRep out;
  out.basis = Basis::V;
  for (const auto& d : triples_below(c)) out.add(d, 1);
  return out;
}

VirtualRep to_V_basis(const VirtualRep& v) {
  if (v.basis == Basis::V) return v;
  VirtualRep out;
  out.basis = Basis::V;
  for (const auto& [c, k] : v.terms)
    for (const auto& [d, m] : u_in_v(c).terms) out.add(d, k * m);
  return out;
}

VirtualRep to_U_basis(const VirtualRep& v) {
  if (v.basis == Basis::U) return v;
  VirtualRep out;
  out.basis = Basis::U;
  for (const auto& [c, k] : v.terms)
    for (const auto& [d, m] : v_in_u(c).terms) out.add(d, k * m);
  return out;
}

VirtualRep steinberg_r(int r) {
  if (r < 0) throw OutOfRange("r must be non-negative");
  VirtualRep out;
  out.basis = Basis::U;
  for (int c1 = 0; c1 <= r; ++c1)
    for (int c2 = 0; c2 <= r; ++c2) out.add({c1, c2, std::max(c1, c2)}, (c1 + c2) % 2 == 0 ? 1 : -1);
  return out;
}

bool lemma_recursion_check(int r) {
  if (r < 2) throw OutOfRange("the recursion needs r >= 2");
  VirtualRep rhs = to_V_basis(steinberg_r(r - 2));
  for (int c1 = 0; c1 <= r; ++c1)
    for (int c2 = 0; c2 <= r; ++c2)
      if (in_T(c1, c2, r) && (c1 - c2) % 2 == 0) rhs.add({c1, c2, r}, (r - c1) % 2 == 0 ? 1 : -1);
  return rhs == to_V_basis(steinberg_r(r));
}

Triple class_key(const Triple& c) {
  require_in_T(c);
  if (c == Triple{0, 0, 0}) return c;
  const int k = chain_k(c), l = chain_len(c);
  if (k == 0) return {0, c.c3, c.c3};
  if (k < l && k <= l / 2) {
    // Equivalent triples share c3 and k; pick the one with the smallest c1,
    // which has c1 = 2k (so that ℓ/2 >= k still holds).
    return {2 * k, c.c1 + c.c2 - 2 * k, c.c3};
  }
  return c;
}

std::vector<std::vector<Triple>> equivalence_classes(const std::vector<Triple>& triples) {
  std::map<Triple, std::vector<Triple>> by_key;
  for (const auto& t : triples) {
    auto& v = by_key[class_key(t)];
    if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
  }
  std::vector<std::vector<Triple>> out;
  for (auto& [k, v] : by_key) {
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

PositivityReport is_true_representation(const VirtualRep& v) {
  const VirtualRep vb = to_V_basis(v);
  std::map<Triple, ClassTotal> by_key;
  for (const auto& [c, k] : vb.terms) {
    auto& ct = by_key[class_key(c)];
    ct.key = class_key(c);
    ct.members.push_back(c);
    ct.total += k;
  }
  PositivityReport rep;
  for (auto& [key, ct] : by_key) {
    if (ct.total < 0) {
      rep.true_representation = false;
      rep.witness = ct;
    }
    rep.classes.push_back(ct);
  }
  return rep;
}

TheoremReport verify_steinberg(int r_max) {
  if (r_max < 2 || r_max > 8) throw OutOfRange("r must lie in [2, 8]");
  TheoremReport rep;
  rep.claim = "steinberg";
  rep.range = "r <= " + std::to_string(r_max);
  auto flag = [](bool b) { return QPoly(b ? 1 : 0); };
  for (int r = 2; r <= r_max; ++r) {
    const Triple tag{r, r, r};
    rep.expect("recursion", tag, tag, flag(true), flag(lemma_recursion_check(r)));
  }
  VirtualRep s0;
  s0.basis = Basis::V;
  s0.add({0, 0, 0}, 1);
  VirtualRep s1;
  s1.basis = Basis::V;
  s1.add({1, 1, 1}, 1);
  rep.expect("S0", {0, 0, 0}, {0, 0, 0}, flag(true), flag(to_V_basis(steinberg_r(0)) == s0));
  rep.expect("S1", {1, 1, 1}, {1, 1, 1}, flag(true), flag(to_V_basis(steinberg_r(1)) == s1));
  VirtualRep s2;
  s2.basis = Basis::V;
  s2.add({2, 2, 2}, 1);
  s2.add({1, 1, 2}, -1);
  s2.add({0, 2, 2}, 1);
  s2.add({2, 0, 2}, 1);
  s2.add({0, 0, 0}, 1);
  rep.expect("S2-display", {2, 2, 2}, {2, 2, 2}, flag(true), flag(to_V_basis(steinberg_r(2)) == s2));
  for (int r = 0; r <= r_max; ++r) {
    const auto pos = is_true_representation(steinberg_r(r));
    const Triple tag{r, r, r};
    std::string note = "negative classes:";
    for (const auto& ct : pos.classes)
      if (ct.total < 0) note += " " + ct.key.str() + "=" + std::to_string(ct.total);
    rep.expect("true-iff-r<=2", tag, tag, flag(r <= 2), flag(pos.true_representation), {}, note);
    if (r > 2) {
      // The class of (r-1, r-1, r) is a singleton carrying coefficient -1.
      const Triple top{r - 1, r - 1, r};
      std::int64_t total = 0;
      for (const auto& ct : pos.classes)
        if (ct.key == class_key(top)) total = ct.total;
      rep.expect("top-class-negative", top, top, QPoly(-1), QPoly(total));
      std::int64_t members = 0;
      for (const auto& c : triples_up_to(r))
        if (class_key(c) == class_key(top)) ++members;
      rep.expect("top-class-singleton", top, top, QPoly(1), QPoly(members));
    }
  }
  // Distinct classes over the support of S_r share no constituents and
  // members of a class are mutually equivalent.
  for (int r = 0; r <= std::min(r_max, 4); ++r) {
    std::vector<Triple> support;
    for (const auto& [c, k] : to_V_basis(steinberg_r(r)).terms) support.push_back(c);
    for (const auto& c : support)
      for (const auto& d : support) {
        auto vv = intertwine_VV(c, d).total;
        if (class_key(c) == class_key(d)) {
          rep.expect("same-class-equivalent", c, d, intertwine_VV(c, c).total, vv);
        } else {
          rep.expect("distinct-classes-disjoint", c, d, QPoly(), vv);
        }
      }
  }
  return rep;
}

TheoremReport verify_bases(int bound) {
  TheoremReport rep;
  rep.claim = "bases";
  rep.range = "entries <= " + std::to_string(bound);
  auto flag = [](bool b) { return QPoly(b ? 1 : 0); };
  for (const auto& c : triples_up_to(bound)) {
    VirtualRep vc;
    vc.basis = Basis::V;
    vc.add(c, 1);
    VirtualRep uc;
    uc.basis = Basis::U;
    uc.add(c, 1);
    rep.expect("V->U->V", c, c, flag(true), flag(to_V_basis(v_in_u(c)) == vc));
    rep.expect("U->V->U", c, c, flag(true), flag(to_U_basis(u_in_v(c)) == uc));
    VirtualRep mobius;
    mobius.basis = Basis::U;
    for (const auto& d : triples_below(c)) mobius += v_in_u(d);
    rep.expect("mobius", c, c, flag(true), flag(mobius == uc));
  }
  return rep;
}

}  // namespace gl3
