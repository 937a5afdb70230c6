#include "gl3/theorem_harness.hpp"

#include <algorithm>
#include <sstream>

#include "gl3/errors.hpp"
#include "gl3/intertwine.hpp"

namespace gl3 {

namespace {

const QPoly kQ = QPoly::q();
const QPoly kQm1 = QPoly{-1, 1};
const QPoly kQm2 = QPoly{-2, 1};
const QPoly kQm3 = QPoly{-3, 1};

QPoly qpow(int e) { return QPoly::monomial(1, e); }

std::string range_str(const std::string& what, int bound) {
  return what + " <= " + std::to_string(bound);
}

void require_level_range(int max_level, int lo, int hi) {
  if (max_level < lo || max_level > hi)
    throw OutOfRange("max_level must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<Triple> one_descendant_at(int s) {
  std::vector<Triple> out;
  for (int c1 = 0; c1 <= s; ++c1) out.push_back({c1, s - c1, s});
  return out;
}

std::vector<Triple> three_descendant_upto(int bound) {
  std::vector<Triple> out;
  for (const auto& c : triples_up_to(bound))
    if (three_descendant(c)) out.push_back(c);
  return out;
}

std::string fingerprint(const std::vector<std::uint64_t>& sizes) {
  std::vector<std::uint64_t> s = sizes;
  std::sort(s.begin(), s.end());
  std::ostringstream os;
  os << "classes=" << s.size() << " sizes=[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

}  // namespace

bool TheoremReport::expect(const std::string& clause, const Triple& c, const Triple& d, const QPoly& expected,
                           const QPoly& computed, const std::map<Weyl, QPoly>& by_weyl, std::string note) {
  ++checks;
  if (expected == computed) return true;
  pass = false;
  counterexamples.push_back({clause, c, d, expected, computed, by_weyl, std::move(note)});
  return false;
}

void TheoremReport::merge(const TheoremReport& other) {
  checks += other.checks;
  pass = pass && other.pass;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
}

QPoly expected_self_intertwining(const Triple& c) {
  require_in_T(c);
  if (!three_descendant(c)) return QPoly(1);
  const int k = chain_k(c), l = chain_len(c);
  if (k == 1) return kQm2;
  if (k <= l / 2) return kQm1 * kQm1 * qpow(k - 2);
  if (k < l - 1) return kQm1 * qpow(l - k - 1);
  return kQm1;
}

QPoly expected_restricted(const Triple& c, int i) {
  const int k = chain_k(c);
  if (i == k) return k == 1 ? kQm2 : kQm1 * kQm1 * qpow(k - 2);
  return i == 1 ? kQm1 : kQm1 * qpow(i - 1);
}

QPoly expected_Ia(const Triple& c, int i) {
  const int k = chain_k(c);
  if (i == k) return k == 1 ? kQm3 : kQm1 * kQm2 * qpow(k - 2);
  if (i == 0) return QPoly(1);
  if (i == 1) return kQm2;
  return kQm1 * kQm1 * qpow(i - 2);
}

bool three_descendant_equivalent(const Triple& c, const Triple& d) {
  if (c == d) return true;
  const int k = chain_k(c);
  return c.c3 == d.c3 && k == chain_k(d) && k <= std::min(chain_len(c), chain_len(d)) / 2;
}

TheoremReport verify_one_descendant(int max_level) {
  require_level_range(max_level, 2, 8);
  TheoremReport rep;
  rep.claim = "one-descendant";
  rep.range = range_str("c1+c2", max_level);
  const QPoly dim_tail = kQm1 * QPoly{1, 1} * QPoly{1, 1, 1};
  for (int s = 2; s <= max_level; ++s) {
    const auto level = one_descendant_at(s);
    const Triple cube{s, s, s};
    for (const auto& c : level) {
      rep.expect("dim", c, c, qpow(2 * s - 4) * dim_tail, dim_V(c));
      rep.expect("multiplicity", c, cube, QPoly(s + 1), intertwine_VU(c, cube));
      for (const auto& d : level) {
        auto r = intertwine_VV(c, d);
        rep.expect(c == d ? "irreducible" : "same-level-equivalent", c, d, QPoly(1), r.total, r.by_weyl);
      }
      for (int t = 2; t <= max_level; ++t) {
        if (t == s) continue;
        for (const auto& d : one_descendant_at(t)) {
          auto r = intertwine_VV(c, d);
          rep.expect("cross-level-disjoint", c, d, QPoly(), r.total, r.by_weyl);
        }
      }
      for (const auto& d : three_descendant_upto(max_level)) {
        if (d.c3 != c.c3) continue;
        auto r = intertwine_VV(c, d);
        rep.expect("disjoint-from-three-descendant", c, d, QPoly(), r.total, r.by_weyl);
      }
    }
  }
  return rep;
}

TheoremReport verify_two_descendant(int max_level) {
  require_level_range(max_level, 1, 8);
  TheoremReport rep;
  rep.claim = "two-descendant";
  rep.range = range_str("max entry", max_level);
  const QPoly dim_tail = kQm1 * kQm1 * QPoly{1, 1} * QPoly{1, 1, 1};
  for (const auto& c : triples_up_to(max_level)) {
    if (c.c1 < 1 || c.c2 < 1 || c.c3 != std::max(c.c1, c.c2)) continue;
    const int m = c.c3;
    auto self = intertwine_VV(c, c);
    rep.expect("irreducible", c, c, QPoly(1), self.total, self.by_weyl);
    rep.expect("multiplicity", c, {m, m, m}, QPoly(1), intertwine_VU(c, {m, m, m}));
    if (c.c3 > 1) rep.expect("dim", c, c, qpow(c.c1 + c.c2 + m - 5) * dim_tail, dim_V(c));
    for (const auto& d : triples_up_to(max_level)) {
      if (d == c || d.c3 != c.c3) continue;
      auto r = intertwine_VV(c, d);
      rep.expect("disjoint-same-c3", c, d, QPoly(), r.total, r.by_weyl);
    }
  }
  return rep;
}

TheoremReport verify_three_descendant(int max_level) {
  require_level_range(max_level, 3, 8);
  TheoremReport rep;
  rep.claim = "three-descendant";
  rep.range = range_str("max entry", max_level);
  const auto all = three_descendant_upto(max_level);
  std::map<Triple, QPoly> self;
  for (const auto& c : all) {
    auto r = intertwine_VV(c, c);
    self[c] = r.total;
    rep.expect("table", c, c, expected_self_intertwining(c), r.total, r.by_weyl);
    for (Weyl w : kAllWeyl)
      if (w != Weyl::e) rep.expect(std::string("weyl-cancel-") + std::string(weyl_name(w)), c, c, QPoly(), r.by_weyl[w]);
    const int k = chain_k(c), l = chain_len(c);
    QPoly diag_sum;
    for (const auto& [a, v] : r.by_triple) {
      const int i = c.c1 - a.c1;
      const bool diagonal = a == Triple{c.c1 - i, c.c2 - i, c.c3 - i} && i >= 0 && i <= std::min(k, l - k);
      if (diagonal) {
        rep.expect("Ia-value i=" + std::to_string(i), c, a, expected_Ia(c, i), v);
        diag_sum += v;
      } else {
        rep.expect("Ia-off-diagonal", c, a, QPoly(), v);
      }
    }
    rep.expect("Ia-sum", c, c, r.total, diag_sum);
  }
  for (const auto& c : all)
    for (const auto& d : all) {
      if (c == d) continue;
      auto r = intertwine_VV(c, d);
      if (three_descendant_equivalent(c, d)) {
        rep.expect("equivalent-vs-c", c, d, self[c], r.total, r.by_weyl);
        rep.expect("equivalent-vs-d", c, d, self[d], r.total, r.by_weyl);
      } else {
        rep.expect("inequivalent", c, d, QPoly(), r.total, r.by_weyl);
      }
      if (c.c3 != d.c3) continue;
      for (Weyl w : kAllWeyl)
        if (w != Weyl::e) rep.expect(std::string("weyl-cancel-") + std::string(weyl_name(w)), c, d, QPoly(), r.by_weyl[w]);
      const int k = chain_k(c);
      if (k != chain_k(d)) {
        for (const auto& [a, v] : r.by_triple) rep.expect("Ia-zero-k-differs", c, d, QPoly(), v, {}, a.str());
        continue;
      }
      const bool half = k <= std::min(chain_len(c), chain_len(d)) / 2;
      QPoly lemma;
      if (half && c.c1 < d.c1) {
        const Triple a{c.c1 - k, d.c2 - k, c.c3 - k};
        lemma = r.by_triple[a];
        rep.expect("Ia-cross-value", c, d, k == 1 ? kQm2 : kQm1 * kQm1 * qpow(k - 2), lemma, {}, a.str());
      } else if (half && c.c1 > d.c1) {
        lemma = r.by_triple[Triple{d.c1 - k, c.c2 - k, d.c1 + c.c2 - 2 * k}];
      }
      rep.expect("Ia-cross-lemma", c, d, lemma, r.total, r.by_weyl);
    }
  return rep;
}

TheoremReport verify_restricted(int max_level) {
  require_level_range(max_level, 3, 8);
  TheoremReport rep;
  rep.claim = "restricted";
  rep.range = range_str("max entry", max_level);
  for (const auto& c : three_descendant_upto(max_level)) {
    const int lim = std::min(chain_k(c), chain_len(c) - chain_k(c));
    for (int i = 1; i <= lim; ++i)
      rep.expect("restricted i=" + std::to_string(i), c, c, expected_restricted(c, i), intertwine_restricted(c, i));
  }
  return rep;
}

TheoremReport verify_symmetry(int max_entry) {
  TheoremReport rep;
  rep.claim = "symmetry";
  rep.range = range_str("max entry", max_entry);
  const auto all = triples_up_to(max_entry);
  for (const auto& c : all)
    for (const auto& d : all) {
      if (d < c) continue;
      rep.expect("catalog", c, d, catalog_count(c, d), catalog_count(d, c));
      rep.expect("intertwine", c, d, intertwine_VV(c, d).total, intertwine_VV(d, c).total);
    }
  return rep;
}

TheoremReport verify_dimensions(int max_c3, int max_cube) {
  TheoremReport rep;
  rep.claim = "dimensions";
  rep.range = range_str("c3", max_c3) + ", " + range_str("cube n", max_cube);
  for (const auto& c : triples_up_to(max_c3)) {
    QPoly alt;
    for (const auto& I : subset_terms(c)) alt += index_in_K(I.t) * QPoly(I.size % 2 == 0 ? 1 : -1);
    rep.expect("alternating-index", c, c, alt, dim_V(c));
  }
  for (int n = 0; n <= max_cube; ++n) {
    const Triple cube{n, n, n};
    QPoly sum;
    for (const auto& d : triples_below(cube)) sum += dim_V(d);
    const QPoly expected = n == 0 ? QPoly(1) : QPoly{1, 1} * QPoly{1, 1, 1} * qpow(3 * n - 3);
    rep.expect("cube-total", cube, cube, expected, sum);
  }
  return rep;
}

TheoremReport cross_validate(Oracle& oracle, const Triple& bound, int jobs) {
  TheoremReport rep;
  rep.claim = "cross";
  rep.range = "p=" + std::to_string(oracle.ctx().p()) + " N=" + std::to_string(oracle.ctx().level()) + " c,d <= " +
              bound.str();
  const auto all = triples_below(bound);
  std::vector<std::pair<Triple, Triple>> pairs;
  for (const auto& d : all)
    for (const auto& c : all) pairs.emplace_back(c, d);
  oracle.prefetch(pairs, jobs);
  const auto p = static_cast<std::int64_t>(oracle.ctx().p());
  for (const auto& [c, d] : pairs) {
    const QPoly formula(catalog_count(c, d).eval(p));
    const QPoly counted(static_cast<std::int64_t>(oracle.count(c, d)));
    if (formula == counted) {
      rep.expect("catalog-vs-oracle", c, d, formula, counted);
      continue;
    }
    std::map<Weyl, QPoly> bw;
    for (Weyl w : kAllWeyl) bw[w] = catalog_count_w(c, d, w);
    const auto part = double_cosets(c, oracle.space(d));
    rep.expect("catalog-vs-oracle", c, d, formula, counted, bw, fingerprint(part.class_sizes));
  }
  return rep;
}

TheoremReport cross_validate(std::uint64_t p, int N, const Triple& bound, int jobs, std::shared_ptr<CountCache> cache) {
  Oracle oracle(RingCtx(p, N), std::move(cache));
  return cross_validate(oracle, bound, jobs);
}

std::int64_t oracle_intertwine_VV(Oracle& oracle, const Triple& c, const Triple& d) {
  std::int64_t total = 0;
  for (const auto& I : subset_terms(c))
    for (const auto& J : subset_terms(d)) {
      const auto n = static_cast<std::int64_t>(oracle.count(I.t, J.t));
      total += ((I.size + J.size) % 2 == 0) ? n : -n;
    }
  return total;
}

std::int64_t oracle_intertwine_VU(Oracle& oracle, const Triple& c, const Triple& d) {
  std::int64_t total = 0;
  for (const auto& I : subset_terms(c)) {
    const auto n = static_cast<std::int64_t>(oracle.count(I.t, d));
    total += (I.size % 2 == 0) ? n : -n;
  }
  return total;
}

std::int64_t oracle_restricted(Oracle& oracle, const Triple& c, int i) {
  intertwine_restricted(c, i);  // validates (c, i)
  const Triple amb{c.c1 - i, c.c2 - i, c.c3 - i};
  std::int64_t total = 0;
  for (const auto& I : subset_terms(c))
    for (const auto& J : subset_terms(c)) {
      const auto n = static_cast<std::int64_t>(oracle.count_within(amb, I.t, J.t));
      total += ((I.size + J.size) % 2 == 0) ? n : -n;
    }
  return total;
}

TheoremReport oracle_intertwining(Oracle& oracle, const Triple& bound, int jobs) {
  TheoremReport rep;
  rep.claim = "oracle-intertwining";
  rep.range = "p=" + std::to_string(oracle.ctx().p()) + " N=" + std::to_string(oracle.ctx().level()) + " c,d <= " +
              bound.str();
  const auto all = triples_below(bound);
  std::vector<std::pair<Triple, Triple>> pairs;
  for (const auto& d : all)
    for (const auto& c : all) pairs.emplace_back(c, d);
  oracle.prefetch(pairs, jobs);
  const auto p = static_cast<std::int64_t>(oracle.ctx().p());
  for (const auto& [c, d] : pairs) {
    auto r = intertwine_VV(c, d);
    rep.expect("VV", c, d, QPoly(r.total.eval(p)), QPoly(oracle_intertwine_VV(oracle, c, d)), r.by_weyl);
    rep.expect("VU", c, d, QPoly(intertwine_VU(c, d).eval(p)), QPoly(oracle_intertwine_VU(oracle, c, d)));
  }
  return rep;
}

}  // namespace gl3
