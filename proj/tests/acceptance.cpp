// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gl3/catalog.hpp"
#include "gl3/coset_oracle.hpp"
#include "gl3/intertwine.hpp"
#include "gl3/parahoric.hpp"
#include "gl3/steinberg.hpp"
#include "gl3/theorem_harness.hpp"

using namespace gl3;

namespace {

const QPoly q = QPoly::q();

// Collects failures for one criterion; the first few are echoed in the FAIL line.
struct Check {
  std::vector<std::string> failures;
  std::uint64_t count = 0;

  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
  void report(const TheoremReport& r) {
    count += r.checks;
    for (const auto& ce : r.counterexamples)
      failures.push_back(r.claim + "/" + ce.clause + " c=" + ce.c.str() + " d=" + ce.d.str() + " expected " +
                         ce.expected.str() + " got " + ce.computed.str());
  }
};

std::string pair_str(const Triple& c, const Triple& d) { return c.str() + " " + d.str(); }

void criterion_1(Check& check) {
  check.report(cross_validate(3, 2, {2, 2, 2}));
  check.report(cross_validate(5, 2, {2, 2, 2}));
}

void criterion_2(Check& check) {
  check(catalog_count({1, 1, 1}, {1, 1, 1}) == QPoly(6), "catalog (1,1,1)");
  for (const Triple& c : {Triple{0, 0, 0}, Triple{1, 1, 1}, Triple{0, 1, 1}, Triple{1, 0, 1}})
    check(intertwine_VV(c, c).total == QPoly(1), "self " + c.str());
  check(intertwine_VV({0, 1, 1}, {1, 0, 1}).total == QPoly(1), "pair (0,1,1),(1,0,1)");
  // the four level-1 components exhaust U_(1,1,1)
  QPoly dims;
  for (const Triple& c : triples_below({1, 1, 1})) dims += dim_V(c);
  check(dims == index_in_K({1, 1, 1}), "level-1 dimensions");
}

void criterion_3(Check& check) {
  std::vector<Triple> one;
  for (const Triple& c : triples_up_to(6))
    if (descendant_count(c) == 1 && c.c1 + c.c2 <= 6) one.push_back(c);
  for (const Triple& c : one)
    for (const Triple& d : one)
      if (c.c1 + c.c2 == d.c1 + d.c2) check(intertwine_VV(c, d).total == QPoly(1), pair_str(c, d));
  for (int s = 1; s <= 6; ++s)
    check(intertwine_VU({0, s, s}, {s, s, s}) == QPoly(s + 1), "VU s=" + std::to_string(s));
  Oracle o(RingCtx(3, 2));
  check(oracle_intertwine_VU(o, {0, 2, 2}, {2, 2, 2}) == 3, "oracle VU s=2");
  for (const Triple& c : {Triple{1, 1, 2}, Triple{0, 2, 2}, Triple{2, 0, 2}})
    for (const Triple& d : {Triple{1, 1, 2}, Triple{0, 2, 2}, Triple{2, 0, 2}})
      check(oracle_intertwine_VV(o, c, d) == 1, "oracle " + pair_str(c, d));
}

void criterion_4(Check& check) {
  for (const Triple& c : triples_up_to(6)) {
    if (descendant_count(c) != 2) continue;
    const int m = std::max(c.c1, c.c2);
    check(intertwine_VV(c, c).total == QPoly(1), "self " + c.str());
    check(intertwine_VU(c, {m, m, m}) == QPoly(1), "multiplicity " + c.str());
  }
  Oracle o(RingCtx(3, 2));
  for (const Triple& c : {Triple{1, 2, 2}, Triple{2, 2, 2}}) {
    check(oracle_intertwine_VV(o, c, c) == 1, "oracle self " + c.str());
    check(oracle_intertwine_VU(o, c, {2, 2, 2}) == 1, "oracle multiplicity " + c.str());
  }
}

void criterion_5(Check& check) {
  check.report(verify_three_descendant(6));
  check(intertwine_VV({2, 2, 3}, {2, 2, 3}).total == q - 2, "(2,2,3)");
  check(intertwine_VV({3, 3, 4}, {3, 3, 4}).total == q - 1, "(3,3,4)");
  check(intertwine_VV({4, 4, 6}, {4, 4, 6}).total == (q - 1).pow(2), "(4,4,6)");
  Oracle o3(RingCtx(3, 3)), o5(RingCtx(5, 3));
  check(oracle_intertwine_VV(o3, {2, 2, 3}, {2, 2, 3}) == 1, "oracle p=3");
  check(oracle_intertwine_VV(o5, {2, 2, 3}, {2, 2, 3}) == 3, "oracle p=5");
}

void criterion_6(Check& check) {
  check.report(verify_restricted(6));
  Oracle o(RingCtx(3, 3));
  check(oracle_restricted(o, {2, 2, 3}, 1) == intertwine_restricted({2, 2, 3}, 1).eval(3), "oracle (2,2,3) i=1");
}

void criterion_7(Check& check) { check.report(verify_dimensions(6, 5)); }

void criterion_8(Check& check) {
  for (int r = 2; r <= 6; ++r) check(lemma_recursion_check(r), "recursion r=" + std::to_string(r));
  for (int r : {0, 1, 2}) check(is_true_representation(steinberg_r(r)).true_representation, "S_" + std::to_string(r));
  const auto s2 = is_true_representation(steinberg_r(2));
  std::multiset<std::int64_t> totals;
  for (const auto& c : s2.classes) totals.insert(c.total);
  check(totals == std::multiset<std::int64_t>{1, 1, 1}, "S_2 class totals");
  for (auto [r, key] : {std::pair{3, Triple{2, 2, 3}}, {4, Triple{3, 3, 4}}}) {
    const auto rep = is_true_representation(steinberg_r(r));
    check(!rep.true_representation, "S_" + std::to_string(r) + " not a representation");
    check(rep.witness && rep.witness->key == key && rep.witness->total == -1, "S_" + std::to_string(r) + " witness");
  }
}

void criterion_9(Check& check) {
  std::mt19937_64 rng(20240601);
  // canonical labels are right-invariant
  for (auto [p, N, bound] : {std::tuple{3, 2, Triple{2, 2, 2}}, {5, 2, Triple{2, 2, 2}}, {3, 3, Triple{2, 2, 3}}}) {
    RingCtx ctx(p, N);
    for (const Triple& d : triples_below(bound)) {
      CosetSpace space(d, ctx);
      Parahoric C(d, ctx);
      bool ok = true;
      for (int i = 0; i < 1000; ++i) {
        const RingMat g = random_gl3(ctx, rng);
        ok = ok && space.locate(mat_mul(ctx, g, C.random_element(rng))) == space.locate(g);
      }
      check(ok, "right invariance " + d.str() + " p=" + std::to_string(p) + " N=" + std::to_string(N));
    }
  }
  // generator completeness
  RingCtx ctx(3, 2);
  const auto all = triples_below({2, 2, 2});
  Oracle oracle(ctx);
  for (const Triple& d : all) {
    const CosetSpace& space = oracle.space(d);
    for (const Triple& c : all) {
      std::vector<std::vector<std::uint32_t>> acts;
      for (const auto& g : Parahoric(c, ctx).generators()) acts.push_back(space.action(g));
      std::vector<char> seen(space.size(), 0);
      std::vector<std::uint32_t> stack{0};
      seen[0] = 1;
      std::uint64_t orbit = 1;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const auto& a : acts)
          if (!seen[a[x]]) {
            seen[a[x]] = 1;
            ++orbit, stack.push_back(a[x]);
          }
      }
      const auto expect = index_in_K(meet_max(c, d)).eval(3) / index_in_K(c).eval(3);
      check(orbit == static_cast<std::uint64_t>(expect), "orbit size " + pair_str(c, d));
      const auto part = double_cosets(c, space);
      std::uint64_t total = 0;
      for (auto s : part.class_sizes) total += s;
      check(total == space.size(), "orbit sum " + pair_str(c, d));
    }
  }
  // count symmetry, oracle and catalog
  for (const Triple& c : all)
    for (const Triple& d : all) check(oracle.count(c, d) == oracle.count(d, c), "oracle symmetry " + pair_str(c, d));
  check.report(verify_symmetry(4));
  // inversion round trip at p = 3
  for (auto [N, bound] : {std::pair{2, Triple{2, 2, 2}}, {3, Triple{2, 2, 3}}}) {
    Oracle o(RingCtx(3, N));
    for (const Triple& c : triples_below(bound)) {
      const CosetSpace& space = o.space(c);
      for (const Triple& d : triples_below(bound)) {
        const auto part = double_cosets(d, space);
        for (const auto& [r, g] : materialize(c, d, o.ctx())) {
          const RepDescriptor inv = invert_descriptor(c, d, r, o.ctx());
          check(is_valid_descriptor(d, c, inv, o.ctx()) &&
                    same_double_coset(mat_inv(o.ctx(), g), rep_matrix(inv, o.ctx()), part, space),
                "inversion " + pair_str(c, d) + " " + r.str());
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"oracle counts equal catalog counts, c,d <= (2,2,2), p in {3,5}, N=2", criterion_1},
      {"level-1 decomposition", criterion_2},
      {"one-descendant equivalences and multiplicity s+1", criterion_3},
      {"two-descendant irreducibility and multiplicity 1", criterion_4},
      {"three-descendant table and equivalence criterion", criterion_5},
      {"restricted intertwining numbers", criterion_6},
      {"dimension identities", criterion_7},
      {"Steinberg recursion and positivity", criterion_8},
      {"oracle contracts: invariance, completeness, symmetry, inversion", criterion_9},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && check.failures.empty() && check.count > 0;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << check.count
         << " checks, ";
    line.precision(2);
    line << std::fixed << secs << " s)";
    if (!error.empty()) line << " error: " << error;
    for (std::size_t k = 0; k < check.failures.size() && k < 5; ++k) line << (k ? "; " : " failures: ") << check.failures[k];
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
