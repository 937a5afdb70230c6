#include <doctest.h>

#include "gl3/errors.hpp"
#include "gl3/intertwine.hpp"
#include "gl3/steinberg.hpp"

using namespace gl3;

namespace {
VirtualRep rep(Basis b, std::initializer_list<std::pair<Triple, std::int64_t>> ts) {
  VirtualRep v;
  v.basis = b;
  for (const auto& [t, k] : ts) v.add(t, k);
  return v;
}
}  // namespace

TEST_CASE("basis change examples") {
  CHECK(v_in_u({1, 1, 1}) ==
        rep(Basis::U, {{{1, 1, 1}, 1}, {{0, 1, 1}, -1}, {{1, 0, 1}, -1}, {{0, 0, 0}, 1}}));
  CHECK(u_in_v({0, 1, 1}) == rep(Basis::V, {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}}));
  CHECK(u_in_v({0, 0, 0}) == rep(Basis::V, {{{0, 0, 0}, 1}}));
  VirtualRep z = rep(Basis::U, {{{1, 1, 1}, 1}, {{1, 1, 1}, -1}});
  CHECK(z.terms.empty());
}

TEST_CASE("basis inversion") {
  for (const Triple& c : triples_up_to(6)) {
    CHECK(to_V_basis(v_in_u(c)) == rep(Basis::V, {{c, 1}}));
    CHECK(to_U_basis(u_in_v(c)) == rep(Basis::U, {{c, 1}}));
    VirtualRep sum;
    sum.basis = Basis::U;
    for (const Triple& d : triples_below(c)) sum += v_in_u(d);
    CHECK(sum == rep(Basis::U, {{c, 1}}));
  }
}

TEST_CASE("Steinberg examples") {
  CHECK(steinberg_r(0) == rep(Basis::U, {{{0, 0, 0}, 1}}));
  CHECK(to_V_basis(steinberg_r(1)) == rep(Basis::V, {{{1, 1, 1}, 1}}));
  CHECK(to_V_basis(steinberg_r(2)) ==
        rep(Basis::V, {{{2, 2, 2}, 1}, {{1, 1, 2}, -1}, {{0, 2, 2}, 1}, {{2, 0, 2}, 1}, {{0, 0, 0}, 1}}));
  for (int r = 2; r <= 6; ++r) CHECK(lemma_recursion_check(r));
  CHECK_THROWS_AS(lemma_recursion_check(1), OutOfRange);
}

TEST_CASE("equivalence classes") {
  CHECK(equivalence_classes({{0, 1, 1}, {1, 0, 1}}).size() == 1);
  CHECK(equivalence_classes({{1, 1, 2}, {0, 2, 2}, {2, 0, 2}}).size() == 1);
  CHECK(equivalence_classes({{1, 2, 2}, {2, 1, 2}}).size() == 2);
  const auto all = triples_up_to(4);
  for (const Triple& c : all)
    for (const Triple& d : all) {
      const bool same = class_key(c) == class_key(d);
      const QPoly i = intertwine_VV(c, d).total;
      if (same) {
        CHECK(i == intertwine_VV(c, c).total);
      } else {
        CHECK(i.is_zero());
      }
    }
}

TEST_CASE("positivity") {
  for (int r : {0, 1, 2}) CHECK(is_true_representation(steinberg_r(r)).true_representation);
  const auto s2 = is_true_representation(steinberg_r(2));
  CHECK(s2.classes.size() == 3);
  for (const auto& c : s2.classes) CHECK(c.total == 1);
  const auto s3 = is_true_representation(steinberg_r(3));
  CHECK_FALSE(s3.true_representation);
  REQUIRE(s3.witness.has_value());
  CHECK(s3.witness->key == Triple{2, 2, 3});
  CHECK(s3.witness->total == -1);
  const auto s4 = is_true_representation(steinberg_r(4));
  REQUIRE(s4.witness.has_value());
  CHECK(s4.witness->key == Triple{3, 3, 4});
  CHECK(s4.witness->total == -1);
}

TEST_CASE("full Steinberg and basis sweeps") {
  const auto r = verify_steinberg(8);
  CHECK(r.pass);
  CHECK(verify_bases(6).pass);
}
