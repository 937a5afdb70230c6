#include <doctest.h>

#include "gl3/intertwine.hpp"
#include "gl3/theorem_harness.hpp"

using namespace gl3;

namespace {
const QPoly q = QPoly::q();

void require_pass(const TheoremReport& r) {
  INFO(r.claim);
  for (const auto& ce : r.counterexamples)
    MESSAGE(ce.clause << " c=" << ce.c.str() << " d=" << ce.d.str() << " expected " << ce.expected.str() << " got "
                      << ce.computed.str());
  CHECK(r.pass);
  CHECK(r.counterexamples.empty());
  CHECK(r.checks > 0);
}
}  // namespace

TEST_CASE("report bookkeeping") {
  TheoremReport r{"x", "r", true, 0, {}};
  CHECK(r.expect("a", {1, 1, 1}, {1, 1, 1}, 1, 1));
  CHECK(r.pass);
  CHECK_FALSE(r.expect("b", {1, 1, 1}, {1, 1, 1}, 1, 2));
  CHECK_FALSE(r.pass);
  CHECK(r.checks == 2);
  CHECK(r.counterexamples.size() == 1);
  TheoremReport s{"y", "r", true, 3, {}};
  s.merge(r);
  CHECK_FALSE(s.pass);
  CHECK(s.checks == 5);
}

TEST_CASE("closed forms") {
  CHECK(expected_self_intertwining({2, 2, 3}) == q - 2);
  CHECK(expected_self_intertwining({3, 3, 4}) == q - 1);
  CHECK(expected_self_intertwining({4, 4, 6}) == (q - 1).pow(2));
  CHECK(expected_self_intertwining({5, 5, 7}) == q * (q - 1));
  CHECK(expected_self_intertwining({1, 1, 2}) == QPoly(1));
  CHECK(expected_restricted({4, 4, 6}, 2) == (q - 1).pow(2));
  CHECK(three_descendant_equivalent({2, 3, 4}, {3, 2, 4}));
  CHECK_FALSE(three_descendant_equivalent({2, 2, 3}, {3, 3, 4}));
}

TEST_CASE("sweep examples") {
  CHECK(intertwine_VV({1, 1, 2}, {0, 2, 2}).total == QPoly(1));
  CHECK(intertwine_VV({2, 1, 3}, {3, 0, 3}).total == QPoly(1));
  CHECK(intertwine_VU({0, 2, 2}, {2, 2, 2}) == QPoly(3));
  CHECK(intertwine_VV({1, 2, 2}, {1, 2, 2}).total == QPoly(1));
  CHECK(intertwine_VV({1, 2, 2}, {2, 1, 2}).total.is_zero());
  CHECK(intertwine_VV({2, 3, 4}, {3, 2, 4}).total == q - 2);
}

TEST_CASE("theorem sweeps") {
  require_pass(verify_one_descendant(8));
  require_pass(verify_two_descendant(8));
  require_pass(verify_three_descendant(7));
  require_pass(verify_restricted(8));
  require_pass(verify_symmetry(4));
  require_pass(verify_dimensions(6, 5));
}

TEST_CASE("oracle cross validation") {
  require_pass(cross_validate(3, 2, {2, 2, 2}));
  require_pass(cross_validate(5, 2, {2, 2, 2}, 2));
  Oracle o(RingCtx(3, 3));
  require_pass(cross_validate(o, {2, 2, 3}));
  require_pass(oracle_intertwining(o, {2, 2, 3}));
  CHECK(oracle_intertwine_VV(o, {2, 2, 3}, {2, 2, 3}) == 1);
  CHECK(oracle_restricted(o, {2, 2, 3}, 1) == 1);
}
