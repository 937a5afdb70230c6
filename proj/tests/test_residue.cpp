#include <doctest.h>

#include <random>

#include "gl3/errors.hpp"
#include "gl3/residue.hpp"

using namespace gl3;

TEST_CASE("trunc_val examples") {
  RingCtx ctx(3, 2);
  CHECK(ctx.trunc_val(0) == 2);
  CHECK(ctx.trunc_val(6) == 1);
  CHECK(ctx.trunc_val(4) == 0);
  CHECK(ctx.unit_part(6) == 2);
}

TEST_CASE("ring arithmetic and unit group") {
  for (auto [p, N] : {std::pair{3, 1}, {3, 3}, {5, 2}, {7, 2}}) {
    RingCtx ctx(p, N);
    std::uint64_t units = 0;
    for (Residue x = 0; x < ctx.modulus(); ++x) {
      CHECK((ctx.is_unit(x) == (ctx.trunc_val(x) == 0)));
      if (ctx.is_unit(x)) {
        ++units;
        CHECK(ctx.mul(x, ctx.inv(x)) == 1);
      }
      for (Residue y = 0; y < ctx.modulus(); y += 5)
        CHECK(ctx.trunc_val(ctx.mul(x, y)) == std::min(ctx.trunc_val(x) + ctx.trunc_val(y), N));
    }
    CHECK(units == ctx.unit_count());
    // the primitive root has full order
    const Residue g = ctx.primitive_root();
    CHECK(ctx.pow(g, ctx.unit_count()) == 1);
    CHECK(ctx.pow(g, ctx.unit_count() / 2) != 1);
    if (N > 1) CHECK(ctx.pow(g, ctx.unit_count() / static_cast<std::uint64_t>(p)) != 1);
  }
  RingCtx ctx(3, 2);
  CHECK(ctx.p_pow(2) == 0);
  CHECK(ctx.reduce(-1) == 8);
  CHECK_THROWS_AS(ctx.inv(3), NotInvertible);
}

TEST_CASE("matrix examples") {
  RingCtx ctx(3, 2);
  CHECK(mat_inv(ctx, RingMat::identity()) == RingMat::identity());
  CHECK(mat_mul(ctx, RingMat::w0(), RingMat::w0()) == RingMat::identity());
  RingMat t = RingMat::identity();
  t(1, 0) = 3;
  t(2, 0) = 3;
  t(2, 1) = 3;
  CHECK(mat_det(ctx, t) == 1);
  CHECK(elem_matrix(ctx, 3, 1, 9) == RingMat::identity());
  CHECK(elem_matrix(ctx, 2, 1, 3)(1, 0) == 3);
  CHECK(diag_unit(ctx, 1, 1) == RingMat::identity());
  CHECK_THROWS_AS(diag_unit(ctx, 2, 3), NotInvertible);
  RingMat z{};
  CHECK_THROWS_AS(mat_inv(ctx, z), NotInvertible);
}

TEST_CASE("random matrix identities") {
  std::mt19937_64 rng(7);
  for (auto [p, N] : {std::pair{3, 2}, {5, 2}, {3, 4}}) {
    RingCtx ctx(p, N);
    for (int i = 0; i < 300; ++i) {
      const RingMat a = random_gl3(ctx, rng), b = random_gl3(ctx, rng);
      CHECK(is_invertible(ctx, a));
      CHECK(mat_inv(ctx, mat_inv(ctx, a)) == a);
      CHECK(mat_mul(ctx, a, mat_inv(ctx, a)) == RingMat::identity());
      CHECK(mat_det(ctx, mat_mul(ctx, a, b)) == ctx.mul(mat_det(ctx, a), mat_det(ctx, b)));
    }
  }
}

TEST_CASE("ring construction rejects bad parameters") {
  CHECK_THROWS_AS(RingCtx(4, 2), Error);
  CHECK_THROWS_AS(RingCtx(2, 2), Error);
  CHECK_THROWS_AS(RingCtx(3, 0), Error);
  CHECK_THROWS_AS(RingCtx(3, 60), Error);
}
