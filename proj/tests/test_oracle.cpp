#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <unistd.h>

#include "gl3/catalog.hpp"
#include "gl3/coset_oracle.hpp"
#include "gl3/errors.hpp"
#include "gl3/parahoric.hpp"

using namespace gl3;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gl3_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("coset space sizes") {
  CHECK(CosetSpace({0, 0, 0}, RingCtx(3, 2)).size() == 1);
  CHECK(CosetSpace({1, 1, 1}, RingCtx(3, 1)).size() == 52);
  CHECK(CosetSpace({2, 2, 2}, RingCtx(3, 2)).size() == 1404);
  for (const Triple& d : triples_up_to(3)) {
    CosetSpace s(d, RingCtx(3, 3));
    CHECK(s.size() == static_cast<std::size_t>(index_in_K(d).eval(3)));
  }
  CHECK_THROWS_AS(CosetSpace({2, 2, 3}, RingCtx(3, 2)), LevelTooSmall);
  CHECK_THROWS_AS(CosetSpace({5, 5, 5}, RingCtx(7, 5)), ScaleExceeded);
}

TEST_CASE("howell form") {
  RingCtx ctx(3, 2);
  // span{(3,0,0)} = span{(6,0,0)}
  CHECK(howell_form(ctx, {{3, 0, 0}}) == howell_form(ctx, {{6, 0, 0}}));
  CHECK(howell_form(ctx, {{1, 0, 0}, {0, 1, 0}}) == howell_form(ctx, {{1, 1, 0}, {0, 1, 0}}));
  CHECK(howell_form(ctx, {{1, 2, 0}}) != howell_form(ctx, {{1, 1, 0}}));
  // {(1,3,0)} contains 3*(1,3,0) = (3,0,0); a Howell form must show it
  CHECK(howell_form(ctx, {{1, 3, 0}}) == howell_form(ctx, {{1, 3, 0}, {3, 0, 0}}));
}

TEST_CASE("locate agrees with membership and is right-invariant") {
  std::mt19937_64 rng(3);
  for (auto [p, N] : {std::pair{3, 2}, {3, 3}, {5, 2}}) {
    RingCtx ctx(p, N);
    for (const Triple& d : triples_below({2, 2, 2})) {
      CosetSpace space(d, ctx);
      Parahoric C(d, ctx);
      for (int i = 0; i < 1000; ++i) {
        const RingMat g = random_gl3(ctx, rng);
        const auto id = space.locate(g);
        CHECK(space.locate(mat_mul(ctx, g, C.random_element(rng))) == id);
        CHECK(space.locate(space.reps()[id]) == id);
        CHECK(in_parahoric(ctx, d, mat_mul(ctx, mat_inv(ctx, space.reps()[id]), g)));
      }
    }
  }
  RingCtx ctx(3, 2);
  CosetSpace s({1, 1, 1}, ctx);
  CHECK_THROWS_AS(s.locate(RingMat{}), Error);
  CHECK_FALSE(s.find(RingMat{}).has_value());
}

TEST_CASE("double coset examples") {
  RingCtx f3(3, 1);
  CosetSpace s111({1, 1, 1}, f3);
  CHECK(double_cosets({1, 1, 1}, s111).class_count == 6);
  RingCtx z27(3, 3);
  for (const Triple& d : triples_below({2, 2, 3}))
    CHECK(double_cosets({0, 0, 0}, CosetSpace(d, z27)).class_count == 1);
  CosetSpace s223({2, 2, 3}, z27);
  CHECK(double_cosets({2, 2, 3}, s223).class_count ==
        static_cast<std::size_t>(catalog_count({2, 2, 3}, {2, 2, 3}).eval(3)));
}

TEST_CASE("orbit sizes sum to the coset space") {
  RingCtx ctx(3, 2);
  for (const Triple& d : triples_below({2, 2, 2})) {
    CosetSpace s(d, ctx);
    for (const Triple& c : triples_below({2, 2, 2})) {
      const auto part = double_cosets(c, s);
      CHECK(part.class_sizes.size() == part.class_count);
      CHECK(std::accumulate(part.class_sizes.begin(), part.class_sizes.end(), std::uint64_t{0}) == s.size());
      CHECK(part.class_of[0] == 0);
    }
  }
}

TEST_CASE("double cosets within an ambient subgroup") {
  RingCtx ctx(3, 3);
  for (const Triple& c : triples_below({2, 2, 3})) CHECK(double_cosets_within(c, c, CosetSpace(c, ctx)) == 1);
  CosetSpace s({2, 2, 3}, ctx);
  CHECK(double_cosets_within({0, 0, 0}, {2, 2, 3}, s) == double_cosets({2, 2, 3}, s).class_count);
  CHECK_THROWS_AS(double_cosets_within({2, 2, 2}, {1, 1, 1}, s), OutOfRange);
}

TEST_CASE("same_double_coset") {
  RingCtx ctx(3, 2);
  std::mt19937_64 rng(9);
  const Triple c{1, 1, 2}, d{2, 1, 2};
  CosetSpace space(d, ctx);
  const auto part = double_cosets(c, space);
  Parahoric Cc(c, ctx), Cd(d, ctx);
  for (int i = 0; i < 200; ++i) {
    const RingMat g = random_gl3(ctx, rng);
    CHECK(same_double_coset(g, g, part, space));
    const RingMat h = mat_mul(ctx, mat_mul(ctx, Cc.random_element(rng), g), Cd.random_element(rng));
    CHECK(same_double_coset(g, h, part, space));
  }
  RingCtx f3(3, 1);
  const RingMat t = rep_matrix({Weyl::e, {1, 1, 1}, 1, 0, 0}, f3);
  CHECK_FALSE(same_double_coset(t, RingMat::w0(), {1, 1, 1}, {1, 1, 1}, f3));
}

TEST_CASE("level stability") {
  Oracle o2(RingCtx(3, 2)), o3(RingCtx(3, 3));
  const auto all = triples_below({2, 2, 2});
  for (const Triple& c : all)
    for (const Triple& d : all) CHECK(o2.count(c, d) == o3.count(c, d));
}

TEST_CASE("count symmetry") {
  Oracle o(RingCtx(3, 3));
  const auto all = triples_below({2, 2, 3});
  for (const Triple& c : all)
    for (const Triple& d : all) CHECK(o.count(c, d) == o.count(d, c));
}

TEST_CASE("oracle results do not depend on job count") {
  const auto all = triples_below({2, 2, 2});
  std::vector<std::pair<Triple, Triple>> pairs;
  for (const Triple& c : all)
    for (const Triple& d : all) pairs.emplace_back(c, d);
  Oracle a(RingCtx(3, 2)), b(RingCtx(3, 2));
  a.prefetch(pairs, 1);
  b.prefetch(pairs, 4);
  for (const auto& [c, d] : pairs) CHECK(a.count(c, d) == b.count(c, d));
  CHECK(a.stats().merges == b.stats().merges);
}

TEST_CASE("count cache round trip") {
  const auto path = temp_file("cache");
  {
    auto cache = std::make_shared<CountCache>(path);
    Oracle o(RingCtx(3, 2), cache);
    CHECK(o.count({1, 1, 1}, {1, 1, 1}) == 6);
    CHECK(o.count_within({1, 1, 1}, {2, 2, 2}, {2, 2, 2}) >= 1);
    CHECK(cache->size() == 2);
  }
  {
    auto cache = std::make_shared<CountCache>(path);
    CHECK(cache->size() == 2);
    CHECK(cache->lookup(3, 2, {1, 1, 1}, {1, 1, 1}, std::nullopt) == 6u);
    Oracle o(RingCtx(3, 2), cache);
    CHECK(o.count({1, 1, 1}, {1, 1, 1}) == 6);
    CHECK(o.stats().cache_hits == 1);
    CHECK(o.stats().spaces_built == 0);
  }
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"p":3,"N":2,"c":[0,1,1],"d":[0,1,1],"ambient":null,"count":99,"tool_version":"old"})" << "\n"
        << "not json\n";
  }
  CountCache reloaded(path);
  CHECK(reloaded.size() == 2);
  CHECK_FALSE(reloaded.lookup(3, 2, {0, 1, 1}, {0, 1, 1}, std::nullopt).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("default cache path follows the environment") {
  ::setenv("GL3BRANCH_CACHE_DIR", "/tmp/gl3dir", 1);
  auto p = default_cache_path();
  REQUIRE(p.has_value());
  CHECK(p->parent_path() == std::filesystem::path("/tmp/gl3dir"));
  ::unsetenv("GL3BRANCH_CACHE_DIR");
  CHECK_FALSE(default_cache_path().has_value());
}
