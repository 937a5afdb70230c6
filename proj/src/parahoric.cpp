#include "gl3/parahoric.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

struct MatHash {
  std::size_t operator()(const RingMat& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : m.e) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ScaleExceeded("group order does not fit in 64 bits");
  return r;
}

}  // namespace

std::uint64_t gl3_order(const RingCtx& ctx) {
  const std::uint64_t p = ctx.p();
  std::uint64_t r = (p * p * p - 1);
  r = checked_mul(r, p * p * p - p);
  r = checked_mul(r, p * p * p - p * p);
  for (int i = 0; i < 9 * (ctx.level() - 1); ++i) r = checked_mul(r, p);
  return r;
}

bool in_parahoric(const RingCtx& ctx, const Triple& c, const RingMat& g) {
  return ctx.trunc_val(g(1, 0)) >= c.c1 && ctx.trunc_val(g(2, 1)) >= c.c2 && ctx.trunc_val(g(2, 0)) >= c.c3 &&
         is_invertible(ctx, g);
}

Parahoric::Parahoric(const Triple& c, const RingCtx& ctx) : c_(c), ctx_(ctx) {
  require_in_T(c);
  if (ctx.level() < c.c3)
    throw LevelTooSmall("level N=" + std::to_string(ctx.level()) + " is below c3 for " + c.str());
}

bool Parahoric::contains(const RingMat& g) const { return in_parahoric(ctx_, c_, g); }

std::vector<RingMat> Parahoric::generators() const {
  const Residue g = ctx_.primitive_root();
  return {
      elem_matrix(ctx_, 1, 2, 1),
      elem_matrix(ctx_, 1, 3, 1),
      elem_matrix(ctx_, 2, 3, 1),
      elem_matrix(ctx_, 2, 1, ctx_.p_pow(c_.c1)),
      elem_matrix(ctx_, 3, 2, ctx_.p_pow(c_.c2)),
      elem_matrix(ctx_, 3, 1, ctx_.p_pow(c_.c3)),
      diag_unit(ctx_, 1, g),
      diag_unit(ctx_, 2, g),
      diag_unit(ctx_, 3, g),
  };
}

std::uint64_t Parahoric::order() const {
  const std::uint64_t total = gl3_order(ctx_);
  const std::int64_t index = index_in_K(c_).eval(static_cast<std::int64_t>(ctx_.p()));
  return total / static_cast<std::uint64_t>(index);
}

std::vector<RingMat> Parahoric::elements() const {
  if (order() > kMaxEnumeratedOrder)
    throw ScaleExceeded("|C_c| = " + std::to_string(order()) + " exceeds the enumeration limit");
  const auto gens = generators();
  std::unordered_set<RingMat, MatHash> seen{RingMat::identity()};
  std::vector<RingMat> out{RingMat::identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      RingMat h = mat_mul(ctx_, out[head], s);
      if (seen.insert(h).second) out.push_back(h);
    }
  }
  return out;
}

RingMat Parahoric::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Residue> dist(0, ctx_.modulus() - 1);
  for (;;) {
    RingMat m;
    for (auto& x : m.e) x = dist(rng);
    m(1, 0) = ctx_.mul(m(1, 0), ctx_.p_pow(c_.c1));
    m(2, 1) = ctx_.mul(m(2, 1), ctx_.p_pow(c_.c2));
    m(2, 0) = ctx_.mul(m(2, 0), ctx_.p_pow(c_.c3));
    if (is_invertible(ctx_, m)) return m;
  }
}

}  // namespace gl3
