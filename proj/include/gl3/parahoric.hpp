#pragma once

#include <cstdint>
#include <vector>

#include "gl3/residue.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

/// Largest subgroup order that may be enumerated element by element.
inline constexpr std::uint64_t kMaxEnumeratedOrder = 10'000'000;

/// |GL(3, Z/p^N)|; throws ScaleExceeded if it does not fit in 64 bits.
std::uint64_t gl3_order(const RingCtx& ctx);

/// The subgroup C_c of GL(3, Z/p^N): lower-triangular entries (2,1), (3,2),
/// (3,1) of valuation at least c1, c2, c3 respectively.
class Parahoric {
 public:
  /// Requires c ∈ T and N >= c3 (LevelTooSmall otherwise).
  Parahoric(const Triple& c, const RingCtx& ctx);

  const Triple& triple() const { return c_; }
  const RingCtx& ctx() const { return ctx_; }

  bool contains(const RingMat& g) const;
  /// e12(1), e13(1), e23(1), e21(p^c1), e32(p^c2), e31(p^c3), then the three
  /// diagonal primitive-root units. Fixed order.
  std::vector<RingMat> generators() const;
  /// |C_c| = |GL(3, Z/p^N)| / [K : C_c](p).
  std::uint64_t order() const;
  /// Every element, by closure under generators. ScaleExceeded above kMaxEnumeratedOrder.
  std::vector<RingMat> elements() const;
  /// Uniform-ish random element: independent entries subject to the shape and a unit determinant.
  RingMat random_element(std::mt19937_64& rng) const;

 private:
  Triple c_;
  RingCtx ctx_;
};

/// Membership predicate for C_c at level N without constructing a Parahoric.
bool in_parahoric(const RingCtx& ctx, const Triple& c, const RingMat& g);

}  // namespace gl3
