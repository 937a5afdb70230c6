#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl3/qpoly.hpp"
#include "gl3/residue.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

enum class Weyl : std::uint8_t { e = 0, s1, s2, s1s2, s2s1, w0 };

inline constexpr std::array<Weyl, 6> kAllWeyl{Weyl::e, Weyl::s1, Weyl::s2, Weyl::s1s2, Weyl::s2s1, Weyl::w0};

std::string_view weyl_name(Weyl w);
/// Accepts "1"/"e", "s1", "s2", "s1s2", "s2s1", "w0".
Weyl parse_weyl(std::string_view s);

/// Subset of W as a bitmask (bit k for the k-th tag in kAllWeyl).
struct WSet {
  std::uint8_t bits = 0;
  bool contains(Weyl w) const { return (bits >> static_cast<int>(w)) & 1u; }
  void insert(Weyl w) { bits |= static_cast<std::uint8_t>(1u << static_cast<int>(w)); }
  std::vector<Weyl> elements() const;
  std::size_t size() const { return elements().size(); }
  friend bool operator==(const WSet&, const WSet&) = default;
};

/// One double-coset representative. For w = e the triple `a` and unit `x`
/// are used; s1 and s2 use (alpha, beta); s1s2 and s2s1 use alpha only.
struct RepDescriptor {
  Weyl w = Weyl::e;
  Triple a{};
  Residue x = 1;
  int alpha = 0;
  int beta = 0;

  friend bool operator==(const RepDescriptor&, const RepDescriptor&) = default;
  std::string str() const;
};

WSet w_set(const Triple& c, const Triple& d);

/// Moves a triple with a1, a2 >= 1 and a3 >= max(a1, a2) into T_{c,d}.
Triple reduce_triple(const Triple& a, const Triple& c, const Triple& d);

std::vector<Triple> t_cd(const Triple& c, const Triple& d);
bool in_t_cd(const Triple& a, const Triple& c, const Triple& d);

struct ABounds {
  int a_min = 0;
  int a_min_prime = 0;
};

ABounds a_bounds(const Triple& c, const Triple& d, const Triple& a);

QPoly x_size(const Triple& c, const Triple& d, const Triple& a);

/// Number of representatives attached to w (zero when w is not in W_{c,d}).
QPoly catalog_count_w(const Triple& c, const Triple& d, Weyl w);
QPoly catalog_count(const Triple& c, const Triple& d);

/// Integer parameters (alpha, beta) for s1/s2, (alpha, 0) for s1s2/s2s1,
/// a single (0, 0) for w0; empty if w is not in W_{c,d}.
std::vector<std::pair<int, int>> weyl_params(const Triple& c, const Triple& d, Weyl w);

/// The X-set for a ∈ T_{c,d} as residues mod p^N, in a fixed order.
std::vector<Residue> x_set(const Triple& c, const Triple& d, const Triple& a, const RingCtx& ctx);

/// Element of x_set(c, d, a) indexing the same double coset as t_{a,x}.
Residue canonical_x(const Triple& c, const Triple& d, const Triple& a, Residue x, const RingCtx& ctx);

/// Descriptor in T_{c,d} for the double coset of t_{a,x}, a an extended
/// triple as accepted by reduce_triple and x a unit.
RepDescriptor reduce_descriptor(const Triple& a, Residue x, const Triple& c, const Triple& d, const RingCtx& ctx);

RingMat rep_matrix(const RepDescriptor& r, const RingCtx& ctx);

/// All descriptors for (c, d) in catalog order.
std::vector<RepDescriptor> descriptors(const Triple& c, const Triple& d, const RingCtx& ctx);

/// Descriptors paired with matrices. Throws LevelTooSmall if N < max(c3, d3).
std::vector<std::pair<RepDescriptor, RingMat>> materialize(const Triple& c, const Triple& d, const RingCtx& ctx);

/// Whether r is one of descriptors(c, d, ctx).
bool is_valid_descriptor(const Triple& c, const Triple& d, const RepDescriptor& r, const RingCtx& ctx);

/// Descriptor for (d, c) naming the double coset of inverses of C_c r C_d.
/// Throws InvalidDescriptor if r is not valid for (c, d).
RepDescriptor invert_descriptor(const Triple& c, const Triple& d, const RepDescriptor& r, const RingCtx& ctx);

}  // namespace gl3
