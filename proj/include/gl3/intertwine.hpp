#pragma once

#include <map>

#include "gl3/catalog.hpp"
#include "gl3/qpoly.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

struct IntertwiningReport {
  Triple c{};
  Triple d{};
  QPoly total;
  std::map<Weyl, QPoly> by_weyl;   // every tag present, zero allowed
  std::map<Triple, QPoly> by_triple;  // I_a for each a met in some T_{c_I,d_J}
};

/// I(V_c, V_d) as the literal alternating sum over I ⊆ S_c, J ⊆ S_d.
IntertwiningReport intertwine_VV(const Triple& c, const Triple& d);

/// I(V_c, U_d) = Σ_{I ⊆ S_c} (-1)^|I| |C_{c_I} \ K / C_d|.
QPoly intertwine_VU(const Triple& c, const Triple& d);

/// I(U_c, U_d), the double-coset count itself.
inline QPoly intertwine_UU(const Triple& c, const Triple& d) { return catalog_count(c, d); }

/// Chain position k = c1 + c2 - c3 and chain length ℓ = min(c1, c2).
inline int chain_k(const Triple& c) { return c.c1 + c.c2 - c.c3; }
inline int chain_len(const Triple& c) { return c.c1 < c.c2 ? c.c1 : c.c2; }

/// True when c has three descendants, i.e. 0 < k < ℓ.
inline bool three_descendant(const Triple& c) { return chain_k(c) > 0 && chain_k(c) < chain_len(c); }

/// I(V^i_c, V^i_c) = Σ_{a ⪰ c - (i,i,i)} I_a. Requires 0 < k < ℓ and
/// 0 < i <= min(k, ℓ - k); throws OutOfRange otherwise.
QPoly intertwine_restricted(const Triple& c, int i);

}  // namespace gl3
