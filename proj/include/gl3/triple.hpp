#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gl3/qpoly.hpp"

namespace gl3 {

/// Index (c1, c2, c3) of the subgroup C_c and component V_c. A Triple value
/// need not lie in T; callers validate with in_T where it matters.
struct Triple {
  int c1 = 0, c2 = 0, c3 = 0;

  constexpr int operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  constexpr int weight() const { return c1 + c2 + c3; }
  /// Componentwise max{c_i, 1}.
  constexpr Triple floor1() const { return {c1 < 1 ? 1 : c1, c2 < 1 ? 1 : c2, c3 < 1 ? 1 : c3}; }

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
  std::string str() const;
};

/// Componentwise partial order: a ⪯ b.
constexpr bool precedes(const Triple& a, const Triple& b) { return a.c1 <= b.c1 && a.c2 <= b.c2 && a.c3 <= b.c3; }

Triple meet_max(const Triple& a, const Triple& b);

/// 0 <= c1, c2 <= c3 <= c1 + c2.
constexpr bool in_T(int c1, int c2, int c3) { return 0 <= c1 && 0 <= c2 && c1 <= c3 && c2 <= c3 && c3 <= c1 + c2; }
constexpr bool in_T(const Triple& c) { return in_T(c.c1, c.c2, c.c3); }

/// Throws InvalidTriple unless c ∈ T.
void require_in_T(const Triple& c);

/// Parses "c1,c2,c3" strictly and validates membership in T.
Triple parse_triple(std::string_view s);

struct Descendant {
  int label;  // 1, 2 or 3
  Triple t;
};
using DescendantSet = std::vector<Descendant>;

/// Triples immediately below c, labelled by the coordinate that drops.
DescendantSet descendants(const Triple& c);

/// Label set S_c packed as a bitmask (bit i-1 for label i).
unsigned descendant_mask(const Triple& c);

/// c_I = max{ d ∈ T : d ⪯ c_{i} for all i ∈ I }, with I given as a label bitmask.
Triple c_subset(const Triple& c, unsigned label_mask);

/// All subsets I ⊆ S_c as (mask, c_I, |I|) in increasing mask order.
struct SubsetTerm {
  unsigned mask;
  Triple t;
  int size;
};
std::vector<SubsetTerm> subset_terms(const Triple& c);

/// Number of descendants; 0 only for (0,0,0).
inline int descendant_count(const Triple& c) { return static_cast<int>(descendants(c).size()); }

/// [K : C_c] as a polynomial in q.
QPoly index_in_K(const Triple& c);

/// dim V_c as a polynomial in q.
QPoly dim_V(const Triple& c);

/// All triples of T with every entry <= bound (c3 <= bound).
std::vector<Triple> triples_up_to(int bound);
/// All triples d ∈ T with d ⪯ c.
std::vector<Triple> triples_below(const Triple& c);

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(t.c1) << 42) ^
                                      (static_cast<std::uint64_t>(t.c2) << 21) ^ static_cast<std::uint64_t>(t.c3));
  }
};

}  // namespace gl3
