#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl3/theorem_harness.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

enum class Basis { U, V };

/// Integer combination of [U_c] or of [V_c] in the Grothendieck group.
struct VirtualRep {
  Basis basis = Basis::U;
  std::map<Triple, std::int64_t> terms;  // zero coefficients are never stored

  void add(const Triple& c, std::int64_t coeff);
  VirtualRep& operator+=(const VirtualRep& o);
  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;
  std::string str() const;
};

/// [V_c] = Σ_{I ⊆ S_c} (-1)^|I| [U_{c_I}].
VirtualRep v_in_u(const Triple& c);
/// [U_c] = Σ_{d ⪯ c} [V_d].
VirtualRep u_in_v(const Triple& c);
VirtualRep to_V_basis(const VirtualRep& v);
VirtualRep to_U_basis(const VirtualRep& v);

/// [S_r] = Σ_{c1,c2=0}^{r} (-1)^{c1+c2} [U_{(c1,c2,max(c1,c2))}].
VirtualRep steinberg_r(int r);

/// Compares [S_r] with [S_{r-2}] + Σ (-1)^{r-c1} [V_{(c1,c2,r)}] over c1 ≡ c2 (mod 2).
/// Requires r >= 2 (OutOfRange otherwise).
bool lemma_recursion_check(int r);

/// Canonical representative of the equivalence class of V_c.
Triple class_key(const Triple& c);
std::vector<std::vector<Triple>> equivalence_classes(const std::vector<Triple>& triples);

struct ClassTotal {
  Triple key{};
  std::vector<Triple> members;  // support triples in this class
  std::int64_t total = 0;
};

struct PositivityReport {
  bool true_representation = true;
  std::vector<ClassTotal> classes;  // ordered by key
  std::optional<ClassTotal> witness;
};

/// Sums V-basis coefficients per equivalence class; negative totals mean v is
/// not a true representation. The witness is the negative class with the
/// largest key.
PositivityReport is_true_representation(const VirtualRep& v);

/// Recursion, positivity and class-disjointness checks for r <= r_max.
TheoremReport verify_steinberg(int r_max);
/// Basis inversion and Möbius consistency for entries <= bound.
TheoremReport verify_bases(int bound);

}  // namespace gl3
