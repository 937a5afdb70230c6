#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gl3/catalog.hpp"
#include "gl3/coset_oracle.hpp"
#include "gl3/qpoly.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

struct Counterexample {
  std::string clause;
  Triple c{};
  Triple d{};
  QPoly expected;
  QPoly computed;
  std::map<Weyl, QPoly> by_weyl;
  std::string note;
};

struct TheoremReport {
  std::string claim;
  std::string range;
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<Counterexample> counterexamples;

  /// Records one comparison; a mismatch appends a counterexample.
  bool expect(const std::string& clause, const Triple& c, const Triple& d, const QPoly& expected, const QPoly& computed,
              const std::map<Weyl, QPoly>& by_weyl = {}, std::string note = {});
  void merge(const TheoremReport& other);
};

/// Closed forms from the one/two/three-descendant classification.
QPoly expected_self_intertwining(const Triple& c);
QPoly expected_restricted(const Triple& c, int i);
/// Per-triple term I_{c - (i,i,i)} for c = d, 0 <= i <= min(k, ℓ - k).
QPoly expected_Ia(const Triple& c, int i);
/// Whether V_c and V_d are equivalent, for three-descendant c and d.
bool three_descendant_equivalent(const Triple& c, const Triple& d);

TheoremReport verify_one_descendant(int max_level);
TheoremReport verify_two_descendant(int max_level);
TheoremReport verify_three_descendant(int max_level);
TheoremReport verify_restricted(int max_level);
/// c <-> d symmetry of catalog counts and intertwining numbers.
TheoremReport verify_symmetry(int max_entry);
/// dim_V against the alternating index sum, and the level-n dimension total.
TheoremReport verify_dimensions(int max_c3, int max_cube);

/// Catalog against oracle counts for all c, d ⪯ bound.
TheoremReport cross_validate(Oracle& oracle, const Triple& bound, int jobs = 1);
TheoremReport cross_validate(std::uint64_t p, int N, const Triple& bound, int jobs = 1,
                             std::shared_ptr<CountCache> cache = nullptr);

/// Alternating sums evaluated from oracle double-coset counts.
std::int64_t oracle_intertwine_VV(Oracle& oracle, const Triple& c, const Triple& d);
std::int64_t oracle_intertwine_VU(Oracle& oracle, const Triple& c, const Triple& d);
std::int64_t oracle_restricted(Oracle& oracle, const Triple& c, int i);

/// intertwine_VV / intertwine_VU at q = p against the oracle sums, all c, d ⪯ bound.
TheoremReport oracle_intertwining(Oracle& oracle, const Triple& bound, int jobs = 1);

}  // namespace gl3
