#include "gl3/intertwine.hpp"

#include <algorithm>
#include <mutex>

#include "gl3/errors.hpp"

namespace gl3 {

namespace {

struct PairCounts {
  std::array<QPoly, 6> by_weyl;
  std::vector<std::pair<Triple, QPoly>> x_sizes;
};

// Sweeps revisit the same (c_I, d_J) pairs many times.
const PairCounts& pair_counts(const Triple& c, const Triple& d) {
  static std::mutex mu;
  static std::map<std::pair<Triple, Triple>, PairCounts> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({c, d}); it != memo.end()) return it->second;
  }
  PairCounts pc;
  for (Weyl w : kAllWeyl) pc.by_weyl[static_cast<int>(w)] = catalog_count_w(c, d, w);
  for (const auto& a : t_cd(c, d)) pc.x_sizes.emplace_back(a, x_size(c, d, a));
  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(c, d), std::move(pc)).first->second;
}

}  // namespace

IntertwiningReport intertwine_VV(const Triple& c, const Triple& d) {
  require_in_T(c);
  require_in_T(d);
  IntertwiningReport rep;
  rep.c = c;
  rep.d = d;
  for (Weyl w : kAllWeyl) rep.by_weyl[w] = QPoly();
  const auto si = subset_terms(c);
  const auto sj = subset_terms(d);
  for (const auto& I : si)
    for (const auto& J : sj) {
      const std::int64_t sign = ((I.size + J.size) % 2 == 0) ? 1 : -1;
      const auto& pc = pair_counts(I.t, J.t);
      for (Weyl w : kAllWeyl) rep.by_weyl[w] += pc.by_weyl[static_cast<int>(w)] * QPoly(sign);
      for (const auto& [a, xs] : pc.x_sizes) rep.by_triple[a] += xs * QPoly(sign);
    }
  for (const auto& [w, v] : rep.by_weyl) rep.total += v;
  return rep;
}

QPoly intertwine_VU(const Triple& c, const Triple& d) {
  require_in_T(c);
  require_in_T(d);
  QPoly total;
  for (const auto& I : subset_terms(c)) {
    const QPoly n = catalog_count(I.t, d);
    if (I.size % 2 == 0) {
      total += n;
    } else {
      total -= n;
    }
  }
  return total;
}

QPoly intertwine_restricted(const Triple& c, int i) {
  require_in_T(c);
  if (!three_descendant(c))
    throw OutOfRange("restricted intertwining needs 0 < k < min(c1, c2); " + c.str() + " has k=" +
                     std::to_string(chain_k(c)));
  const int k = chain_k(c), l = chain_len(c);
  if (i <= 0 || i > std::min(k, l - k))
    throw OutOfRange("i=" + std::to_string(i) + " outside 0 < i <= min(k, l-k) = " + std::to_string(std::min(k, l - k)));
  const Triple floor{c.c1 - i, c.c2 - i, c.c3 - i};
  QPoly total;
  for (const auto& [a, v] : intertwine_VV(c, c).by_triple)
    if (precedes(floor, a)) total += v;
  return total;
}

}  // namespace gl3
