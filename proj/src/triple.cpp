#include "gl3/triple.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gl3/errors.hpp"

namespace gl3 {

std::string Triple::str() const {
  std::ostringstream os;
  os << "(" << c1 << "," << c2 << "," << c3 << ")";
  return os.str();
}

Triple meet_max(const Triple& a, const Triple& b) {
  return {std::max(a.c1, b.c1), std::max(a.c2, b.c2), std::max(a.c3, b.c3)};
}

void require_in_T(const Triple& c) {
  if (!in_T(c)) throw InvalidTriple("triple " + c.str() + " is not in T (need 0 <= c1,c2 <= c3 <= c1+c2)");
}

Triple parse_triple(std::string_view s) {
  std::array<int, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = s.find(',', pos);
    if ((i < 2) != (end != std::string_view::npos)) throw InvalidTriple("expected three comma-separated integers: '" + std::string(s) + "'");
    std::string_view tok = s.substr(pos, i < 2 ? end - pos : std::string_view::npos);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v[i]);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v[i] < 0)
      throw InvalidTriple("bad triple component '" + std::string(tok) + "' in '" + std::string(s) + "'");
    pos = end + 1;
  }
  Triple t{v[0], v[1], v[2]};
  require_in_T(t);
  return t;
}

DescendantSet descendants(const Triple& c) {
  require_in_T(c);
  DescendantSet out;
  if (c.c1 == 0 && c.c2 == 0) return out;
  if (c.c1 == 0) {
    out.push_back({3, {0, c.c2 - 1, c.c2 - 1}});
    return out;
  }
  if (c.c2 == 0) {
    out.push_back({3, {c.c1 - 1, 0, c.c1 - 1}});
    return out;
  }
  for (int i = 1; i <= 3; ++i) {
    Triple d{c.c1 - (i == 1), c.c2 - (i == 2), c.c3 - (i == 3)};
    if (in_T(d)) out.push_back({i, d});
  }
  return out;
}

unsigned descendant_mask(const Triple& c) {
  unsigned m = 0;
  for (const auto& d : descendants(c)) m |= 1u << (d.label - 1);
  return m;
}

Triple c_subset(const Triple& c, unsigned label_mask) {
  if (label_mask == 0) {
    require_in_T(c);
    return c;
  }
  const auto ds = descendants(c);
  unsigned seen = 0;
  Triple m{c.c1, c.c2, c.c3};
  for (const auto& d : ds) {
    unsigned bit = 1u << (d.label - 1);
    if (!(label_mask & bit)) continue;
    seen |= bit;
    m = {std::min(m.c1, d.t.c1), std::min(m.c2, d.t.c2), std::min(m.c3, d.t.c3)};
  }
  if (seen != label_mask) throw InvalidSubset("label set is not contained in S_c for " + c.str());
  m.c3 = std::min(m.c3, m.c1 + m.c2);
  return m;
}

std::vector<SubsetTerm> subset_terms(const Triple& c) {
  const unsigned s = descendant_mask(c);
  std::vector<SubsetTerm> out;
  for (unsigned m = 0; m < 8; ++m) {
    if ((m & s) != m) continue;
    out.push_back({m, c_subset(c, m), __builtin_popcount(m)});
  }
  return out;
}

QPoly index_in_K(const Triple& c) {
  require_in_T(c);
  if (c == Triple{0, 0, 0}) return QPoly(1);
  const QPoly cube{1, 1, 1};
  if (c.c1 > 0 && c.c2 > 0) return QPoly{1, 1} * cube * QPoly::monomial(1, c.weight() - 3);
  return cube * QPoly::monomial(1, c.weight() - 2);
}

QPoly dim_V(const Triple& c) {
  require_in_T(c);
  if (c.c3 <= 1) {
    // Level-one components: trivial, two copies of the q(q+1)-dimensional
    // constituent, and the Steinberg representation.
    if (c == Triple{0, 0, 0}) return QPoly(1);
    if (c.c1 == 0 || c.c2 == 0) return QPoly{0, 1, 1};
    return QPoly::monomial(1, 3);
  }
  const QPoly base = QPoly{-1, 1} * QPoly{1, 1} * QPoly{1, 1, 1};
  const int k = c.c1 + c.c2 - c.c3;
  const int l = std::min(c.c1, c.c2);
  const int w = c.weight();
  if (k == 0) return base * QPoly::monomial(1, w - 4);
  if (k == l) return base * QPoly{-1, 1} * QPoly::monomial(1, w - 5);
  if (k == 1) return base * QPoly{-2, 1} * QPoly::monomial(1, w - 5);
  return base * QPoly{-1, 1}.pow(2) * QPoly::monomial(1, w - 6);
}

std::vector<Triple> triples_up_to(int bound) {
  std::vector<Triple> out;
  for (int c3 = 0; c3 <= bound; ++c3)
    for (int c1 = 0; c1 <= c3; ++c1)
      for (int c2 = 0; c2 <= c3; ++c2)
        if (in_T(c1, c2, c3)) out.push_back({c1, c2, c3});
  return out;
}

std::vector<Triple> triples_below(const Triple& c) {
  std::vector<Triple> out;
  for (int c3 = 0; c3 <= c.c3; ++c3)
    for (int c1 = 0; c1 <= c.c1; ++c1)
      for (int c2 = 0; c2 <= c.c2; ++c2)
        if (in_T(c1, c2, c3)) out.push_back({c1, c2, c3});
  return out;
}

}  // namespace gl3
