#include "gl3/report_json.hpp"

#include "gl3/errors.hpp"

namespace gl3 {

void to_json(nlohmann::json& j, const QPoly& p) { j = p.coeffs(); }

void from_json(const nlohmann::json& j, QPoly& p) { p = QPoly(j.get<std::vector<std::int64_t>>()); }

void to_json(nlohmann::json& j, const Triple& t) { j = nlohmann::json::array({t.c1, t.c2, t.c3}); }

void from_json(const nlohmann::json& j, Triple& t) {
  if (!j.is_array() || j.size() != 3) throw InvalidTriple("a triple must be a 3-element array");
  t = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

nlohmann::json weyl_map_json(const std::map<Weyl, QPoly>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, v] : m) j[std::string(weyl_name(w))] = v;
  return j;
}

nlohmann::json descriptor_json(const RepDescriptor& r) {
  nlohmann::json j{{"w", std::string(weyl_name(r.w))}};
  switch (r.w) {
    case Weyl::e:
      j["a"] = r.a;
      j["x"] = r.x;
      break;
    case Weyl::s1:
    case Weyl::s2:
      j["alpha"] = r.alpha;
      j["beta"] = r.beta;
      break;
    case Weyl::s1s2:
    case Weyl::s2s1: j["alpha"] = r.alpha; break;
    case Weyl::w0: break;
  }
  return j;
}

nlohmann::json report_json(const IntertwiningReport& r) {
  nlohmann::json by_triple = nlohmann::json::array();
  for (const auto& [a, v] : r.by_triple) by_triple.push_back({{"a", a}, {"value", v}});
  return {{"c", r.c}, {"d", r.d}, {"total", r.total}, {"by_weyl", weyl_map_json(r.by_weyl)}, {"by_triple", by_triple}};
}

nlohmann::json report_json(const TheoremReport& r) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& ce : r.counterexamples) {
    nlohmann::json j{{"clause", ce.clause},
                     {"c", ce.c},
                     {"d", ce.d},
                     {"expected", ce.expected},
                     {"computed", ce.computed}};
    if (!ce.by_weyl.empty()) j["by_weyl"] = weyl_map_json(ce.by_weyl);
    if (!ce.note.empty()) j["note"] = ce.note;
    ces.push_back(std::move(j));
  }
  return {{"claim", r.claim},
          {"range", r.range},
          {"status", r.pass ? "pass" : "fail"},
          {"checks", r.checks},
          {"counterexamples", ces}};
}

nlohmann::json virtual_rep_json(const VirtualRep& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, k] : v.terms) terms.push_back({{"c", c}, {"coeff", k}});
  return {{"basis", v.basis == Basis::U ? "U" : "V"}, {"terms", terms}};
}

VirtualRep virtual_rep_from_json(const nlohmann::json& j) {
  VirtualRep v;
  const auto basis = j.at("basis").get<std::string>();
  if (basis != "U" && basis != "V") throw Error("basis must be \"U\" or \"V\"");
  v.basis = basis == "U" ? Basis::U : Basis::V;
  for (const auto& t : j.at("terms")) {
    Triple c = t.at("c").get<Triple>();
    require_in_T(c);
    v.add(c, t.at("coeff").get<std::int64_t>());
  }
  return v;
}

}  // namespace gl3
