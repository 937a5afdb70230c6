#include <doctest.h>

#include "gl3/report_json.hpp"

using namespace gl3;
using nlohmann::json;

TEST_CASE("QPoly and Triple serialisation") {
  const QPoly p = QPoly::q() - 2;
  json j = p;
  CHECK(j == json::array({-2, 1}));
  CHECK(j.get<QPoly>() == p);
  CHECK(json(QPoly()) == json::array());
  json t = Triple{2, 2, 3};
  CHECK(t == json::array({2, 2, 3}));
  CHECK(t.get<Triple>() == Triple{2, 2, 3});
}

TEST_CASE("report schemas") {
  const auto r = report_json(intertwine_VV({2, 2, 3}, {2, 2, 3}));
  CHECK(r.at("total") == json::array({-2, 1}));
  CHECK(r.at("by_weyl").size() == 6);
  TheoremReport tr{"restricted", "max entry <= 3", true, 4, {}};
  const auto k = report_json(tr);
  CHECK(k.at("claim") == "restricted");
  CHECK(k.at("status") == "pass");
  CHECK(k.at("counterexamples").empty());
}

TEST_CASE("VirtualRep round trip") {
  const VirtualRep v = to_V_basis(steinberg_r(3));
  const json j = virtual_rep_json(v);
  CHECK(j.at("basis") == "V");
  CHECK(virtual_rep_from_json(j) == v);
  CHECK(virtual_rep_from_json(json::parse(j.dump())) == v);
}
