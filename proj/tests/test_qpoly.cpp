#include <doctest.h>

#include "gl3/errors.hpp"
#include "gl3/qpoly.hpp"

using namespace gl3;

TEST_CASE("normalisation and arithmetic") {
  const QPoly q = QPoly::q();
  CHECK(QPoly({1, 0, 0}) == QPoly(1));
  CHECK(QPoly(0).is_zero());
  CHECK((q - 1) * (q + 1) == QPoly({-1, 0, 1}));
  CHECK((q - 1).pow(2) == QPoly({1, -2, 1}));
  CHECK((q - q).is_zero());
  CHECK(QPoly::monomial(3, 2).degree() == 2);
  CHECK(((q - 1) * (q - 2)).eval(5) == 12);
  QPoly out;
  CHECK(((q - 1) * (q * q + q + 1)).divides_by(q - 1, out));
  CHECK(out == q * q + q + 1);
  CHECK_FALSE(QPoly({1, 0, 1}).divides_by(q - 1, out));
}

TEST_CASE("rendering") {
  const QPoly q = QPoly::q();
  CHECK((q - 2).str() == "-2 + q");
  CHECK(QPoly(0).str() == "0");
  CHECK(QPoly({1, -2, 1}).str() == "1 - 2 q + q^2");
  CHECK((q - 1).pow(2).factored() == "(q-1)^2");
  CHECK(((q - 1).pow(2) * (q + 1) * (q * q + q + 1)).factored() == "(q-1)^2(q+1)(q^2+q+1)");
  CHECK(QPoly(6).factored() == "6");
}

TEST_CASE("evaluation overflow is reported") {
  CHECK_THROWS_AS(QPoly::monomial(1, 70).eval(3), Error);
}
