#include <catch2/catch_amalgamated.hpp>

#include "glasspath/polynomial.hpp"

using namespace glasspath;

namespace {

MultiPoly t(int k, int nvars) { return MultiPoly::variable(nvars, k); }

} // namespace

TEST_CASE("construction and printing") {
  auto p = MultiPoly::one(3) + t(2, 3) + t(3, 3) - t(2, 3) * t(2, 3) * t(3, 3);
  CHECK(p.str() == "1+t2+t3-t2^2*t3");

  auto q = MultiPoly::one(3) - t(1, 3) * t(2, 3) - t(1, 3) * t(3, 3) - t(2, 3) * t(3, 3) +
           t(1, 3) * t(2, 3) * t(2, 3) * t(3, 3);
  CHECK(q.str() == "1-t1*t2-t1*t3-t2*t3+t1*t2^2*t3");

  CHECK(MultiPoly::constant(2, 0).str() == "0");
  CHECK(MultiPoly::constant(2, -3).str() == "-3");
  CHECK((MultiPoly::constant(2, 2) * t(1, 2)).str() == "2*t1");
  CHECK((MultiPoly::one(2) - MultiPoly::one(2)).str() == "0");
}

TEST_CASE("term order is graded, ties broken by descending exponent vector") {
  // same degree: t2 precedes t3, and t1*t2 precedes t1*t3 precedes t2*t3
  auto p = t(3, 3) + t(2, 3);
  CHECK(p.str() == "t2+t3");
  auto q = t(2, 3) * t(3, 3) + t(1, 3) * t(3, 3) + t(1, 3) * t(2, 3);
  CHECK(q.str() == "t1*t2+t1*t3+t2*t3");
}

TEST_CASE("arithmetic") {
  auto a = MultiPoly::one(2) + t(1, 2);
  auto b = MultiPoly::one(2) - t(1, 2);
  CHECK((a * b).str() == "1-t1^2");
  CHECK((a - a).str() == "0");
  CHECK((-b).str() == "-1+t1");
  CHECK((a + b) == MultiPoly::constant(2, 2));

  // cancellation inside a product
  auto c = (a * a) - (MultiPoly::one(2) + MultiPoly::constant(2, 2) * t(1, 2));
  CHECK(c.str() == "t1^2");
}

TEST_CASE("coeff and degree") {
  auto p = MultiPoly::one(3) + t(2, 3) - t(2, 3) * t(2, 3) * t(3, 3);
  CHECK(p.coeff({0, 0, 0}) == 1);
  CHECK(p.coeff({0, 1, 0}) == 1);
  CHECK(p.coeff({0, 2, 1}) == -1);
  CHECK(p.coeff({1, 0, 0}) == 0);
  CHECK(p.degree() == 3);
  CHECK(MultiPoly::constant(3, 0).degree() == 0);
}

TEST_CASE("primed reverses the variable order") {
  auto p = t(1, 3) + t(2, 3) * t(2, 3);
  CHECK(p.primed().str() == "t3+t2^2");
  CHECK(p.primed().primed() == p);

  // embedding: a polynomial mentioning only middle variables can be fixed
  auto q = MultiPoly::one(3) + t(2, 3);
  CHECK(q.primed() == q);

  SECTION("prime is a ring homomorphism") {
    auto a = MultiPoly::one(2) + t(1, 2) * t(2, 2);
    auto b = t(2, 2) - t(1, 2) * t(1, 2);
    CHECK((a * b).primed() == a.primed() * b.primed());
    CHECK((a + b).primed() == a.primed() + b.primed());
  }
}

TEST_CASE("extended keeps terms, adds fresh variables") {
  auto p = MultiPoly::one(2) + t(2, 2);
  auto q = p.extended(3);
  CHECK(q.nvars() == 3);
  CHECK(q == MultiPoly::one(3) + t(2, 3));
  CHECK(q.primed() == MultiPoly::one(3) + t(2, 3));
}

TEST_CASE("truncated drops the high-degree tail") {
  auto p = MultiPoly::one(2) + t(1, 2) + t(1, 2) * t(2, 2) + t(1, 2) * t(1, 2) * t(2, 2);
  CHECK(p.truncated(2).str() == "1+t1+t1*t2");
  CHECK(p.truncated(0).str() == "1");
  CHECK(p.truncated(5) == p);
}
