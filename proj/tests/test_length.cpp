#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/local_length.hpp"

using namespace blowup;

namespace {

const Ring QXY{2, FieldDesc::rationals(), {"x", "y"}};
const Ring QX{1, FieldDesc::rationals(), {"x"}};

Ideal<Rational> iq(const Ring& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial<Rational>> v;
  for (const auto& s : gens) v.push_back(parse_polynomial<Rational>(r, s));
  return Ideal<Rational>(r, std::move(v));
}

}  // namespace

TEST_CASE("degree slices of the maximal ideal") {
  CHECK(monomials_of_degree(2, 3).size() == 4);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(2, 0).size() == 1);
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 2).empty());

  auto m2 = maximal_ideal_power<Rational>(QXY, 2);
  CHECK(ideal_equal(m2, iq(QXY, {"x^2", "x*y", "y^2"})));
  CHECK(m2.quotient_dimension() == 3);
  CHECK(maximal_ideal_power<Rational>(QXY, 0).groebner().is_unit());
}

TEST_CASE("lengths of quotients supported at the origin") {
  auto unit = Ideal<Rational>::unit(QXY);
  auto m = iq(QXY, {"x", "y"});

  LocalLengthResult r = local_length(unit, m);
  CHECK(r.stabilized);
  CHECK(r.value == 1);
  CHECK(r.truncation_level == 2);

  CHECK(local_length_value(unit, iq(QXY, {"x^2", "x*y", "y^3"})) == 4);
  CHECK(local_length_value(m, ideal_product(m, m)) == 2);
  CHECK(local_length_value(m, m) == 0);
  CHECK(local_length_value(Ideal<Rational>::zero(QXY), Ideal<Rational>::zero(QXY)) == 0);
}

TEST_CASE("localization discards components away from the origin") {
  auto unit = Ideal<Rational>::unit(QX);
  // (x^2 - x) = (x) cap (x - 1); globally 2-dimensional quotient, locally 1
  CHECK(Ideal<Rational>(QX, {parse_polynomial<Rational>(QX, "x^2 - x")}).quotient_dimension() == 2);
  CHECK(local_length_value(unit, iq(QX, {"x^2 - x"})) == 1);
  // (x)/(x^2 - x): x - 1 is invertible at the origin, so the quotient dies
  CHECK(local_length_value(iq(QX, {"x"}), iq(QX, {"x^2 - x"})) == 0);
  // a component through every neighborhood of nothing: (x - 1) is the unit
  // ideal locally
  CHECK(local_length_value(unit, iq(QX, {"x - 1"})) == 0);
}

TEST_CASE("length preconditions and failure modes") {
  auto unit = Ideal<Rational>::unit(QXY);
  LocalLengthResult r = local_length(unit, iq(QXY, {"x"}), 20);
  CHECK(!r.stabilized);
  CHECK(r.value == -1);
  CHECK_THROWS_AS(local_length_value(unit, iq(QXY, {"x"}), 20), invariant_violation);

  CHECK_THROWS_AS(local_length(iq(QXY, {"x"}), iq(QXY, {"y"})), precondition_error);
  CHECK_THROWS_AS(local_length(iq(QXY, {"x"}), iq(QXY, {"x^2", "x*y"})),
                  unsupported_input_error);
  CHECK_THROWS_AS(local_length(unit, iq(QX, {"x"})), structural_error);

  // quotient by the zero ideal: the whole ring has infinite length
  CHECK(!local_length(unit, Ideal<Rational>::zero(QXY), 20).stabilized);
}

TEST_CASE("lattice point oracle agrees on monomial quotients") {
  auto unit = Ideal<Rational>::unit(QXY);
  auto m = iq(QXY, {"x", "y"});
  auto i = iq(QXY, {"x^2", "x*y", "y^3"});

  CHECK(monomial_length_oracle(unit, i) == 4);
  CHECK(monomial_length_oracle(unit, i) == local_length_value(unit, i));
  CHECK(monomial_length_oracle(m, ideal_product(m, m)) == 2);
  CHECK(monomial_length_oracle(i, i) == 0);
  // the oracle reaches subquotients the truncation route refuses
  CHECK(monomial_length_oracle(iq(QXY, {"x"}), iq(QXY, {"x^2", "x*y"})) == 1);
  // infinite length reported as -1
  CHECK(monomial_length_oracle(unit, iq(QXY, {"x"})) == -1);

  CHECK_THROWS_AS(monomial_length_oracle(unit, iq(QXY, {"x + y"})), precondition_error);
  CHECK_THROWS_AS(monomial_length_oracle(iq(QXY, {"x"}), iq(QXY, {"y"})), precondition_error);
}

TEST_CASE("primality to the origin") {
  CHECK(is_locally_m_primary(iq(QXY, {"x", "y"})));
  CHECK(is_locally_m_primary(iq(QXY, {"x^2", "y^3"})));
  CHECK(is_locally_m_primary(iq(QX, {"x^2 - x"})));  // localizes to (x)
  CHECK(!is_locally_m_primary(iq(QXY, {"x"}), 20));
  CHECK(!is_locally_m_primary(iq(QXY, {"x + y"}), 20));
  CHECK(!is_locally_m_primary(iq(QX, {"x - 1"})));  // unit at the origin
  CHECK(!is_locally_m_primary(Ideal<Rational>::unit(QXY)));
  CHECK(!is_locally_m_primary(Ideal<Rational>::zero(QXY)));
}
