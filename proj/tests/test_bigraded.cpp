#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/bigraded.hpp"

using namespace blowup;

namespace {

const Ring QXY{2, FieldDesc::rationals(), {"x", "y"}};
const Ring QX{1, FieldDesc::rationals(), {"x"}};

Ideal<Rational> iq(const Ring& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial<Rational>> v;
  for (const auto& s : gens) v.push_back(parse_polynomial<Rational>(r, s));
  return Ideal<Rational>(r, std::move(v));
}

BigradedResult full_table(PairContext<Rational>& ctx) {
  HilbertResult h = hilbert_coefficients(ctx);
  SallyResult s = sally_coefficients(ctx, h);
  return bigraded_invariants(ctx, h, s);
}

}  // namespace

TEST_CASE("row pieces of the quartic pair, by hand") {
  // I^2 = m^8 while J I misses x^6y^2 and x^2y^6; pushing by powers of J
  // keeps adding one missing lattice point per column
  PairContext<Rational> ctx(iq(QXY, {"x^4", "x^3*y", "x*y^3", "y^4"}),
                            iq(QXY, {"x^4", "y^4"}));
  CHECK(ctx.reduction_number() == 2);
  CHECK(sigma_piece_length(ctx, 1, 0) == 2);
  CHECK(sigma_piece_length(ctx, 1, 1) == 3);
  CHECK(sigma_piece_length(ctx, 1, 2) == 4);
  CHECK(sigma_piece_length(ctx, 0, 0) == 5);
  CHECK(sigma_piece_length(ctx, 0, 3) == 20);
  CHECK(lambda_length(ctx, 0) == 5);
  CHECK(lambda_length(ctx, 1) == 2);
  CHECK(lambda_length(ctx, 2) == 0);
  CHECK(delta_cap_length(ctx, 0) == 0);
  // I^2 cap J = I^2: every degree-8 monomial clears one of the pure powers
  CHECK(delta_cap_length(ctx, 1) == 2);
  CHECK_THROWS_AS(sigma_piece_length(ctx, -1, 0), precondition_error);
  CHECK_THROWS_AS(sigma_piece_length(ctx, 0, -2), precondition_error);
}

TEST_CASE("full table of the quartic pair") {
  PairContext<Rational> ctx(iq(QXY, {"x^4", "x^3*y", "x*y^3", "y^4"}),
                            iq(QXY, {"x^4", "y^4"}));
  BigradedResult b = full_table(ctx);

  REQUIRE(b.rows.size() == 2);
  CHECK(b.rows[0].lambda == 5);
  CHECK(b.rows[0].delta_cap == 0);
  CHECK(b.rows[0].e0_sigma == 5);
  CHECK(b.rows[0].delta == 0);
  for (std::size_t i = 0; i < b.rows[0].sigma.size(); ++i)
    CHECK(b.rows[0].sigma[i] == 5 * static_cast<long long>(i + 1));

  CHECK(b.rows[1].lambda == 2);
  CHECK(b.rows[1].delta_cap == 2);
  CHECK(b.rows[1].e0_sigma == 1);
  CHECK(b.rows[1].delta == 1);
  for (std::size_t i = 0; i < b.rows[1].sigma.size(); ++i)
    CHECK(b.rows[1].sigma[i] == static_cast<long long>(i + 2));
  CHECK(b.rows[1].sigma_fit.coeffs == std::vector<long long>{1, -1});
  CHECK(b.rows[1].k_fit.coeffs == std::vector<long long>{1, 1});

  CHECK(b.lambda == 7);
  CHECK(b.delta_cap == 2);
  CHECK(b.delta == 1);
  CHECK(b.delta_bar == 1);
  CHECK(b.probe_row == std::vector<long long>{0, 0, 0});
  CHECK(b.identity_window == 8);
}

TEST_CASE("pairs with a free table") {
  SUBCASE("square of the maximal ideal") {
    PairContext<Rational> ctx(iq(QXY, {"x^2", "x*y", "y^2"}), iq(QXY, {"x^2", "y^2"}));
    BigradedResult b = full_table(ctx);
    REQUIRE(b.rows.size() == 1);
    CHECK(b.rows[0].lambda == 1);
    CHECK(b.rows[0].e0_sigma == 1);
    CHECK(b.rows[0].delta == 0);
    CHECK(b.rows[0].delta_cap == 0);
    for (std::size_t i = 0; i < b.rows[0].sigma.size(); ++i)
      CHECK(b.rows[0].sigma[i] == static_cast<long long>(i + 1));
    CHECK(b.lambda == 1);
    CHECK(b.delta_cap == 0);
    CHECK(b.delta == 0);
    CHECK(b.delta_bar == 0);
  }
  SUBCASE("monomial pair with spread degrees") {
    PairContext<Rational> ctx(iq(QXY, {"x^2", "x*y^2", "y^4"}), iq(QXY, {"x^2", "y^4"}));
    BigradedResult b = full_table(ctx);
    REQUIRE(b.rows.size() == 1);
    CHECK(b.rows[0].lambda == 2);
    CHECK(b.rows[0].delta == 0);
    CHECK(b.lambda == 2);
    CHECK(b.delta_cap == 0);
    CHECK(b.delta_bar == 0);
  }
}

TEST_CASE("empty table when the ideal is its own reduction") {
  SUBCASE("maximal ideal") {
    PairContext<Rational> ctx(iq(QXY, {"x", "y"}), iq(QXY, {"x", "y"}));
    BigradedResult b = full_table(ctx);
    CHECK(b.rows.empty());
    CHECK(b.lambda == 0);
    CHECK(b.delta_cap == 0);
    CHECK(b.delta == 0);
    CHECK(b.delta_bar == 0);
    CHECK(b.probe_row == std::vector<long long>{0, 0, 0});
  }
  SUBCASE("one variable, reduction differs by a unit at the origin") {
    PairContext<Rational> ctx(iq(QX, {"x^2"}), iq(QX, {"x^2 + x^3"}));
    CHECK(ctx.reduction_number() == 0);
    BigradedResult b = full_table(ctx);
    CHECK(b.rows.empty());
    CHECK(b.lambda == 0);
    CHECK(b.delta == 0);
  }
}
