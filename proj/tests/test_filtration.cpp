#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "blowup/filtration.hpp"

using namespace blowup;

namespace {

const Ring QXY{2, FieldDesc::rationals(), {"x", "y"}};

Ideal<Rational> iq(const Ring& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial<Rational>> v;
  for (const auto& s : gens) v.push_back(parse_polynomial<Rational>(r, s));
  return Ideal<Rational>(r, std::move(v));
}

}  // namespace

TEST_CASE("platform stable uniform draws") {
  std::mt19937_64 a(42), b(42);
  for (int k = 0; k < 200; ++k) CHECK(uniform_below(a, 10001) == uniform_below(b, 10001));
  std::set<std::uint64_t> seen;
  std::mt19937_64 c(7);
  for (int k = 0; k < 200; ++k) {
    std::uint64_t v = uniform_below(c, 5);
    CHECK(v < 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
  CHECK_THROWS_AS(uniform_below(c, 0), precondition_error);
}

TEST_CASE("square of the maximal ideal with a monomial reduction") {
  Ideal<Rational> i = iq(QXY, {"x^2", "x*y", "y^2"});
  Ideal<Rational> j = iq(QXY, {"x^2", "y^2"});
  PairContext<Rational> ctx(i, j);

  CHECK(ctx.dimension() == 2);
  CHECK(ctx.reduction_number() == 1);
  CHECK(ctx.length(ctx.ipow(1), ctx.jpow(1)) == 1);
  CHECK(ctx.length(ctx.ipow(2), ctx.mixed(1, 1)) == 0);

  // ladders are shared objects, so memo keys stay stable
  CHECK(ctx.ipow(2).identity() == ctx.ipow(2).identity());
  CHECK(ideal_equal(ctx.ipow(2), maximal_ideal_power<Rational>(QXY, 4)));
  CHECK(ideal_equal(ctx.mixed(1, 1), ideal_product(j, i)));
  CHECK(ctx.mixed(0, 3).identity() == ctx.ipow(3).identity());
  CHECK(ctx.mixed(2, 0).identity() == ctx.jpow(2).identity());
  CHECK(ctx.ipow(0).groebner().is_unit());
}

TEST_CASE("a pair reduced by itself") {
  Ideal<Rational> m = iq(QXY, {"x", "y"});
  PairContext<Rational> ctx(m, m);
  CHECK(ctx.reduction_number() == 0);
  CHECK(ctx.length(ctx.ipow(1), ctx.jpow(1)) == 0);
}

TEST_CASE("pair preconditions") {
  Ideal<Rational> i = iq(QXY, {"x^2", "x*y", "y^2"});
  // wrong generator count for a reduction
  CHECK_THROWS_AS(PairContext<Rational>(i, iq(QXY, {"x^2"})), precondition_error);
  // not contained in the ideal
  CHECK_THROWS_AS(PairContext<Rational>(i, iq(QXY, {"x", "y^3"})), precondition_error);
  // contained but never a reduction: wrong multiplicity
  CHECK_THROWS_AS(PairContext<Rational>(i, iq(QXY, {"x^2", "y^4"}), 3), precondition_error);
  // the ideal itself must be primary to the origin
  CHECK_THROWS_AS(PairContext<Rational>(iq(QXY, {"x^2", "x*y"}), iq(QXY, {"x^2", "x*y"}), 3, 20),
                  precondition_error);
}

TEST_CASE("random reductions of the square of the maximal ideal") {
  Ideal<Rational> i = iq(QXY, {"x^2", "x*y", "y^2"});
  PairContext<Rational> ctx = auto_reduction_context(i, 2026);
  CHECK(ctx.reduction_number() == 1);
  // a reduction preserves the multiplicity: length R/J = length R/(x^2, y^2)
  CHECK(local_length_value(Ideal<Rational>::unit(QXY), ctx.reduction()) == 4);

  // deterministic: the same seed draws the same candidate
  PairContext<Rational> again = auto_reduction_context(i, 2026);
  REQUIRE(ctx.reduction().generators().size() == again.reduction().generators().size());
  for (std::size_t g = 0; g < ctx.reduction().generators().size(); ++g)
    CHECK(ctx.reduction().generators()[g] == again.reduction().generators()[g]);

  std::mt19937_64 rng(2026);
  Ideal<Rational> j = draw_reduction_candidate(i, rng);
  for (std::size_t g = 0; g < j.generators().size(); ++g)
    CHECK(j.generators()[g] == ctx.reduction().generators()[g]);
}

TEST_CASE("generation failure carries a transcript") {
  // not primary to the origin: rejected before any drawing happens
  CHECK_THROWS_AS(auto_reduction_context(iq(QXY, {"x^2", "x*y"}), 1, 3, 2, 20),
                  precondition_error);

  // an exhausted retry budget reports the attempts it made
  Ideal<Rational> i = iq(QXY, {"x^2", "x*y", "y^2"});
  try {
    auto_reduction_context(i, 11, 30, 0);
    CHECK(false);
  } catch (const generation_error& e) {
    CHECK(!e.transcript().empty());
    CHECK(std::string(e.what()).find("no random candidate") != std::string::npos);
  }
}
