#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/theorems.hpp"

using namespace blowup;

namespace {

const Ring QXY{2, FieldDesc::rationals(), {"x", "y"}};
const Ring QX{1, FieldDesc::rationals(), {"x"}};

Ideal<Rational> iq(const Ring& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial<Rational>> v;
  for (const auto& s : gens) v.push_back(parse_polynomial<Rational>(r, s));
  return Ideal<Rational>(r, std::move(v));
}

// replay a reported regular sequence against the relations it certifies
void recheck_sequence(const GrPresentation<Rational>& pres, const DepthResult& res) {
  Ideal<Rational> cur = pres.relations;
  for (const auto& text : res.regular_sequence) {
    Polynomial<Rational> form = parse_polynomial<Rational>(pres.ambient, text);
    CHECK(is_regular_element(cur, form));
    cur = ideal_sum(cur, Ideal<Rational>(pres.ambient, {form}));
  }
}

}  // namespace

TEST_CASE("presentation of the maximal ideal") {
  GrPresentation<Rational> pres = gr_presentation(iq(QXY, {"x", "y"}));
  CHECK(pres.nx == 2);
  CHECK(pres.nv == 2);
  CHECK(pres.ambient.nvars == 4);
  CHECK(pres.ambient.names == std::vector<std::string>{"x", "y", "V1", "V2"});

  // the only relation beyond the ideal itself swaps the two generators
  CHECK(pres.relations.contains(parse_polynomial<Rational>(pres.ambient, "x*V2 - y*V1")));
  CHECK(pres.relations.contains(parse_polynomial<Rational>(pres.ambient, "x")));
  CHECK(!pres.relations.contains(parse_polynomial<Rational>(pres.ambient, "V1")));

  // the graded ring is a polynomial ring in two variables
  CHECK(v_piece_dimension(pres, 0) == 1);
  CHECK(v_piece_dimension(pres, 1) == 2);
  CHECK(v_piece_dimension(pres, 2) == 3);
  CHECK(v_piece_dimension(pres, 5) == 6);
  CHECK_THROWS_AS(v_piece_dimension(pres, -1), precondition_error);

  DepthResult res = depth_gr(pres, 11);
  CHECK(res.depth == 2);
  CHECK(res.dimension == 2);
  CHECK(res.is_cm);
  CHECK(res.regular_sequence.size() == 2);
  recheck_sequence(pres, res);
}

TEST_CASE("presentation of a principal ideal") {
  GrPresentation<Rational> pres = gr_presentation(iq(QX, {"x^2"}));
  CHECK(pres.ambient.nvars == 2);
  // one generator has no relations: L is the ideal itself
  CHECK(ideal_equal(pres.relations,
                    Ideal<Rational>(pres.ambient,
                                    {parse_polynomial<Rational>(pres.ambient, "x^2")})));
  for (int n = 0; n <= 4; ++n) CHECK(v_piece_dimension(pres, n) == 2);

  DepthResult res = depth_gr(pres, 3);
  CHECK(res.depth == 1);
  CHECK(res.is_cm);
}

TEST_CASE("presentation refuses ideals vanishing away from the origin") {
  CHECK_THROWS_AS(gr_presentation(iq(QX, {"x^2 - x"})), unsupported_input_error);
  CHECK_THROWS_AS(gr_presentation(iq(QXY, {"x^2 - x", "y"})), unsupported_input_error);
  CHECK_THROWS_AS(gr_presentation(iq(QXY, {"x"})), precondition_error);
}

TEST_CASE("regularity of single forms") {
  Ideal<Rational> l = iq(QXY, {"x*y"});
  CHECK(is_regular_element(l, parse_polynomial<Rational>(QXY, "x + y")));
  CHECK(!is_regular_element(l, parse_polynomial<Rational>(QXY, "x")));
  CHECK(!is_regular_element(iq(QXY, {"x^2"}), parse_polynomial<Rational>(QXY, "x")));
  CHECK(is_regular_element(Ideal<Rational>::zero(QXY), parse_polynomial<Rational>(QXY, "y")));
  CHECK_THROWS_AS(is_regular_element(iq(QXY, {"x"}), parse_polynomial<Rational>(QXY, "x")),
                  precondition_error);
}

TEST_CASE("full depth of the square of the maximal ideal") {
  Ideal<Rational> i = iq(QXY, {"x^2", "x*y", "y^2"});
  GrPresentation<Rational> pres = gr_presentation(i);

  // graded piece sizes must match the first-difference Hilbert values of the
  // pair, computed through a completely different route
  PairContext<Rational> ctx(i, iq(QXY, {"x^2", "y^2"}));
  for (int n = 0; n <= 5; ++n) CHECK(v_piece_dimension(pres, n) == hilbert_h0(ctx, n));

  DepthResult res = depth_gr(pres, 2026);
  CHECK(res.depth == 2);
  CHECK(res.is_cm);
  recheck_sequence(pres, res);

  HilbertResult h = hilbert_coefficients(ctx);
  SallyResult s = sally_coefficients(ctx, h);
  BigradedResult b = bigraded_invariants(ctx, h, s);
  std::vector<TheoremCheck> checks = verify_theorems(b, h, res);
  CHECK(!any_failure(checks));
  REQUIRE(checks.size() == 7);
  for (const auto& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.verdict == Verdict::PASS);  // every hypothesis holds on this pair
  }
  CHECK(checks[0].name == "valabrega_valla");
  CHECK(checks[6].name == "huckaba_marley");
  CHECK(rees_depth_statement(res) ==
        "depth of the blowup ring >= 2 (graded ring is Cohen-Macaulay; direct computation "
        "out of scope)");
}

TEST_CASE("depth and verdicts of the quartic pair") {
  Ideal<Rational> i = iq(QXY, {"x^4", "x^3*y", "x*y^3", "y^4"});
  GrPresentation<Rational> pres = gr_presentation(i);
  PairContext<Rational> ctx(i, iq(QXY, {"x^4", "y^4"}));
  for (int n = 0; n <= 4; ++n) CHECK(v_piece_dimension(pres, n) == hilbert_h0(ctx, n));

  DepthResult res = depth_gr(pres, 7);
  // Delta = 2 rules out the Cohen-Macaulay case, and e_1 < Lambda rules out
  // depth d-1, so the graded ring has depth 0 and the search must stall
  CHECK(res.depth == 0);
  CHECK(!res.is_cm);
  CHECK(res.regular_sequence.empty());
  CHECK(rees_depth_statement(res) ==
        "depth of the blowup ring = 1 (one above the graded ring when the latter is not "
        "Cohen-Macaulay)");

  HilbertResult h = hilbert_coefficients(ctx);
  SallyResult s = sally_coefficients(ctx, h);
  BigradedResult b = bigraded_invariants(ctx, h, s);
  std::vector<TheoremCheck> checks = verify_theorems(b, h, res);
  CHECK(!any_failure(checks));
  for (const auto& c : checks) {
    if (c.name == "delta_bar_depth_bound" || c.name == "wang_small_delta" ||
        c.name == "huckaba_marley")
      CHECK(c.verdict == Verdict::PASS);
    if (c.name == "valabrega_valla" || c.name == "huckaba" || c.name == "guerrieri_rows" ||
        c.name == "sally_bound")
      CHECK(c.verdict == Verdict::NOT_APPLICABLE);
  }
}
