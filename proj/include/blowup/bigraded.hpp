#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "blowup/classical.hpp"

namespace blowup {

// The pair (I, J) carries a bigraded module whose row p collects the pieces
//
//   sigma_{p,i} = length(J^i I^(p+1) / J^(i+1) I^p),  i >= 0,
//
// a quotient of the free module with Lambda_p = sigma_{p,0} generators over
// the polynomial fiber of J. Rows p >= r vanish because the reduction closes
// the ladder there. Everything below is a local length at the origin.
template <coefficient_field K>
long long sigma_piece_length(PairContext<K>& ctx, int p, int i) {
  if (p < 0 || i < 0) throw precondition_error("bigraded piece indices start at zero");
  return ctx.length(ctx.mixed(i, p + 1), ctx.mixed(i + 1, p));
}

// Lambda_p = length(I^(p+1) / J I^p), the generator count of row p
template <coefficient_field K>
long long lambda_length(PairContext<K>& ctx, int p) {
  return sigma_piece_length(ctx, p, 0);
}

// Delta_p = length((I^(p+1) cap J) / J I^p); computes one ideal intersection
// per call, so callers should hold on to the value
template <coefficient_field K>
long long delta_cap_length(PairContext<K>& ctx, int p) {
  if (p < 0) throw precondition_error("bigraded piece indices start at zero");
  Ideal<K> met = ideal_intersection(ctx.ipow(p + 1), ctx.jpow(1));
  return local_length_value(met, ctx.mixed(1, p), ctx.length_cap());
}

struct BigradedRow {
  int p = 0;
  long long lambda = 0;          // sigma_{p,0}
  long long delta_cap = 0;       // length((I^(p+1) cap J) / J I^p)
  long long e0_sigma = 0;        // normalized leading coefficient of the row
  long long delta = 0;           // lambda - e0_sigma, the defect of the row
  std::vector<long long> sigma;  // sigma_{p,i} for i = 0..columns-1
  BinomialPolynomial sigma_fit;  // fit of i -> sigma_{p,i}, dim d
  BinomialPolynomial k_fit;      // fit of the complementary row lengths
};

struct BigradedResult {
  std::vector<BigradedRow> rows;     // p = 0..r-1; empty when I = J locally
  long long lambda = 0;              // sum of the row lambdas
  long long delta_cap = 0;           // sum of the row delta_caps
  long long delta = 0;               // sum of the row defects, = lambda - e_1
  long long delta_bar = 0;           // largest row defect
  std::vector<long long> probe_row;  // sigma_{r,i} for small i, all zero
  int identity_window = 0;           // antidiagonals checked against sally lengths
};

namespace detail {

constexpr int kRowColumnCap = 48;
constexpr int kProbeWidth = 3;

}  // namespace detail

// Compute the full row table of the pair and verify every relation the rows
// must satisfy:
//  - row p is a quotient of a free module, so each complementary length
//    lambda_p * binom(i+d-1, d-1) - sigma_{p,i} is non-negative;
//  - row 0 is the free module itself, its pieces match exactly;
//  - the defects satisfy 0 <= delta_p <= Delta_p, and two fits per row must
//    agree on delta_p = lambda_p - e0_sigma_p;
//  - summed over rows, e_1 = sum e0_sigma_p arrives independently of the
//    Hilbert fits that produced e_1;
//  - each antidiagonal sum of pieces equals the matching Sally length plus
//    the closing row-0 piece, and agrees with the polynomial written in
//    e_1..e_d once the Sally samples have settled;
//  - the probe row r vanishes piece by piece.
// Any failed relation throws invariant_violation.
template <coefficient_field K>
BigradedResult bigraded_invariants(PairContext<K>& ctx, const HilbertResult& hilbert,
                                   const SallyResult& sally) {
  const int d = ctx.dimension();
  const int r = ctx.reduction_number();
  const int base_cols = detail::base_sample_count(d, 0);

  BigradedResult out;

  for (int p = 0; p < r; ++p) {
    BigradedRow row;
    row.p = p;
    row.lambda = lambda_length(ctx, p);
    if (row.lambda <= 0)
      throw invariant_violation("rows below the reduction number cannot vanish");
    row.delta_cap = delta_cap_length(ctx, p);

    int cols = base_cols;
    for (;;) {
      row.sigma.clear();
      std::vector<long long> k_row;
      for (int i = 0; i < cols; ++i) {
        long long s = sigma_piece_length(ctx, p, i);  // memoized across retries
        long long free_piece = row.lambda * binomial(i + d - 1, d - 1);
        if (s > free_piece)
          throw invariant_violation("a row piece exceeds the free module piece above it");
        if (p == 0 && s != free_piece)
          throw invariant_violation("row 0 must fill its free module exactly");
        row.sigma.push_back(s);
        k_row.push_back(free_piece - s);
      }
      try {
        row.sigma_fit = fit_binomial_polynomial(row.sigma, d);
        row.k_fit = fit_binomial_polynomial(k_row, d);
        break;
      } catch (const fitting_error& e) {
        if (cols >= detail::kRowColumnCap) {
          std::ostringstream msg;
          msg << "row " << p << " fit failed with " << cols << " columns: " << e.what();
          throw fitting_error(msg.str());
        }
        cols = std::min(cols + d + 4, detail::kRowColumnCap);
      }
    }

    row.e0_sigma = row.sigma_fit.coeffs[0];
    row.delta = row.k_fit.coeffs[0];
    if (row.delta != row.lambda - row.e0_sigma)
      throw invariant_violation("the two row fits disagree on the defect");
    if (row.delta < 0) throw invariant_violation("row defects are non-negative");
    if (row.delta > row.delta_cap)
      throw invariant_violation("a row defect exceeds its delta_cap bound");
    if (p == 0 && (row.delta != 0 || row.delta_cap != 0))
      throw invariant_violation("row 0 carries no defect");

    out.lambda += row.lambda;
    out.delta_cap += row.delta_cap;
    out.delta += row.delta;
    out.delta_bar = std::max(out.delta_bar, row.delta);
    out.rows.push_back(std::move(row));
  }

  // e_1 re-derived from the rows alone must match the Hilbert fits
  long long e1_from_rows = 0;
  for (const auto& row : out.rows) e1_from_rows += row.e0_sigma;
  if (e1_from_rows != hilbert.e[1])
    throw invariant_violation("row multiplicities must sum to e_1");
  if (out.delta != out.lambda - hilbert.e[1])
    throw invariant_violation("row defects must sum to lambda - e_1");

  // the row after the last one must vanish; pieces computed directly
  for (int i = 0; i < detail::kProbeWidth; ++i) {
    long long s = sigma_piece_length(ctx, r, i);
    if (s != 0) throw invariant_violation("the probe row past the reduction number must vanish");
    out.probe_row.push_back(s);
  }

  // antidiagonal m collects sigma_{p, m-1-p}; the chain I^m > J I^(m-1) >
  // ... > J^(m-1) I > J^m splits its total into the Sally length plus the
  // closing row-0 piece
  for (int m = 1; m <= base_cols; ++m) {
    long long lhs = 0;
    for (int p = 0; p <= std::min(m - 1, r - 1); ++p)
      lhs += sigma_piece_length(ctx, p, m - 1 - p);
    long long rhs = sally_length(ctx, m - 1) + sigma_piece_length(ctx, 0, m - 1);
    if (lhs != rhs)
      throw invariant_violation("an antidiagonal total disagrees with its Sally length");
  }
  out.identity_window = base_cols;

  // once the Sally samples are polynomial the antidiagonal totals follow the
  // polynomial with coefficients e_1..e_d
  BinomialPolynomial diag_poly;
  diag_poly.dim = d;
  diag_poly.coeffs.assign(hilbert.e.begin() + 1, hilbert.e.end());
  int first_m = sally.zero_module ? 1 : sally.fit.postulation + 1;
  if (first_m < 1) first_m = 1;
  for (int m = first_m; m < first_m + 3; ++m) {
    long long total = 0;
    for (int p = 0; p <= std::min(m - 1, r - 1); ++p)
      total += sigma_piece_length(ctx, p, m - 1 - p);
    if (total != diag_poly.eval(m - 1))
      throw invariant_violation(
          "a settled antidiagonal total disagrees with the polynomial in e_1..e_d");
  }

  return out;
}

}  // namespace blowup
