#pragma once

#include <sstream>
#include <vector>

#include "blowup/filtration.hpp"
#include "blowup/fit.hpp"

namespace blowup {

// Hilbert data of the pair: coefficients e_0..e_d and the two fitted
// polynomials they came from.
struct HilbertResult {
  std::vector<long long> e;  // e_0 .. e_d
  BinomialPolynomial h0;     // fit of n -> length(I^n / I^(n+1)), dim d
  BinomialPolynomial h1;     // fit of n -> length(R / I^(n+1)), dim d+1
  int samples = 0;           // how many values of n were used
};

// length of the degree-n piece of the associated graded ring, at the origin
template <coefficient_field K>
long long hilbert_h0(PairContext<K>& ctx, int n) {
  return ctx.length(ctx.ipow(n), ctx.ipow(n + 1));
}

// length of R/I^(n+1) at the origin
template <coefficient_field K>
long long hilbert_h1(PairContext<K>& ctx, int n) {
  return ctx.length(ctx.ipow(0), ctx.ipow(n + 1));
}

namespace detail {

inline int base_sample_count(int d, int r) {
  int a = 2 * d + 4, b = 2 * r + 2 * d + 4;
  return a > b ? a : b;
}
constexpr int kSampleCap = 80;
constexpr int kSampleStep = 4;

}  // namespace detail

// Compute e_0..e_d by fitting both Hilbert functions and reconciling them:
// the graded fit determines e_0..e_(d-1), the cumulative fit re-derives them
// and appends e_d, and e_0 is checked against length(R/J) directly. Sampling
// extends itself when the fit reports a not-yet-polynomial tail.
template <coefficient_field K>
HilbertResult hilbert_coefficients(PairContext<K>& ctx) {
  int d = ctx.dimension();
  int n_samples = detail::base_sample_count(d, ctx.reduction_number());
  for (;;) {
    std::vector<long long> h0, h1;
    long long running = 0;
    for (int n = 0; n < n_samples; ++n) {
      h0.push_back(hilbert_h0(ctx, n));
      h1.push_back(hilbert_h1(ctx, n));
      running += h0.back();
      // additivity of length along the chain R, I, ..., I^(n+1)
      if (running != h1.back())
        throw invariant_violation("graded pieces must sum to the cumulative length");
    }
    try {
      BinomialPolynomial f0 = fit_binomial_polynomial(h0, d);
      BinomialPolynomial f1 = fit_binomial_polynomial(h1, d + 1);
      for (int j = 0; j < d; ++j) {
        if (f0.coeffs[static_cast<std::size_t>(j)] != f1.coeffs[static_cast<std::size_t>(j)])
          throw invariant_violation(
              "graded and cumulative Hilbert fits disagree on a shared coefficient");
      }
      long long e0_direct = ctx.length(ctx.ipow(0), ctx.jpow(1));
      if (e0_direct != f1.coeffs[0])
        throw invariant_violation("leading coefficient must equal the colength of the reduction");
      HilbertResult out;
      out.e = f1.coeffs;
      out.h0 = f0;
      out.h1 = f1;
      out.samples = n_samples;
      return out;
    } catch (const fitting_error& e) {
      if (n_samples >= detail::kSampleCap) {
        std::ostringstream msg;
        msg << "Hilbert fit failed with " << n_samples << " samples: " << e.what();
        throw fitting_error(msg.str());
      }
      n_samples += ctx.dimension() + detail::kSampleStep;
      if (n_samples > detail::kSampleCap) n_samples = detail::kSampleCap;
    }
  }
}

// length of the degree-n piece I^(n+1) / J^n I of the Sally module; zero in
// degree zero by construction
template <coefficient_field K>
long long sally_length(PairContext<K>& ctx, int n) {
  if (n < 0) throw precondition_error("Sally module degrees start at zero");
  if (n == 0) return 0;
  return ctx.length(ctx.ipow(n + 1), ctx.mixed(n, 1));
}

// Sally module data: either the module vanishes, or the fit of its Hilbert
// function. Both branches verify the fingerprint the coefficients leave on
// e_1..e_d.
struct SallyResult {
  bool zero_module = false;
  std::vector<long long> s;  // s_0 .. s_{d-1}; all zero when the module vanishes
  BinomialPolynomial fit;    // meaningful only when the module does not vanish
  int samples = 0;
};

template <coefficient_field K>
SallyResult sally_coefficients(PairContext<K>& ctx, const HilbertResult& hilbert) {
  int d = ctx.dimension();
  long long i_mod_j = ctx.length(ctx.ipow(1), ctx.jpow(1));
  int n_samples = detail::base_sample_count(d, ctx.reduction_number());
  for (;;) {
    std::vector<long long> vals;
    for (int n = 0; n < n_samples; ++n) vals.push_back(sally_length(ctx, n));

    bool all_zero = true;
    for (long long v : vals) all_zero = all_zero && v == 0;
    if (all_zero) {
      // a vanishing module forces e_1 = length(I/J) and e_2 = ... = e_d = 0
      if (hilbert.e[1] != i_mod_j)
        throw invariant_violation("with no Sally module, e_1 must equal length(I/J)");
      for (int k = 2; k <= d; ++k)
        if (hilbert.e[static_cast<std::size_t>(k)] != 0)
          throw invariant_violation("with no Sally module, e_2..e_d must vanish");
      SallyResult out;
      out.zero_module = true;
      out.s.assign(static_cast<std::size_t>(d), 0);
      out.samples = n_samples;
      return out;
    }

    try {
      BinomialPolynomial f = fit_binomial_polynomial(vals, d);
      if (f.coeffs[0] != hilbert.e[1] - i_mod_j)
        throw invariant_violation("Sally leading coefficient must be e_1 - length(I/J)");
      for (int j = 1; j < d; ++j)
        if (f.coeffs[static_cast<std::size_t>(j)] != hilbert.e[static_cast<std::size_t>(j + 1)])
          throw invariant_violation("Sally coefficients must reproduce e_2..e_d");
      SallyResult out;
      out.s = f.coeffs;
      out.fit = f;
      out.samples = n_samples;
      return out;
    } catch (const fitting_error& e) {
      if (n_samples >= detail::kSampleCap) {
        std::ostringstream msg;
        msg << "Sally fit failed with " << n_samples << " samples: " << e.what();
        throw fitting_error(msg.str());
      }
      n_samples += ctx.dimension() + detail::kSampleStep;
      if (n_samples > detail::kSampleCap) n_samples = detail::kSampleCap;
    }
  }
}

}  // namespace blowup
