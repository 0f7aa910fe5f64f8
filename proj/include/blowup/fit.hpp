#pragma once

#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/numeric.hpp"

namespace blowup {

// Integer-valued polynomial in the binomial basis:
//
//   p(X) = sum_j (-1)^j c_j binom(X + dim - j - 1, dim - j - 1),  j = 0..dim-1
//
// the normal form Hilbert polynomials are written in, with c_0 scaling the
// top-degree term. Coefficients of integer-valued polynomials are integers in
// this basis.
struct BinomialPolynomial {
  int dim = 0;
  std::vector<long long> coeffs;  // c_0 .. c_{dim-1}
  int postulation = 0;            // least n with samples[k] = p(k) for all k >= n

  long long eval(long long x) const;
  // degree as a polynomial in X; -1 for the zero polynomial
  int degree() const;
  std::string str() const;  // rendered against variable "n"
};

// Fit the eventual polynomial of a sampled sequence: interpolate on the last
// dim samples, confirm on the disjoint window before them, report the least
// index from which every sample agrees. Throws fitting_error when the samples
// are too few or their tail has not reached polynomial behaviour.
BinomialPolynomial fit_binomial_polynomial(const std::vector<long long>& samples, int dim);

}  // namespace blowup
