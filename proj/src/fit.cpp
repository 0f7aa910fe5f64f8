#include "blowup/fit.hpp"

#include <sstream>

namespace blowup {

long long BinomialPolynomial::eval(long long x) const {
  long long acc = 0;
  for (int j = 0; j < dim; ++j) {
    long long term = coeffs[static_cast<std::size_t>(j)] * binomial(x + dim - j - 1, dim - j - 1);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

int BinomialPolynomial::degree() const {
  for (int j = 0; j < dim; ++j)
    if (coeffs[static_cast<std::size_t>(j)] != 0) return dim - j - 1;
  return -1;
}

std::string BinomialPolynomial::str() const {
  std::ostringstream out;
  bool wrote = false;
  for (int j = 0; j < dim; ++j) {
    long long c = coeffs[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    long long signed_c = (j % 2 == 0) ? c : -c;
    if (!wrote) {
      if (signed_c < 0) out << "-";
    } else {
      out << (signed_c < 0 ? " - " : " + ");
    }
    long long a = signed_c < 0 ? -signed_c : signed_c;
    int k = dim - j - 1;
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "binom(n+" << k << "," << k << ")";
    }
    wrote = true;
  }
  if (!wrote) out << "0";
  return out.str();
}

BinomialPolynomial fit_binomial_polynomial(const std::vector<long long>& samples, int dim) {
  if (dim < 1) throw precondition_error("a fit needs at least one binomial basis function");
  int n = static_cast<int>(samples.size());
  int verify = dim >= 2 ? dim : 2;
  if (n < dim + verify) {
    std::ostringstream msg;
    msg << "need at least " << dim + verify << " samples to fit and confirm, got " << n;
    throw fitting_error(msg.str());
  }

  // exact interpolation on the last dim samples, unknowns in the binomial basis
  int x0 = n - dim;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(dim),
                                       std::vector<Rational>(static_cast<std::size_t>(dim) + 1));
  for (int row = 0; row < dim; ++row) {
    long long x = x0 + row;
    for (int col = 0; col < dim; ++col) {
      long long b = binomial(x + dim - col - 1, dim - col - 1);
      a[row][col] = Rational(static_cast<long>(col % 2 == 0 ? b : -b));
    }
    a[row][static_cast<std::size_t>(dim)] =
        Rational(static_cast<long>(samples[static_cast<std::size_t>(x)]));
  }
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int row = col; row < dim; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw invariant_violation("interpolation matrix must be invertible");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    Rational inv = a[col][col].inverse();
    for (int k = col; k <= dim; ++k) a[col][k] = a[col][k] * inv;
    for (int row = 0; row < dim; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (int k = col; k <= dim; ++k) a[row][k] = a[row][k] - f * a[col][k];
    }
  }

  BinomialPolynomial p;
  p.dim = dim;
  for (int j = 0; j < dim; ++j) {
    const Rational& c = a[j][static_cast<std::size_t>(dim)];
    // interpolation through integers at consecutive integers has integer
    // binomial coordinates (they are finite differences)
    if (c.denominator() != 1)
      throw invariant_violation("binomial coordinates of an integer fit must be integers");
    if (!c.numerator().fits_slong_p())
      throw invariant_violation("fit coefficient exceeds the supported range");
    p.coeffs.push_back(c.numerator().get_si());
  }

  // the disjoint window right before the interpolation points must agree
  for (int x = x0 - verify; x < x0; ++x) {
    if (p.eval(x) != samples[static_cast<std::size_t>(x)]) {
      std::ostringstream msg;
      msg << "tail not polynomial yet: sample " << x << " is "
          << samples[static_cast<std::size_t>(x)] << ", the window fit gives " << p.eval(x);
      throw fitting_error(msg.str());
    }
  }

  int post = 0;
  for (int x = n - 1; x >= 0; --x) {
    if (p.eval(x) != samples[static_cast<std::size_t>(x)]) {
      post = x + 1;
      break;
    }
  }
  p.postulation = post;
  return p;
}

}  // namespace blowup
