#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

// Exact rational number. Always in lowest terms with positive denominator
// (mpq canonical form); construction and arithmetic preserve this.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(long n, long d) {
    if (d == 0) throw structural_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
  Rational inverse() const {
    if (is_zero()) throw structural_error("inverse of zero");
    return Rational(mpq_class(1 / v_), already_canonical{});
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw structural_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_), already_canonical{});
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  const mpq_class& value() const { return v_; }
  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  // "a" for integers, "a/b" otherwise.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

private:
  struct already_canonical {};
  Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}
  mpq_class v_;
};

// Residue in the prime field Z/p. Elements carry their modulus; combining
// elements of different moduli is a structural error. A default-constructed
// element is the zero of an unspecified field and adopts the other operand's
// modulus, which lets containers hold zeroes without threading p everywhere.
class GFp {
public:
  GFp() : v_(0), p_(0) {}
  GFp(std::uint32_t v, std::uint32_t p) : v_(v % p), p_(p) {
    if (p < 2) throw structural_error("prime field modulus must be at least 2");
  }
  static GFp from_int(long long n, std::uint32_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return GFp(static_cast<std::uint32_t>(r), p);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  GFp operator-() const {
    if (v_ == 0) return *this;
    return GFp(p_ - v_, p_);
  }
  GFp inverse() const {
    if (v_ == 0) throw structural_error("inverse of zero");
    return GFp(pow_mod(v_, p_ - 2, p_), p_);
  }

  friend GFp operator+(const GFp& a, const GFp& b) {
    std::uint32_t p = merged_modulus(a, b);
    if (p == 0) return GFp();
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    if (s >= p) s -= p;
    return GFp(static_cast<std::uint32_t>(s), p);
  }
  friend GFp operator-(const GFp& a, const GFp& b) { return a + (-b); }
  friend GFp operator*(const GFp& a, const GFp& b) {
    std::uint32_t p = merged_modulus(a, b);
    if (p == 0) return GFp();
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) * b.v_ % p;
    return GFp(static_cast<std::uint32_t>(s), p);
  }
  friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
  GFp& operator+=(const GFp& o) { *this = *this + o; return *this; }
  GFp& operator-=(const GFp& o) { *this = *this - o; return *this; }
  GFp& operator*=(const GFp& o) { *this = *this * o; return *this; }

  friend bool operator==(const GFp& a, const GFp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw structural_error("comparing residues of different prime fields");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

private:
  static std::uint32_t merged_modulus(const GFp& a, const GFp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw structural_error("mixing residues of different prime fields");
    return a.p_;
  }
  static std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

// Runtime description of the coefficient field: the rationals, or Z/p.
struct FieldDesc {
  bool prime = false;
  std::uint32_t p = 0;

  static FieldDesc rationals() { return FieldDesc{}; }
  static FieldDesc prime_field(std::uint32_t p) { return FieldDesc{true, p}; }
  bool operator==(const FieldDesc&) const = default;
  std::string str() const { return prime ? "Fp " + std::to_string(p) : "QQ"; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

template <class K>
concept coefficient_field = requires(const K a, const K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

// Build scalars of either field from integer data.
template <coefficient_field K>
K make_scalar(const FieldDesc& field, long long num, long long den = 1);

template <>
inline Rational make_scalar<Rational>(const FieldDesc&, long long num, long long den) {
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

template <>
inline GFp make_scalar<GFp>(const FieldDesc& field, long long num, long long den) {
  if (!field.prime) throw structural_error("prime-field scalar requested from a rational field");
  GFp d = GFp::from_int(den, field.p);
  if (d.is_zero())
    throw structural_error("denominator divisible by the field characteristic");
  return GFp::from_int(num, field.p) / d;
}

template <coefficient_field K>
K field_one(const FieldDesc& field) {
  return make_scalar<K>(field, 1);
}

// Exact binomial coefficient; small arguments only (fits in int64 for
// everything this library samples).
inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i);
    acc /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return acc;
}

}  // namespace blowup
