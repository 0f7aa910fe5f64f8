#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "blowup/errors.hpp"

namespace blowup {

// Power product of the ambient variables: an exponent vector with a cached
// total degree. Immutable after construction.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)), deg_(0) {
    for (std::uint32_t x : e_) deg_ += x;
  }
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint64_t total_degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    std::vector<std::uint32_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& m) const {
    check_ambient(*this, m);
    if (deg_ > m.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  // this / m, defined only when m divides this.
  Monomial quotient_by(const Monomial& m) const {
    check_ambient(*this, m);
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (m.e_[i] > e_[i]) throw structural_error("non-exact monomial quotient");
      e[i] = e_[i] - m.e_[i];
    }
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    std::vector<std::uint32_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  // Structural order (exponent vectors, lexicographic) used only as a
  // container key; monomial orders are separate.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::string str(const std::vector<std::string>& names) const;

private:
  static void check_ambient(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size())
      throw structural_error("monomials from different ambient rings");
  }

  std::vector<std::uint32_t> e_;
  std::uint64_t deg_;
};

// Global monomial order: graded reverse lexicographic, lexicographic, or a
// block (elimination) order whose leading block is the first `block` variables
// with graded reverse lexicographic inside each block. All three are
// multiplicative total orders with 1 as least element; the block order makes
// the leading block's variables eliminable.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };
  Kind kind = Kind::degrevlex;
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(std::size_t leading_block) {
    return {Kind::block, leading_block};
  }

  bool operator==(const MonomialOrder&) const = default;
  bool operator<(const MonomialOrder& o) const {  // container key
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return block < o.block;
  }
  std::string str() const;

  // Three-way comparison: negative when a < b, zero on equality.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

}  // namespace blowup
