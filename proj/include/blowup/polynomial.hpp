#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blowup/monomial.hpp"
#include "blowup/numeric.hpp"
#include "blowup/ring.hpp"

namespace blowup {

// Sparse multivariate polynomial over a coefficient field: a term map from
// monomials to nonzero coefficients. The map key order is structural (it is
// not a monomial order); consumers that need order-sorted terms ask for them
// explicitly. Value type: all operations return new polynomials.
template <coefficient_field K>
class Polynomial {
public:
  using TermMap = std::map<Monomial, K>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, K c) {
    Polynomial f(nvars);
    if (!c.is_zero()) f.terms_.emplace(Monomial(nvars), std::move(c));
    return f;
  }
  static Polynomial term(Monomial m, K c) {
    Polynomial f(m.nvars());
    if (!c.is_zero()) f.terms_.emplace(std::move(m), std::move(c));
    return f;
  }
  static Polynomial variable(const Ring& ring, std::size_t index) {
    return term(Monomial::variable(ring.nvars, index), field_one<K>(ring.field));
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_monomial_times_scalar() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  std::uint64_t total_degree() const {  // max term degree; 0 for the zero polynomial
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_ambient(a, b);
    Polynomial out(a);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_ambient(a, b);
    Polynomial out(a);
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  Polynomial operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ambient(a, b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend Polynomial operator*(const K& c, const Polynomial& f) { return f.scaled(c); }

  Polynomial scaled(const K& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
  }
  // this * c * x^m
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mm, k] : terms_) out.terms_.emplace(mm * m, k * c);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Terms sorted descending under the given order (leading term first).
  std::vector<std::pair<Monomial, K>> sorted_terms(const MonomialOrder& ord) const {
    std::vector<std::pair<Monomial, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
      return ord.greater(x.first, y.first);
    });
    return v;
  }
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw structural_error("leading monomial of zero");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
      if (ord.greater(m, *best)) best = &m;
    return *best;
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    K s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }

  // Canonical text form: terms descending under degrevlex, "a/b" coefficients,
  // explicit "*" between factors, e.g. "3*x^2*y - 1/2*y^4".
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto sorted = sorted_terms(MonomialOrder::degrevlex());
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string cs = c.str();
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      if (m.is_one()) {
        out += cs;
      } else if (cs == "1") {
        out += m.str(names);
      } else {
        out += cs + "*" + m.str(names);
      }
    }
    return out;
  }

private:
  static void check_ambient(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_)
      throw structural_error("polynomials from different ambient rings");
  }

  std::size_t nvars_;
  TermMap terms_;
};

namespace detail {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number", 0, static_cast<int>(pos) + 1);
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > (1LL << 62)) throw parse_error("integer literal too large", 0, static_cast<int>(start) + 1);
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start)
      throw parse_error("expected a variable or number", 0, static_cast<int>(pos) + 1);
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

// Parse the plain text polynomial syntax: signed terms, "*" between factors,
// "^" for powers, integer or integer/integer coefficients. Example:
// "3*x^2*y - 1/2*y^4". Throws parse_error with a column (line 0; callers
// parsing files rewrite the position).
template <coefficient_field K>
Polynomial<K> parse_polynomial(const Ring& ring, const std::string& text) {
  detail::PolyLexer lx{text};
  auto var_index = [&](const std::string& name, std::size_t at) -> std::size_t {
    for (std::size_t i = 0; i < ring.names.size(); ++i)
      if (ring.names[i] == name) return i;
    throw parse_error("unknown variable '" + name + "'", 0, static_cast<int>(at) + 1);
  };

  // poly := ['-'] term (('+'|'-') term)*
  // term := factor ('*' factor)*, factor := number['/'number] | var['^'nat]
  Polynomial<K> out(ring.nvars);
  bool first = true;
  while (true) {
    int sign = 1;
    if (first) {
      if (lx.eof()) throw parse_error("expected a polynomial", 0, static_cast<int>(lx.pos) + 1);
      if (lx.eat('-')) sign = -1;
    } else {
      if (lx.eof()) break;
      if (lx.eat('+'))
        sign = 1;
      else if (lx.eat('-'))
        sign = -1;
      else
        throw parse_error("expected '+' or '-' between terms", 0,
                          static_cast<int>(lx.pos) + 1);
    }
    K coeff = make_scalar<K>(ring.field, sign);
    std::vector<std::uint32_t> exps(ring.nvars, 0);
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long num = lx.integer();
        long long den = 1;
        if (lx.eat('/')) den = lx.integer();
        if (den == 0) throw parse_error("zero denominator", 0, static_cast<int>(lx.pos));
        coeff = coeff * make_scalar<K>(ring.field, num, den);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t at = lx.pos;
        std::string name = lx.identifier();
        std::size_t vi = var_index(name, at);
        long long e = 1;
        if (lx.eat('^')) e = lx.integer();
        if (e < 0 || e > 1'000'000)
          throw parse_error("exponent out of range", 0, static_cast<int>(lx.pos));
        exps[vi] += static_cast<std::uint32_t>(e);
      } else {
        throw parse_error(std::string("unexpected character '") + c + "'", 0,
                          static_cast<int>(lx.pos) + 1);
      }
      if (!lx.eat('*')) break;
    }
    out.add_term(Monomial(std::move(exps)), coeff);
    first = false;
  }
  return out;
}

}  // namespace blowup
