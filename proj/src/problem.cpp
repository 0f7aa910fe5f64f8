#include "blowup/problem.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <set>

namespace blowup {

namespace detail {

std::string strip_position_suffix(const std::string& what) {
  auto at = what.rfind(" (line ");
  return at == std::string::npos ? what : what.substr(0, at);
}

namespace {

struct Cursor {
  const std::string& s;
  int line;
  std::size_t base;  // offset of the line start in the raw text

  int col(std::size_t pos) const { return static_cast<int>(pos - base) + 1; }
};

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::size_t skip_ws(const std::string& s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  return pos;
}

std::size_t rtrim(const std::string& s, std::size_t from, std::size_t to) {
  while (to > from && (s[to - 1] == ' ' || s[to - 1] == '\t')) --to;
  return to;
}

std::uint64_t parse_uint(const Cursor& cur, std::size_t from, std::size_t to,
                         const char* what) {
  if (from >= to)
    throw parse_error(std::string("expected ") + what, cur.line, cur.col(from));
  std::uint64_t v = 0;
  for (std::size_t i = from; i < to; ++i) {
    char c = cur.s[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(std::string("expected ") + what, cur.line, cur.col(i));
    std::uint64_t next = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (next / 10 != v)
      throw parse_error(std::string(what) + " out of range", cur.line, cur.col(from));
    v = next;
  }
  return v;
}

FieldDesc parse_field(const Cursor& cur, std::size_t from, std::size_t to) {
  std::size_t a = skip_ws(cur.s, from);
  std::size_t b = rtrim(cur.s, a, to);
  std::string v = cur.s.substr(a, b - a);
  if (v == "QQ") return FieldDesc::rationals();
  if (v.rfind("Fp", 0) == 0) {
    std::size_t pa = skip_ws(cur.s, a + 2);
    if (pa == a + 2)
      throw parse_error("expected 'Fp <prime>'", cur.line, cur.col(a));
    std::uint64_t p = parse_uint(cur, pa, b, "a prime modulus");
    if (p < 2 || p > 0xffffffffULL || !is_prime(p))
      throw parse_error("modulus is not a prime below 2^32", cur.line, cur.col(pa));
    return FieldDesc::prime_field(static_cast<std::uint32_t>(p));
  }
  throw parse_error("expected 'QQ' or 'Fp <prime>'", cur.line, cur.col(a));
}

std::vector<std::string> parse_vars(const Cursor& cur, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t pos = from;
  for (;;) {
    std::size_t comma = cur.s.find(',', pos);
    std::size_t end = (comma == std::string::npos || comma >= to) ? to : comma;
    std::size_t a = skip_ws(cur.s, pos);
    std::size_t b = rtrim(cur.s, a, end);
    if (a >= b)
      throw parse_error("expected a variable name", cur.line, cur.col(a));
    std::string name = cur.s.substr(a, b - a);
    if (!is_ident(name))
      throw parse_error("variable name must be an identifier", cur.line, cur.col(a));
    if (!seen.insert(name).second)
      throw parse_error("duplicate variable '" + name + "'", cur.line, cur.col(a));
    out.push_back(std::move(name));
    if (end == to) break;
    pos = end + 1;
  }
  return out;
}

std::vector<PolySource> parse_poly_list(const Cursor& cur, std::size_t from,
                                        std::size_t to) {
  std::size_t a = skip_ws(cur.s, from);
  std::size_t b = rtrim(cur.s, a, to);
  if (a >= b || cur.s[a] != '[')
    throw parse_error("expected '[' starting a generator list", cur.line, cur.col(a));
  if (cur.s[b - 1] != ']')
    throw parse_error("expected ']' closing the generator list", cur.line, cur.col(b - 1));
  std::vector<PolySource> out;
  std::size_t pos = a + 1;
  std::size_t stop = b - 1;
  for (;;) {
    std::size_t comma = cur.s.find(',', pos);
    std::size_t end = (comma == std::string::npos || comma >= stop) ? stop : comma;
    std::size_t ea = skip_ws(cur.s, pos);
    std::size_t eb = rtrim(cur.s, ea, end);
    if (ea >= eb)
      throw parse_error("empty generator entry", cur.line, cur.col(ea));
    out.push_back({cur.s.substr(ea, eb - ea), cur.line, cur.col(ea)});
    if (end == stop) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

}  // namespace detail

ProblemSpec parse_problem(const std::string& text) {
  using detail::Cursor;
  ProblemSpec spec;
  std::set<std::string> seen;
  std::size_t pos = 0;
  int line_no = 0;
  bool has_i = false, has_j = false, has_field = false, has_vars = false;

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = (nl == std::string::npos) ? text.size() : nl;
    ++line_no;
    Cursor cur{text, line_no, pos};
    std::size_t stop = end;
    if (stop > pos && text[stop - 1] == '\r') --stop;
    std::size_t hash = text.find('#', pos);
    if (hash != std::string::npos && hash < stop) stop = hash;
    std::size_t a = detail::skip_ws(text, pos);
    std::size_t b = detail::rtrim(text, a, stop);
    if (a < b) {
      std::size_t eq = text.find('=', a);
      if (eq == std::string::npos || eq >= b)
        throw parse_error("expected 'key = value'", line_no, cur.col(a));
      std::size_t kb = detail::rtrim(text, a, eq);
      std::string key = text.substr(a, kb - a);
      if (key.empty())
        throw parse_error("expected a key before '='", line_no, cur.col(a));
      if (!seen.insert(key).second)
        throw parse_error("duplicate key '" + key + "'", line_no, cur.col(a));
      std::size_t va = detail::skip_ws(text, eq + 1);
      std::size_t vb = detail::rtrim(text, va, b);
      if (key == "field") {
        spec.field = detail::parse_field(cur, va, b);
        has_field = true;
      } else if (key == "vars") {
        spec.vars = detail::parse_vars(cur, va, b);
        has_vars = true;
      } else if (key == "I") {
        spec.i_gens = detail::parse_poly_list(cur, va, b);
        has_i = true;
      } else if (key == "J") {
        if (text.substr(va, vb - va) == "auto") {
          spec.auto_reduction = true;
        } else {
          spec.j_gens = detail::parse_poly_list(cur, va, b);
        }
        has_j = true;
      } else if (key == "seed") {
        spec.seed = detail::parse_uint(cur, va, vb, "an unsigned seed");
      } else if (key == "rmax") {
        std::uint64_t v = detail::parse_uint(cur, va, vb, "a bound");
        if (v > 1000)
          throw parse_error("rmax out of range", line_no, cur.col(va));
        spec.rmax = static_cast<int>(v);
      } else if (key == "pmax") {
        std::uint64_t v = detail::parse_uint(cur, va, vb, "a bound");
        if (v > 1000)
          throw parse_error("pmax out of range", line_no, cur.col(va));
        spec.pmax = static_cast<int>(v);
      } else {
        throw parse_error("unknown key '" + key + "'", line_no, cur.col(a));
      }
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }

  if (!has_field) throw parse_error("missing required key 'field'", 0, 0);
  if (!has_vars) throw parse_error("missing required key 'vars'", 0, 0);
  if (!has_i) throw parse_error("missing required key 'I'", 0, 0);
  if (!has_j) throw parse_error("missing required key 'J'", 0, 0);
  if (spec.i_gens.empty()) throw parse_error("I needs at least one generator", 0, 0);

  // Polynomials must parse in the declared ring over the declared field;
  // positions in the thrown error are file positions.
  Ring ring = problem_ring(spec);
  if (spec.field.prime) {
    build_ideal<GFp>(ring, spec.i_gens);
    if (!spec.auto_reduction) build_ideal<GFp>(ring, spec.j_gens);
  } else {
    build_ideal<Rational>(ring, spec.i_gens);
    if (!spec.auto_reduction) build_ideal<Rational>(ring, spec.j_gens);
  }
  return spec;
}

}  // namespace blowup
