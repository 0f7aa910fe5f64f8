#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"

namespace blowup {

// One generator as written in the input file, with its position for error
// reporting.
struct PolySource {
  std::string text;
  int line = 0;
  int column = 0;
};

// Parsed problem file: the field, the variables, the ideal, its reduction
// (explicit or to be generated), and the optional knobs.
struct ProblemSpec {
  FieldDesc field;
  std::vector<std::string> vars;
  std::vector<PolySource> i_gens;
  std::vector<PolySource> j_gens;  // empty when auto_reduction is set
  bool auto_reduction = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> rmax;
  std::optional<int> pmax;
};

// Strict line-oriented parse. Format: one `key = value` per line, `#` starts
// a comment, keys are field / vars / I / J / seed / rmax / pmax. `field` is
// `QQ` or `Fp <prime>`; `vars` is a comma-separated list of identifiers;
// `I` and `J` are bracketed polynomial lists, and `J` may be the single token
// `auto`. Unknown keys, duplicate keys, missing required keys, non-prime
// moduli and unparsable polynomials are all rejected with a position.
// Document-level problems (a missing key) report line 0, column 0.
ProblemSpec parse_problem(const std::string& text);

inline Ring problem_ring(const ProblemSpec& spec) {
  return Ring(spec.vars.size(), spec.field, spec.vars);
}

namespace detail {

// Rewrite an in-polynomial parse error to file coordinates. The polynomial
// parser reports line 0 and a column inside the fragment.
std::string strip_position_suffix(const std::string& what);

}  // namespace detail

template <coefficient_field K>
Ideal<K> build_ideal(const Ring& ring, const std::vector<PolySource>& gens) {
  std::vector<Polynomial<K>> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) {
    try {
      Polynomial<K> f = parse_polynomial<K>(ring, g.text);
      if (f.is_zero())
        throw parse_error("zero generator", g.line, g.column);
      polys.push_back(std::move(f));
    } catch (const parse_error& e) {
      if (e.line() != 0) throw;
      throw parse_error(detail::strip_position_suffix(e.what()), g.line,
                        g.column + e.column() - 1);
    } catch (const structural_error& e) {
      // a coefficient with no meaning in the declared field
      throw parse_error(e.what(), g.line, g.column);
    }
  }
  return Ideal<K>(ring, std::move(polys));
}

}  // namespace blowup
