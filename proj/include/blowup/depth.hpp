#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/filtration.hpp"

namespace blowup {

// Presentation of the associated graded ring of I as ambient/L where ambient
// is k[x_1..x_d, V_1..V_mu] with one V per generator of I, graded by total
// V-degree (the x-variables sit in degree zero). L collects the relations
// among the generators together with I itself.
template <coefficient_field K>
struct GrPresentation {
  Ring ambient;        // x-block first, then the V-block
  std::size_t nx = 0;  // ring variables
  std::size_t nv = 0;  // one per generator of I
  Ideal<K> relations;  // L
  Ideal<K> source;     // I, kept for cross-checks
};

namespace detail {

inline std::vector<std::string> v_block_names(const Ring& ring, std::size_t count) {
  std::vector<std::string> names;
  bool collision = false;
  for (std::size_t k = 0; k < count; ++k) {
    std::ostringstream os;
    os << "V" << k + 1;
    for (const auto& taken : ring.names) collision = collision || taken == os.str();
    names.push_back(os.str());
  }
  if (collision)
    for (auto& n : names) n = "@" + n;
  return names;
}

}  // namespace detail

// Build the presentation. The relations among the generators b_1..b_mu are
// the kernel of V_k -> t b_k, computed by eliminating t from the graph ideal
// (V_1 - t b_1, ..., V_mu - t b_mu); adding I itself then cuts the fibers
// down to the graded pieces I^n/I^(n+1).
//
// The construction reads the ideal globally, so it refuses ideals whose
// vanishing locus is bigger than the origin: for those the graded ring of
// the localization differs from the global one. Two built-in checks guard
// the elimination: the pairwise relations b_j V_k - b_k V_j must land in L,
// and killing the V-block must leave exactly length(R/I) dimensions.
template <coefficient_field K>
GrPresentation<K> gr_presentation(const Ideal<K>& i, int length_cap = 60) {
  if (!i.valid()) throw structural_error("presentation of an uninitialized ideal");
  const Ring& ring = i.ring();
  if (!is_locally_m_primary(i, length_cap))
    throw precondition_error("the ideal is not primary to the origin");
  long long local = local_length_value(Ideal<K>::unit(ring), i, length_cap);
  long long global = i.quotient_dimension();
  if (global < 0 || global != local)
    throw unsupported_input_error(
        "the ideal vanishes somewhere besides the origin; its graded ring is not "
        "the local one");

  const auto& gens = i.generators();
  const std::size_t d = ring.nvars, mu = gens.size();
  Ring ambient = ring.append(detail::v_block_names(ring, mu));
  Ring scratch = ambient.prepend({"@t"});

  Polynomial<K> t = Polynomial<K>::variable(scratch, 0);
  std::vector<Polynomial<K>> graph;
  for (std::size_t k = 0; k < mu; ++k) {
    Polynomial<K> vk = Polynomial<K>::variable(scratch, 1 + d + k);
    graph.push_back(vk - t * detail::lift_prepend(detail::lift_append(gens[k], mu), 1));
  }
  Ideal<K> kernel = eliminate(Ideal<K>(scratch, std::move(graph)), 1);

  std::vector<Polynomial<K>> lifted;
  for (const auto& g : gens) lifted.push_back(detail::lift_append(g, mu));
  Ideal<K> l = ideal_sum(kernel, Ideal<K>(ambient, std::move(lifted)));

  // pairwise relations are in the kernel by construction of the map
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = a + 1; b < mu; ++b) {
      Polynomial<K> probe =
          detail::lift_append(gens[b], mu) * Polynomial<K>::variable(ambient, d + a) -
          detail::lift_append(gens[a], mu) * Polynomial<K>::variable(ambient, d + b);
      if (!l.contains(probe))
        throw invariant_violation("a pairwise generator relation escapes the presentation");
    }

  // degree zero of ambient/L is R/I
  std::vector<Polynomial<K>> vblock;
  for (std::size_t k = 0; k < mu; ++k)
    vblock.push_back(Polynomial<K>::variable(ambient, d + k));
  long long deg0 = ideal_sum(l, Ideal<K>(ambient, std::move(vblock))).quotient_dimension();
  if (deg0 != local)
    throw invariant_violation("degree zero of the presentation must have length(R/I)");

  GrPresentation<K> out;
  out.ambient = ambient;
  out.nx = d;
  out.nv = mu;
  out.relations = std::move(l);
  out.source = i;
  return out;
}

// Dimension of the V-degree-n piece of ambient/L, counted through the
// standard monomials of the initial ideal: for each V-monomial of degree n
// the admissible x-parts are the standard monomials of a monomial ideal in
// the x-block alone. The count is finite because L contains I.
template <coefficient_field K>
long long v_piece_dimension(const GrPresentation<K>& pres, int n) {
  if (n < 0) throw precondition_error("graded pieces start at degree zero");
  const GroebnerBasis<K>& gb = pres.relations.groebner(MonomialOrder::degrevlex());
  const std::size_t d = pres.nx, mu = pres.nv;

  std::vector<std::pair<Monomial, Monomial>> split;  // (x-part, V-part) of each leading term
  for (const Monomial& lm : gb.leading) {
    std::vector<std::uint32_t> xe(lm.exponents().begin(), lm.exponents().begin() + d);
    std::vector<std::uint32_t> ve(lm.exponents().begin() + d, lm.exponents().end());
    split.emplace_back(Monomial(std::move(xe)), Monomial(std::move(ve)));
  }

  Ring xring = Ring::with_default_names(d, pres.ambient.field);
  long long total = 0;
  for (const Monomial& vb : monomials_of_degree(mu, static_cast<std::uint32_t>(n))) {
    std::vector<Polynomial<K>> blockers;
    for (const auto& [xm, vm] : split)
      if (vm.divides(vb))
        blockers.push_back(Polynomial<K>::term(xm, field_one<K>(xring.field)));
    long long count = Ideal<K>(xring, std::move(blockers)).quotient_dimension();
    if (count < 0)
      throw invariant_violation("a graded piece of the presentation is infinite dimensional");
    total += count;
  }
  return total;
}

// A linear form is regular on ambient/L exactly when (L : l) = L; tested by
// mutual membership of generators.
template <coefficient_field K>
bool is_regular_element(const Ideal<K>& l, const Polynomial<K>& f) {
  if (l.contains(f)) throw precondition_error("regularity probe lies in the ideal");
  if (l.is_zero_ideal()) return true;  // the ambient ring is a domain
  return ideal_equal(ideal_colon(l, f), l);
}

struct DepthResult {
  int depth = 0;      // certified stages
  int dimension = 0;  // d
  bool is_cm = false;
  std::vector<std::string> regular_sequence;  // in V-variables, one per stage
  std::string transcript;                     // every draw and its verdict
};

// Certify depth(ambient/L) from below: per stage draw random linear forms in
// the V-variables and keep the first that is regular modulo the forms found
// so far; after `trials` failures the search stops. A form that happens to
// be regular certifies its stage outright, so the reported depth is always a
// true lower bound; only a run of unlucky draws can under-report.
template <coefficient_field K>
DepthResult depth_gr(const GrPresentation<K>& pres, std::uint64_t seed, int trials = 4) {
  if (trials < 1) throw precondition_error("the depth search needs at least one trial per stage");
  const std::size_t d = pres.nx, mu = pres.nv;
  std::mt19937_64 rng(seed);
  std::ostringstream log;
  log << "seed " << seed << ", " << trials << " draws per stage\n";

  DepthResult out;
  out.dimension = static_cast<int>(d);
  Ideal<K> cur = pres.relations;
  for (std::size_t stage = 1; stage <= d; ++stage) {
    bool found = false;
    for (int attempt = 1; attempt <= trials && !found; ++attempt) {
      Polynomial<K> form(pres.ambient.nvars);
      for (std::size_t k = 0; k < mu; ++k) {
        K c;
        if constexpr (std::is_same_v<K, Rational>) {
          long long v = static_cast<long long>(uniform_below(rng, 10001)) - 5000;
          c = make_scalar<K>(pres.ambient.field, v);
        } else {
          c = make_scalar<K>(pres.ambient.field,
                             static_cast<long long>(uniform_below(rng, pres.ambient.field.p)));
        }
        form = form + c * Polynomial<K>::variable(pres.ambient, d + k);
      }
      log << "stage " << stage << " attempt " << attempt << ": "
          << form.str(pres.ambient.names);
      if (form.is_zero() || cur.contains(form)) {
        log << " degenerate draw\n";
        continue;
      }
      if (is_regular_element(cur, form)) {
        log << " regular\n";
        out.regular_sequence.push_back(form.str(pres.ambient.names));
        cur = ideal_sum(cur, Ideal<K>(pres.ambient, {form}));
        found = true;
      } else {
        log << " zero divisor\n";
      }
    }
    if (!found) break;
  }
  out.depth = static_cast<int>(out.regular_sequence.size());
  out.is_cm = out.depth == static_cast<int>(d);
  out.transcript = log.str();
  return out;
}

}  // namespace blowup
