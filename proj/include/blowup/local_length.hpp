#pragma once

#include <algorithm>
#include <vector>

#include "blowup/groebner.hpp"

namespace blowup {

// All monomials of total degree exactly n, in every variable of the ring.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t n) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (n == 0) out.push_back(Monomial(0));
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // lexicographic enumeration over compositions of n
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t rest) -> void {
    if (pos + 1 == nvars) {
      e[pos] = rest;
      out.push_back(Monomial(e));
      e[pos] = 0;
      return;
    }
    for (std::uint32_t v = 0; v <= rest; ++v) {
      e[pos] = v;
      self(self, pos + 1, rest - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, n);
  return out;
}

// The n-th power of the irrelevant maximal ideal (x_1, ..., x_d), generated
// by all monomials of degree n.
template <coefficient_field K>
Ideal<K> maximal_ideal_power(const Ring& ring, std::uint32_t n) {
  if (n == 0) return Ideal<K>::unit(ring);
  std::vector<Polynomial<K>> gens;
  for (const auto& m : monomials_of_degree(ring.nvars, n))
    gens.push_back(Polynomial<K>::term(m, field_one<K>(ring.field)));
  return Ideal<K>(ring, std::move(gens));
}

struct LocalLengthResult {
  long long value = -1;      // length of (A/B) localized at the origin
  int truncation_level = 0;  // smallest cutoff the value was certified at
  bool stabilized = false;
};

// Length of (A/B) as a module over the local ring at the origin, B inside A.
//
// The cutoff value v(N) = dim_k R/(B + m^N A) - dim_k R/A counts A/(B + m^N A)
// and grows monotonically in N towards the local length. Agreement of any two
// cutoffs N < M certifies the limit: the monotone chain between them collapses,
// so v(N) = v(N+1), meaning m^N and m^(N+1) cut the same submodule of A/B;
// multiplying that equality by m keeps it true at every larger cutoff, so the
// sequence is constant from N on.
template <coefficient_field K>
LocalLengthResult local_length(const Ideal<K>& a, const Ideal<K>& b, int n_cap = 60) {
  if (!a.ring().compatible(b.ring()))
    throw structural_error("length of a quotient across different ambient rings");
  if (!a.contains(b))
    throw precondition_error("denominator of the quotient is not contained in the numerator");
  if (a.is_zero_ideal()) return {0, 2, true};  // then B = 0 as well
  long long da = a.quotient_dimension();
  if (da < 0)
    throw unsupported_input_error(
        "numerator has an infinite-dimensional quotient; lengths of such "
        "subquotients are outside this computation's reach");

  auto eval = [&](int n) {
    Ideal<K> cut =
        ideal_sum(b, ideal_product(maximal_ideal_power<K>(a.ring(), static_cast<std::uint32_t>(n)), a));
    long long dc = cut.quotient_dimension();
    if (dc < 0) throw invariant_violation("truncated quotient must be finite dimensional");
    return dc - da;
  };

  // Degree-guided start: the value can only settle once m^N A falls inside B,
  // which needs N to make up the degree gap between the generators. Starting
  // lower just burns evaluations; starting anywhere is sound because the
  // certificate only ever compares evaluations.
  long long max_b = 0, min_a = 0;
  for (const auto& g : b.generators())
    max_b = std::max<long long>(max_b, static_cast<long long>(g.total_degree()));
  if (!a.generators().empty()) {
    min_a = static_cast<long long>(a.generators().front().total_degree());
    for (const auto& g : a.generators())
      min_a = std::min<long long>(min_a, static_cast<long long>(g.total_degree()));
  }
  int start = static_cast<int>(std::max<long long>(2, max_b - min_a));
  if (start > n_cap - 1) start = n_cap > 2 ? n_cap - 1 : 2;

  int prev_n = start;
  long long prev = eval(prev_n);
  while (true) {
    int next_n = prev_n == start ? prev_n + 1 : prev_n + std::max(1, prev_n / 2);
    if (next_n > n_cap) next_n = n_cap;
    long long cur = eval(next_n);
    if (cur < prev) throw invariant_violation("truncated lengths must grow with the cutoff");
    if (cur == prev) return {cur, prev_n, true};
    if (next_n >= n_cap) {
      // the ramp may have jumped over the settling point; one consecutive
      // pair at the cap decides
      long long at_last = eval(n_cap - 1);
      if (at_last > cur) throw invariant_violation("truncated lengths must grow with the cutoff");
      if (at_last == cur) return {cur, n_cap - 1, true};
      return {-1, next_n, false};
    }
    prev = cur;
    prev_n = next_n;
  }
}

// Length value for callers whose inputs stabilize by theory.
template <coefficient_field K>
long long local_length_value(const Ideal<K>& a, const Ideal<K>& b, int n_cap = 60) {
  LocalLengthResult r = local_length(a, b, n_cap);
  if (!r.stabilized)
    throw invariant_violation("local length failed to stabilize below the cutoff cap");
  return r.value;
}

// Independent length count for monomial ideals: enumerate the lattice points
// inside a growing box and count monomials lying in A but not in B. When two
// consecutive boxes agree the count is exact: a monomial of A \ B outside the
// smaller box walks down, one exponent at a time, to a generator of A inside
// it; every stop stays in A (still a multiple) and out of B (a stop in B
// would pull the original monomial in), so the walk crosses the shell between
// the boxes and the two counts differ. Returns -1 when no box stabilizes
// (infinite length).
template <coefficient_field K>
long long monomial_length_oracle(const Ideal<K>& a, const Ideal<K>& b, std::uint32_t box_cap = 512) {
  if (!a.ring().compatible(b.ring()))
    throw structural_error("length of a quotient across different ambient rings");
  if (!a.is_monomial() || !b.is_monomial())
    throw precondition_error("the lattice-point oracle needs monomial ideals");
  std::size_t d = a.ring().nvars;
  std::vector<Monomial> ag, bg;
  for (const auto& f : a.generators()) ag.push_back(f.terms().begin()->first);
  for (const auto& f : b.generators()) bg.push_back(f.terms().begin()->first);
  for (const auto& m : bg) {
    bool inside = false;
    for (const auto& g : ag) inside = inside || g.divides(m);
    if (!inside) throw precondition_error("denominator of the quotient is not contained in the numerator");
  }
  if (ag.empty()) return 0;
  if (d == 0) return bg.empty() ? 1 : 0;

  std::uint32_t maxe = 0;
  for (const auto& m : ag)
    for (std::size_t i = 0; i < d; ++i) maxe = std::max(maxe, m.exponent(i));
  for (const auto& m : bg)
    for (std::size_t i = 0; i < d; ++i) maxe = std::max(maxe, m.exponent(i));

  auto count_box = [&](std::uint32_t box) {
    long long count = 0;
    std::vector<std::uint32_t> e(d, 0);
    while (true) {
      Monomial u(e);
      bool in_a = false, in_b = false;
      for (const auto& g : ag) in_a = in_a || g.divides(u);
      if (in_a)
        for (const auto& g : bg) in_b = in_b || g.divides(u);
      if (in_a && !in_b) ++count;
      std::size_t pos = 0;
      while (pos < d && e[pos] + 1 == box) e[pos++] = 0;
      if (pos == d) break;
      ++e[pos];
    }
    return count;
  };

  std::uint32_t box = maxe + 2;
  long long prev = count_box(box);
  while (2 * box <= box_cap) {
    box *= 2;
    long long cur = count_box(box);
    if (cur == prev) return cur;
    prev = cur;
  }
  return -1;
}

// An ideal is primary to the origin exactly when it sits inside the maximal
// ideal and cuts out a finite-length local quotient.
template <coefficient_field K>
bool is_locally_m_primary(const Ideal<K>& i, int n_cap = 60) {
  if (i.is_zero_ideal()) return false;
  Monomial one(i.ring().nvars);
  for (const auto& f : i.generators())
    if (f.terms().count(one)) return false;  // nonzero constant term
  return local_length(Ideal<K>::unit(i.ring()), i, n_cap).stabilized;
}

}  // namespace blowup
