#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

template <coefficient_field K>
class Ideal;

namespace detail {

// Engine representation: term vector sorted strictly descending under the
// active monomial order. The leading term is element 0.
template <coefficient_field K>
using TermVec = std::vector<std::pair<Monomial, K>>;

template <coefficient_field K>
TermVec<K> to_ordered(const Polynomial<K>& f, const MonomialOrder& ord) {
  return f.sorted_terms(ord);
}

template <coefficient_field K>
Polynomial<K> from_ordered(std::size_t nvars, const TermVec<K>& t) {
  Polynomial<K> f(nvars);
  for (const auto& [m, c] : t) f.add_term(m, c);
  return f;
}

// (x^s * c) * f, order preserved since the order is multiplicative.
template <coefficient_field K>
TermVec<K> scale_shift(const TermVec<K>& f, const Monomial& s, const K& c) {
  TermVec<K> r;
  r.reserve(f.size());
  for (const auto& [m, k] : f) r.emplace_back(m * s, k * c);
  return r;
}

// h[off..] - q * x^s * g as a single linear merge.
template <coefficient_field K>
TermVec<K> merge_axpy(const TermVec<K>& h, std::size_t off, const K& q, const Monomial& s,
                      const TermVec<K>& g, const MonomialOrder& ord) {
  TermVec<K> r;
  r.reserve(h.size() - off + g.size());
  std::size_t i = off, j = 0;
  Monomial gm = j < g.size() ? g[j].first * s : Monomial(0);
  while (i < h.size() && j < g.size()) {
    int c = ord.compare(h[i].first, gm);
    if (c > 0) {
      r.push_back(h[i]);
      ++i;
    } else if (c < 0) {
      r.emplace_back(gm, -(q * g[j].second));
      if (++j < g.size()) gm = g[j].first * s;
    } else {
      K v = h[i].second - q * g[j].second;
      if (!v.is_zero()) r.emplace_back(h[i].first, std::move(v));
      ++i;
      if (++j < g.size()) gm = g[j].first * s;
    }
  }
  for (; i < h.size(); ++i) r.push_back(h[i]);
  for (; j < g.size(); ++j) {
    r.emplace_back(g[j].first * s, -(q * g[j].second));
  }
  return r;
}

// Scale a rational term vector to integer coefficients with content 1 and
// positive leading coefficient; keeps intermediate results small. Residue
// vectors are left untouched (their coefficients cannot grow).
inline void make_primitive(TermVec<Rational>& t) {
  if (t.empty()) return;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : t) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(t[0].second.value()) < 0) factor = -factor;
  if (factor == 1) return;
  Rational f{factor};
  for (auto& [m, c] : t) c = c * f;
}
inline void make_primitive(TermVec<GFp>& t) {
  if (!t.empty() && !t[0].second.is_one()) {
    GFp inv = t[0].second.inverse();
    for (auto& [m, c] : t) c = c * inv;
  }
}

template <coefficient_field K>
void make_monic(TermVec<K>& t) {
  if (t.empty() || t[0].second.is_one()) return;
  K inv = t[0].second.inverse();
  for (auto& [m, c] : t) c = c * inv;
}

// Full normal form: every term of the result is irreducible modulo the basis.
// With exact = false the result may be scaled by a positive constant (content
// control during basis construction); public reductions use exact = true.
template <coefficient_field K>
TermVec<K> normal_form_vec(TermVec<K> work, const std::vector<TermVec<K>>& basis,
                           const std::vector<Monomial>& lms, const MonomialOrder& ord,
                           bool exact) {
  TermVec<K> out;
  std::size_t start = 0;
  unsigned steps = 0;
  while (start < work.size()) {
    const Monomial& m = work[start].first;
    std::size_t hit = basis.size();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (!basis[b].empty() && lms[b].divides(m)) {
        hit = b;
        break;
      }
    }
    if (hit == basis.size()) {
      out.push_back(work[start]);
      ++start;
      continue;
    }
    const TermVec<K>& g = basis[hit];
    K q = work[start].second / g[0].second;
    Monomial s = m.quotient_by(g[0].first);
    work = merge_axpy(work, start, q, s, g, ord);
    start = 0;
    if constexpr (std::is_same_v<K, Rational>) {
      if (!exact && (++steps & 15u) == 0 && !work.empty()) {
        // rescale the partial remainder too so the result stays one scalar
        // multiple of the true normal form
        TermVec<Rational> all = out;
        all.insert(all.end(), work.begin(), work.end());
        make_primitive(all);
        out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(out.size()));
        work.assign(all.begin() + static_cast<std::ptrdiff_t>(out.size()), all.end());
      }
    }
  }
  return out;
}

template <coefficient_field K>
TermVec<K> s_polynomial_vec(const TermVec<K>& f, const TermVec<K>& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f[0].first, g[0].first);
  TermVec<K> u = scale_shift(f, l.quotient_by(f[0].first), f[0].second.inverse());
  return merge_axpy(u, 0, g[0].second.inverse(), l.quotient_by(g[0].first), g, ord);
}

}  // namespace detail

// Reduced Groebner basis: monic elements, pairwise irreducible, sorted by
// ascending leading monomial. Unique for a given ideal and order.
template <coefficient_field K>
struct GroebnerBasis {
  MonomialOrder order;
  std::size_t nvars = 0;
  std::vector<Polynomial<K>> polys;
  std::vector<detail::TermVec<K>> elements;  // engine form of the same polys
  std::vector<Monomial> leading;

  bool is_unit() const {
    return leading.size() == 1 && leading[0].is_one();
  }
  std::size_t size() const { return elements.size(); }
};

namespace detail {

template <coefficient_field K>
GroebnerBasis<K> finalize_basis(const Ring& ring, const MonomialOrder& ord,
                                std::vector<TermVec<K>> elems) {
  // minimalize: drop elements whose leading monomial another leading monomial divides
  std::vector<Monomial> lms;
  lms.reserve(elems.size());
  for (const auto& e : elems) lms.push_back(e[0].first);
  std::vector<bool> keep(elems.size(), true);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) keep[i] = false;
    }
  }
  std::vector<TermVec<K>> kept;
  std::vector<Monomial> kept_lms;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (keep[i]) {
      kept.push_back(std::move(elems[i]));
      kept_lms.push_back(lms[i]);
    }
  }
  // tail interreduction: leading monomials are already pairwise irreducible,
  // so one pass reduces every tail completely
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<TermVec<K>> others;
    std::vector<Monomial> other_lms;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      others.push_back(kept[j]);
      other_lms.push_back(kept_lms[j]);
    }
    kept[i] = normal_form_vec<K>(std::move(kept[i]), others, other_lms, ord, true);
    make_monic(kept[i]);
  }
  std::vector<std::size_t> idx(kept.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ord.less(kept[a][0].first, kept[b][0].first);
  });
  GroebnerBasis<K> out;
  out.order = ord;
  out.nvars = ring.nvars;
  for (std::size_t i : idx) {
    out.elements.push_back(kept[i]);
    out.leading.push_back(kept[i][0].first);
    out.polys.push_back(from_ordered<K>(ring.nvars, kept[i]));
  }
  return out;
}

}  // namespace detail

// Buchberger's algorithm with normal pair selection (smallest lcm first) and
// the Gebauer-Moeller pair filters: coprime leading terms, lcm chains and
// duplicate lcms never enter the queue. Monomial generator sets short-circuit
// to interreduction, since their s-polynomials vanish identically.
template <coefficient_field K>
GroebnerBasis<K> buchberger(const Ring& ring, const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& ord = MonomialOrder::degrevlex()) {
  using detail::TermVec;

  std::vector<TermVec<K>> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      // unit ideal
      TermVec<K> one{{Monomial(ring.nvars), field_one<K>(ring.field)}};
      return detail::finalize_basis<K>(ring, ord, {std::move(one)});
    }
    input.push_back(detail::to_ordered(g, ord));
  }
  if (input.empty()) {
    GroebnerBasis<K> empty;
    empty.order = ord;
    empty.nvars = ring.nvars;
    return empty;
  }
  std::sort(input.begin(), input.end(), [&](const TermVec<K>& a, const TermVec<K>& b) {
    int c = ord.compare(a[0].first, b[0].first);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });

  // forward interreduction of the generators; discards span redundancy before
  // any pair is formed
  std::vector<TermVec<K>> basis;
  std::vector<Monomial> lms;
  bool all_monomial = true;
  for (auto& f : input) {
    TermVec<K> r = detail::normal_form_vec<K>(std::move(f), basis, lms, ord, false);
    if (r.empty()) continue;
    detail::make_primitive(r);
    all_monomial = all_monomial && r.size() == 1;
    lms.push_back(r[0].first);
    basis.push_back(std::move(r));
  }
  if (basis.empty()) {
    GroebnerBasis<K> empty;
    empty.order = ord;
    empty.nvars = ring.nvars;
    return empty;
  }
  if (all_monomial) return detail::finalize_basis<K>(ring, ord, std::move(basis));

  struct SPair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&ord](const SPair& a, const SPair& b) {
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<SPair, decltype(pair_less)> queue(pair_less);

  std::vector<bool> dropped(basis.size(), false);

  auto update_pairs = [&](std::size_t t) {
    // candidate pairs (i, t), filtered by the lcm-chain criterion
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cand;
    for (std::size_t i = 0; i < t; ++i) {
      if (dropped[i]) continue;
      cand.push_back({i, Monomial::lcm(lms[i], lms[t]), Monomial::coprime(lms[i], lms[t])});
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(cand[a].lcm)) keep[a] = false;
      }
    }
    // group the survivors by lcm: a class containing a coprime pair dies
    // entirely, otherwise exactly one representative enters the queue
    std::map<Monomial, std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a]) classes[cand[a].lcm].push_back(a);
    for (const auto& [l, members] : classes) {
      bool any_coprime = false;
      for (std::size_t a : members) any_coprime = any_coprime || cand[a].coprime;
      if (!any_coprime) queue.insert(SPair{cand[members.front()].i, t, l});
    }
    // retire queued pairs superseded by the new element
    for (auto it = queue.begin(); it != queue.end();) {
      if (it->j != t && lms[t].divides(it->lcm) &&
          Monomial::lcm(lms[it->i], lms[t]) != it->lcm &&
          Monomial::lcm(lms[it->j], lms[t]) != it->lcm) {
        it = queue.erase(it);
      } else {
        ++it;
      }
    }
    // older elements whose leading monomial the new one divides are redundant
    // for every future pair and for the final basis
    for (std::size_t i = 0; i < t; ++i)
      if (!dropped[i] && lms[t].divides(lms[i]) && lms[t] != lms[i]) dropped[i] = true;
  };

  for (std::size_t t = 1; t < basis.size(); ++t) update_pairs(t);

  while (!queue.empty()) {
    SPair p = *queue.begin();
    queue.erase(queue.begin());
    TermVec<K> s = detail::s_polynomial_vec<K>(basis[p.i], basis[p.j], ord);
    TermVec<K> r = detail::normal_form_vec<K>(std::move(s), basis, lms, ord, false);
    if (r.empty()) continue;
    detail::make_primitive(r);
    lms.push_back(r[0].first);
    basis.push_back(std::move(r));
    dropped.push_back(false);
    update_pairs(basis.size() - 1);
  }

  std::vector<TermVec<K>> survivors;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!dropped[i]) survivors.push_back(std::move(basis[i]));
  return detail::finalize_basis<K>(ring, ord, std::move(survivors));
}

// Exact normal form of f modulo a reduced basis; the unique representative of
// f whose terms avoid every leading monomial of the basis.
template <coefficient_field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  if (f.nvars() != gb.nvars)
    throw structural_error("normal form across different ambient rings");
  auto r = detail::normal_form_vec<K>(detail::to_ordered(f, gb.order), gb.elements,
                                      gb.leading, gb.order, true);
  return detail::from_ordered<K>(f.nvars(), r);
}

// Finitely generated ideal of the ambient ring. Immutable value; copies share
// the generator list and the per-order Groebner cache (write once per key,
// concurrent duplicate computation allowed, results identical).
template <coefficient_field K>
class Ideal {
public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial<K>> gens)
      : d_(std::make_shared<Data>(std::move(ring), normalize(gens))) {}

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) {
    return Ideal(ring, {Polynomial<K>::constant(ring.nvars, field_one<K>(ring.field))});
  }
  // Adopt generators already known to be a reduced degrevlex-compatible
  // Groebner basis (used by elimination, whose output bases restrict).
  static Ideal with_known_basis(const Ring& ring, std::vector<Polynomial<K>> polys) {
    Ideal out(ring, polys);
    GroebnerBasis<K> gb;
    gb.order = MonomialOrder::degrevlex();
    gb.nvars = ring.nvars;
    std::vector<std::size_t> idx(polys.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return gb.order.less(polys[a].leading_monomial(gb.order),
                           polys[b].leading_monomial(gb.order));
    });
    for (std::size_t i : idx) {
      gb.polys.push_back(polys[i]);
      gb.elements.push_back(detail::to_ordered(polys[i], gb.order));
      gb.leading.push_back(gb.elements.back()[0].first);
    }
    std::lock_guard<std::mutex> lock(out.d_->mu);
    out.d_->gb.emplace(gb.order, std::make_shared<GroebnerBasis<K>>(std::move(gb)));
    return out;
  }

  bool valid() const { return d_ != nullptr; }
  const Ring& ring() const { return d_->ring; }
  const std::vector<Polynomial<K>>& generators() const { return d_->gens; }
  bool is_zero_ideal() const { return d_->gens.empty(); }
  bool is_monomial() const { return d_->monomial; }
  // Stable within-process identity used as a memoization key.
  const void* identity() const { return d_.get(); }

  const GroebnerBasis<K>& groebner(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    {
      std::lock_guard<std::mutex> lock(d_->mu);
      auto it = d_->gb.find(ord);
      if (it != d_->gb.end()) return *it->second;
    }
    auto computed = std::make_shared<GroebnerBasis<K>>(buchberger<K>(d_->ring, d_->gens, ord));
    std::lock_guard<std::mutex> lock(d_->mu);
    auto [it, inserted] = d_->gb.emplace(ord, computed);
    return *it->second;  // first writer wins
  }

  bool contains(const Polynomial<K>& f) const {
    if (f.is_zero()) return true;
    return normal_form(f, groebner()).is_zero();
  }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  // Number of monomials outside the leading-term ideal (a k-basis of the
  // quotient ring); -1 when the quotient is infinite dimensional.
  long long quotient_dimension() const {
    {
      std::lock_guard<std::mutex> lock(d_->mu);
      if (d_->qdim) return *d_->qdim;
    }
    long long v = count_standard_monomials();
    std::lock_guard<std::mutex> lock(d_->mu);
    if (!d_->qdim) d_->qdim = v;
    return *d_->qdim;
  }

private:
  struct Data {
    Data(Ring r, std::vector<Polynomial<K>> g) : ring(std::move(r)), gens(std::move(g)) {
      monomial = true;
      for (const auto& f : gens) monomial = monomial && f.is_monomial_times_scalar();
    }
    Ring ring;
    std::vector<Polynomial<K>> gens;
    bool monomial = false;
    mutable std::mutex mu;
    mutable std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis<K>>> gb;
    mutable std::optional<long long> qdim;
  };

  static std::vector<Polynomial<K>> normalize(std::vector<Polynomial<K>>& gens) {
    std::vector<Polynomial<K>> out;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      bool dup = false;
      for (const auto& h : out) dup = dup || h == g;
      if (!dup) out.push_back(std::move(g));
    }
    // monomial generating sets shrink to their unique minimal set
    bool monomial = true;
    for (const auto& f : out) monomial = monomial && f.is_monomial_times_scalar();
    if (monomial && !out.empty()) {
      std::vector<Monomial> ms;
      for (const auto& f : out) ms.push_back(f.terms().begin()->first);
      std::vector<bool> keep(ms.size(), true);
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size() && keep[i]; ++j) {
          if (i == j || !keep[j]) continue;
          if (ms[j].divides(ms[i]) && !(ms[i] == ms[j] && j > i)) keep[i] = false;
        }
      std::vector<Polynomial<K>> kept;
      for (std::size_t i = 0; i < ms.size(); ++i)
        if (keep[i]) kept.push_back(std::move(out[i]));
      return kept;
    }
    return out;
  }

  long long count_standard_monomials() const {
    const GroebnerBasis<K>& gb = groebner();
    std::size_t n = d_->ring.nvars;
    if (gb.size() == 0) return n == 0 ? 1 : -1;
    if (gb.is_unit()) return 0;
    if (n == 0) return 0;
    std::vector<long long> bound(n, -1);
    for (const auto& lm : gb.leading) {
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (lm.exponent(i) > 0) {
          ++support;
          var = i;
        }
      if (support == 1) {
        long long e = lm.exponent(var);
        if (bound[var] < 0 || e < bound[var]) bound[var] = e;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (bound[i] < 0) return -1;

    // depth-first walk over the exponent box, pruning branches some leading
    // monomial already divides
    std::vector<const Monomial*> alive;
    for (const auto& lm : gb.leading) alive.push_back(&lm);
    return walk(0, n, alive, bound);
  }

  long long walk(std::size_t depth, std::size_t n, const std::vector<const Monomial*>& alive,
                 const std::vector<long long>& bound) const {
    if (depth == n) return alive.empty() ? 1 : 0;
    long long total = 0;
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(bound[depth]); ++a) {
      std::vector<const Monomial*> next;
      bool divisible = false;
      for (const Monomial* l : alive) {
        if (l->exponent(depth) > a) continue;  // cannot divide any completion
        bool tail_trivial = true;
        for (std::size_t j = depth + 1; j < n && tail_trivial; ++j)
          tail_trivial = l->exponent(j) == 0;
        if (tail_trivial) {
          divisible = true;  // divides every completion of this prefix
          break;
        }
        next.push_back(l);
      }
      if (divisible) break;  // larger exponents keep every current divisor
      total += walk(depth + 1, n, next, bound);
    }
    return total;
  }

  std::shared_ptr<Data> d_;
};

template <coefficient_field K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& a) {
  return a.contains(f);
}

template <coefficient_field K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ring().compatible(b.ring()))
    throw structural_error("ideal sum across different ambient rings");
  std::vector<Polynomial<K>> gens = a.generators();
  const auto& bg = b.generators();
  gens.insert(gens.end(), bg.begin(), bg.end());
  return Ideal<K>(a.ring(), std::move(gens));
}

// Product ideal, generated by the pairwise generator products (deduplicated;
// minimalized when everything is monomial).
template <coefficient_field K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ring().compatible(b.ring()))
    throw structural_error("ideal product across different ambient rings");
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal<K>(a.ring(), std::move(gens));
}

// A^n with A^0 = (1).
template <coefficient_field K>
Ideal<K> ideal_power(const Ideal<K>& a, int n) {
  if (n < 0) throw precondition_error("negative ideal power");
  Ideal<K> acc = Ideal<K>::unit(a.ring());
  for (int i = 0; i < n; ++i) acc = ideal_product(acc, a);
  return acc;
}

namespace detail {

template <coefficient_field K>
Polynomial<K> lift_prepend(const Polynomial<K>& f, std::size_t extra) {
  Polynomial<K> out(f.nvars() + extra);
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(extra, 0);
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

template <coefficient_field K>
Polynomial<K> lift_append(const Polynomial<K>& f, std::size_t extra) {
  Polynomial<K> out(f.nvars() + extra);
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(m.exponents());
    e.insert(e.end(), extra, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

template <coefficient_field K>
Polynomial<K> drop_leading_vars(const Polynomial<K>& f, std::size_t count) {
  Polynomial<K> out(f.nvars() - count);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < count; ++i)
      if (m.exponent(i) != 0)
        throw structural_error("polynomial still involves an eliminated variable");
    std::vector<std::uint32_t> e(m.exponents().begin() + count, m.exponents().end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace detail

// A with the first drop_count variables eliminated: A cap k[remaining vars],
// returned as an ideal of the smaller ring. The variables to drop must occupy
// the leading block.
template <coefficient_field K>
Ideal<K> eliminate(const Ideal<K>& a, std::size_t drop_count) {
  if (drop_count == 0) return a;
  if (drop_count > a.ring().nvars)
    throw precondition_error("eliminating more variables than the ring has");
  const GroebnerBasis<K>& gb = a.groebner(MonomialOrder::elimination(drop_count));
  Ring small = a.ring().drop_leading(drop_count);
  std::vector<Polynomial<K>> kept;
  for (const auto& f : gb.polys) {
    const Monomial& lm = f.leading_monomial(gb.order);
    bool free = true;
    for (std::size_t i = 0; i < drop_count; ++i) free = free && lm.exponent(i) == 0;
    if (free) kept.push_back(detail::drop_leading_vars(f, drop_count));
  }
  if (kept.empty()) return Ideal<K>::zero(small);
  return Ideal<K>::with_known_basis(small, std::move(kept));
}

// A cap B via the single auxiliary variable t: eliminate t from t*A + (1-t)*B.
template <coefficient_field K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ring().compatible(b.ring()))
    throw structural_error("ideal intersection across different ambient rings");
  const Ring& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>::zero(ring);
  Ring scratch = ring.prepend({"@t"});
  Polynomial<K> t = Polynomial<K>::variable(scratch, 0);
  Polynomial<K> one_minus_t =
      Polynomial<K>::constant(scratch.nvars, field_one<K>(scratch.field)) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * detail::lift_prepend(f, 1));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * detail::lift_prepend(g, 1));
  Ideal<K> graph(scratch, std::move(gens));
  Ideal<K> result = eliminate(graph, 1);
  // rebind to the caller's ring so variable names survive
  return result.is_zero_ideal() ? Ideal<K>::zero(ring)
                                : Ideal<K>::with_known_basis(ring, result.generators());
}

// g / f for an exact polynomial division; non-exactness is an internal
// invariant violation at every call site.
template <coefficient_field K>
Polynomial<K> exact_division(const Polynomial<K>& g, const Polynomial<K>& f) {
  if (f.is_zero()) throw precondition_error("division by the zero polynomial");
  MonomialOrder ord = MonomialOrder::degrevlex();
  detail::TermVec<K> fv = detail::to_ordered(f, ord);
  detail::TermVec<K> rest = detail::to_ordered(g, ord);
  Polynomial<K> q(g.nvars());
  while (!rest.empty()) {
    if (!fv[0].first.divides(rest[0].first))
      throw invariant_violation("non-exact polynomial division");
    K c = rest[0].second / fv[0].second;
    Monomial s = rest[0].first.quotient_by(fv[0].first);
    q.add_term(s, c);
    rest = detail::merge_axpy(rest, 0, c, s, fv, ord);
  }
  return q;
}

// A : f = { g : g f in A }, computed as (A cap (f)) / f.
template <coefficient_field K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw precondition_error("colon by the zero polynomial");
  Ideal<K> principal(a.ring(), {f});
  Ideal<K> inter = ideal_intersection(a, principal);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : inter.generators()) gens.push_back(exact_division(g, f));
  if (gens.empty()) return Ideal<K>::zero(a.ring());
  return Ideal<K>(a.ring(), std::move(gens));
}

// A : B = intersection of A : f over the generators f of B.
template <coefficient_field K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Ideal<K>& b) {
  if (b.is_zero_ideal()) return Ideal<K>::unit(a.ring());
  bool first = true;
  Ideal<K> acc;
  for (const auto& f : b.generators()) {
    Ideal<K> c = ideal_colon(a, f);
    acc = first ? c : ideal_intersection(acc, c);
    first = false;
  }
  return acc;
}

template <coefficient_field K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  return a.contains(b) && b.contains(a);
}

}  // namespace blowup
