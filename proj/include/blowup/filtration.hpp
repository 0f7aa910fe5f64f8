#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "blowup/local_length.hpp"

namespace blowup {

// Uniform draw from [0, n). std::mt19937_64 output is pinned by the standard,
// but the standard distributions are not, so rejection sampling keeps every
// seeded run byte-for-byte reproducible across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw precondition_error("uniform draw from an empty range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

// Working state for one (I, J) pair: power ladders, mixed products J^i I^p and
// a length memo, all shared so Groebner bases are computed once per ideal.
// Construction verifies that J is a reduction of I at the origin and records
// the reduction number r = least n with I^(n+1) = J I^n locally.
template <coefficient_field K>
class PairContext {
public:
  PairContext(Ideal<K> i, Ideal<K> j, int r_max = 30, int length_cap = 60)
      : i_(std::move(i)), j_(std::move(j)), r_max_(r_max), length_cap_(length_cap) {
    const Ring& r = i_.ring();
    if (!r.compatible(j_.ring()))
      throw structural_error("ideal and reduction live in different ambient rings");
    if (r.nvars == 0) throw precondition_error("the ambient ring needs at least one variable");
    if (!is_locally_m_primary(i_, length_cap_))
      throw precondition_error("the ideal is not primary to the origin");
    if (j_.generators().size() != r.nvars)
      throw precondition_error("a minimal reduction needs exactly one generator per ring variable");
    if (!i_.contains(j_)) throw precondition_error("the reduction is not contained in the ideal");
    r_ = verify_reduction();
  }

  const Ring& ring() const { return i_.ring(); }
  const Ideal<K>& ideal() const { return i_; }
  const Ideal<K>& reduction() const { return j_; }
  int dimension() const { return static_cast<int>(i_.ring().nvars); }
  int reduction_number() const { return r_; }
  int length_cap() const { return length_cap_; }

  const Ideal<K>& ipow(int n) { return power(ipows_, i_, n); }
  const Ideal<K>& jpow(int n) { return power(jpows_, j_, n); }

  // J^i I^p as one shared object per (i, p), so its Groebner cache is reused
  const Ideal<K>& mixed(int i, int p) {
    if (i < 0 || p < 0) throw precondition_error("negative power in a mixed product");
    if (i == 0) return ipow(p);
    if (p == 0) return jpow(i);
    auto key = std::make_pair(i, p);
    auto it = mixed_.find(key);
    if (it == mixed_.end())
      it = mixed_.emplace(key, ideal_product(jpow(i), ipow(p))).first;
    return it->second;
  }

  // memoized local length of a/b
  long long length(const Ideal<K>& a, const Ideal<K>& b) {
    auto key = std::make_pair(a.identity(), b.identity());
    auto it = lengths_.find(key);
    if (it == lengths_.end())
      it = lengths_.emplace(key, local_length_value(a, b, length_cap_)).first;
    return it->second;
  }

private:
  const Ideal<K>& power(std::vector<Ideal<K>>& ladder, const Ideal<K>& base, int n) {
    if (n < 0) throw precondition_error("negative ideal power");
    if (ladder.empty()) ladder.push_back(Ideal<K>::unit(i_.ring()));
    while (static_cast<int>(ladder.size()) <= n)
      ladder.push_back(ideal_product(ladder.back(), base));
    return ladder[static_cast<std::size_t>(n)];
  }

  // least r with I^(r+1) = J I^r locally, re-checked at r+1; equality at one
  // step propagates upward by multiplying with I, so the double check guards
  // the computation rather than the algebra
  int verify_reduction() {
    for (int n = 0; n <= r_max_; ++n) {
      if (length(ipow(n + 1), mixed(1, n)) == 0) {
        if (length(ipow(n + 2), mixed(1, n + 1)) != 0)
          throw invariant_violation("reduction equality must persist one step up");
        return n;
      }
    }
    std::ostringstream msg;
    msg << "not certified as a reduction: I^(n+1) != J I^n at the origin for every n <= "
        << r_max_ << " (raise the bound if the reduction number may be larger)";
    throw precondition_error(msg.str());
  }

  Ideal<K> i_, j_;
  int r_max_;
  int length_cap_;
  int r_ = -1;
  std::vector<Ideal<K>> ipows_, jpows_;
  std::map<std::pair<int, int>, Ideal<K>> mixed_;
  std::map<std::pair<const void*, const void*>, long long> lengths_;
};

// Draw one candidate reduction: one generic combination of the generators of
// I per ring variable. Over the rationals the scalars come from a range of
// 10001 values, wide enough that d generic draws miss every bad locus in
// practice; over F_p they cover the whole field.
template <coefficient_field K>
Ideal<K> draw_reduction_candidate(const Ideal<K>& i, std::mt19937_64& rng) {
  const Ring& ring = i.ring();
  const auto& gens = i.generators();
  std::vector<Polynomial<K>> combos;
  for (std::size_t row = 0; row < ring.nvars; ++row) {
    Polynomial<K> f(ring.nvars);
    for (const auto& g : gens) {
      K c;
      if constexpr (std::is_same_v<K, Rational>) {
        long long v = static_cast<long long>(uniform_below(rng, 10001)) - 5000;
        c = make_scalar<K>(ring.field, v);
      } else {
        c = make_scalar<K>(ring.field, static_cast<long long>(uniform_below(rng, ring.field.p)));
      }
      f = f + c * g;
    }
    combos.push_back(std::move(f));
  }
  return Ideal<K>(ring, std::move(combos));
}

// Find a minimal reduction of I by seeded random search and return the
// verified pair context. Every attempt and its failure reason go into the
// transcript of the error thrown when all retries are spent.
template <coefficient_field K>
PairContext<K> auto_reduction_context(const Ideal<K>& i, std::uint64_t seed, int r_max = 30,
                                      int retries = 5, int length_cap = 60) {
  if (!is_locally_m_primary(i, length_cap))
    throw precondition_error("the ideal is not primary to the origin");
  std::mt19937_64 rng(seed);
  std::ostringstream transcript;
  transcript << "seed " << seed << ", " << retries << " attempts\n";
  for (int attempt = 1; attempt <= retries; ++attempt) {
    Ideal<K> j = draw_reduction_candidate(i, rng);
    transcript << "attempt " << attempt << ": J = [";
    for (std::size_t g = 0; g < j.generators().size(); ++g) {
      if (g) transcript << ", ";
      transcript << j.generators()[g].str(i.ring().names);
    }
    transcript << "]";
    try {
      PairContext<K> ctx(i, std::move(j), r_max, length_cap);
      return ctx;
    } catch (const error& e) {
      transcript << " rejected: " << e.what() << "\n";
    }
  }
  throw generation_error("no random candidate verified as a minimal reduction",
                         transcript.str());
}

}  // namespace blowup
