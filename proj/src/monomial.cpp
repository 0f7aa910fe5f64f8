#include "blowup/monomial.hpp"

namespace blowup {

namespace {

// Graded reverse lexicographic comparison of one contiguous variable block.
// Higher total degree wins; on ties the monomial with the smaller exponent in
// the last differing position is the larger one.
int degrevlex_block(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& ma, const Monomial& mb) const {
  const auto& a = ma.exponents();
  const auto& b = mb.exponents();
  if (a.size() != b.size())
    throw structural_error("comparing monomials from different ambient rings");
  switch (kind) {
    case Kind::degrevlex:
      return degrevlex_block(a, b, 0, a.size());
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      if (block > a.size())
        throw structural_error("elimination block larger than the ambient ring");
      int head = degrevlex_block(a, b, 0, block);
      if (head != 0) return head;
      return degrevlex_block(a, b, block, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "elimination(" + std::to_string(block) + ")";
  }
  return "";
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (names.size() != e_.size())
    throw structural_error("variable name list does not match the ambient ring");
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out;
}

}  // namespace blowup
