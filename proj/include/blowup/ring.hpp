#pragma once

#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/numeric.hpp"

namespace blowup {

// Ambient polynomial ring descriptor: variable count, coefficient field and
// display names. Two rings are compatible when variable count and field agree;
// names are cosmetic.
struct Ring {
  std::size_t nvars = 0;
  FieldDesc field;
  std::vector<std::string> names;

  Ring() = default;
  Ring(std::size_t n, FieldDesc f, std::vector<std::string> nm)
      : nvars(n), field(f), names(std::move(nm)) {
    if (names.size() != nvars)
      throw structural_error("ring needs one name per variable");
  }
  static Ring with_default_names(std::size_t n, FieldDesc f, const std::string& stem = "x") {
    std::vector<std::string> nm;
    nm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) nm.push_back(stem + std::to_string(i + 1));
    return Ring(n, f, std::move(nm));
  }

  bool compatible(const Ring& o) const { return nvars == o.nvars && field == o.field; }

  // New ring with extra variables prepended (used for elimination scratch
  // rings; the fresh variables go in the leading block).
  Ring prepend(const std::vector<std::string>& fresh) const {
    std::vector<std::string> nm = fresh;
    nm.insert(nm.end(), names.begin(), names.end());
    return Ring(nvars + fresh.size(), field, std::move(nm));
  }
  // New ring with extra variables appended.
  Ring append(const std::vector<std::string>& fresh) const {
    std::vector<std::string> nm = names;
    nm.insert(nm.end(), fresh.begin(), fresh.end());
    return Ring(nvars + fresh.size(), field, std::move(nm));
  }
  // New ring with the first `count` variables dropped.
  Ring drop_leading(std::size_t count) const {
    if (count > nvars) throw structural_error("dropping more variables than the ring has");
    return Ring(nvars - count,
                field,
                std::vector<std::string>(names.begin() + count, names.end()));
  }
};

}  // namespace blowup
