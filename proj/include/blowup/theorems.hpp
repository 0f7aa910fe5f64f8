#pragma once

#include <string>
#include <vector>

#include "blowup/bigraded.hpp"
#include "blowup/depth.hpp"

namespace blowup {

enum class Verdict { PASS, FAIL, NOT_APPLICABLE };

std::string verdict_str(Verdict v);

struct TheoremCheck {
  std::string name;
  Verdict verdict = Verdict::NOT_APPLICABLE;
  std::string detail;
};

// Evaluate every depth statement whose hypothesis the pair satisfies, against
// the certified depth. Each check returns PASS, FAIL or NOT_APPLICABLE; a
// FAIL means a proved statement failed on computed data, which signals either
// an implementation bug or an unlucky depth search (the depth is certified
// from below only), so callers must abort and surface the detail text.
std::vector<TheoremCheck> verify_theorems(const BigradedResult& table,
                                          const HilbertResult& hilbert,
                                          const DepthResult& depth);

bool any_failure(const std::vector<TheoremCheck>& checks);

// The blowup ring sits one step above the graded ring when the latter is not
// Cohen-Macaulay; beyond that only a bound is reported.
std::string rees_depth_statement(const DepthResult& depth);

}  // namespace blowup
