#include "blowup/theorems.hpp"

#include <algorithm>
#include <sstream>

namespace blowup {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    default: return "NOT_APPLICABLE";
  }
}

namespace {

const char* kRetryHint =
    "; if the invariant table is right this is a depth under-report, re-run with more trials";

TheoremCheck make(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? Verdict::PASS : Verdict::FAIL, detail};
}

TheoremCheck skipped(const std::string& name, const std::string& why) {
  return {name, Verdict::NOT_APPLICABLE, why};
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(const BigradedResult& table,
                                          const HilbertResult& hilbert,
                                          const DepthResult& depth) {
  const int d = depth.dimension;
  const int r = static_cast<int>(table.rows.size());
  const long long e1 = hilbert.e.at(1);
  std::vector<TheoremCheck> out;

  // Delta = 0 and Cohen-Macaulayness determine each other; both certified
  // directions are checked (the depth bound is one-sided, so depth < d with
  // Delta = 0 may also mean the search missed a regular form).
  {
    std::ostringstream os;
    os << "Delta = " << table.delta_cap << ", depth = " << depth.depth << ", d = " << d;
    if (table.delta_cap == 0 && depth.depth != d)
      out.push_back(make("valabrega_valla", false,
                         os.str() + ": Delta = 0 forces depth d" + kRetryHint));
    else if (depth.depth == d && table.delta_cap != 0)
      out.push_back(make("valabrega_valla", false,
                         os.str() + ": certified depth d contradicts Delta > 0"));
    else if (table.delta_cap == 0 || depth.depth == d)
      out.push_back(make("valabrega_valla", true, os.str()));
    else
      out.push_back(skipped("valabrega_valla", os.str()));
  }

  // delta = 0 pushes the depth to at least d-1
  {
    std::ostringstream os;
    os << "delta = " << table.delta << ", depth = " << depth.depth;
    if (table.delta == 0)
      out.push_back(make("huckaba", depth.depth >= d - 1,
                         os.str() + (depth.depth >= d - 1 ? "" : kRetryHint)));
    else
      out.push_back(skipped("huckaba", os.str()));
  }

  // the largest row defect bounds the depth drop: delta_bar <= 1 gives
  // depth >= d - 1 - delta_bar
  {
    std::ostringstream os;
    os << "delta_bar = " << table.delta_bar << ", depth = " << depth.depth;
    if (table.delta_bar <= 1) {
      bool ok = depth.depth >= d - 1 - static_cast<int>(table.delta_bar);
      out.push_back(make("delta_bar_depth_bound", ok, os.str() + (ok ? "" : kRetryHint)));
    } else {
      out.push_back(skipped("delta_bar_depth_bound", os.str()));
    }
  }

  // delta in {0,1} gives depth >= d - 1 - delta
  {
    std::ostringstream os;
    os << "delta = " << table.delta << ", depth = " << depth.depth;
    if (table.delta == 0 || table.delta == 1) {
      bool ok = depth.depth >= d - 1 - static_cast<int>(table.delta);
      out.push_back(make("wang_small_delta", ok, os.str() + (ok ? "" : kRetryHint)));
    } else {
      out.push_back(skipped("wang_small_delta", os.str()));
    }
  }

  // every Delta_p at most one gives depth >= d - 2
  {
    bool rows_small = true;
    for (int p = 1; p < r; ++p) rows_small = rows_small && table.rows[p].delta_cap <= 1;
    std::ostringstream os;
    os << "Delta_p for p >= 1 all <= 1: " << (rows_small ? "yes" : "no")
       << ", depth = " << depth.depth;
    if (rows_small)
      out.push_back(make("guerrieri_rows", depth.depth >= d - 2,
                         os.str() + (depth.depth >= d - 2 ? "" : kRetryHint)));
    else
      out.push_back(skipped("guerrieri_rows", os.str()));
  }

  // a zero run of Delta_1..Delta_(t-1) with a small row generator count
  // Lambda_t = eps <= min(1, d-1) squeezes d-1-eps <= depth <= d
  {
    const long long cap = std::min<long long>(1, d - 1);
    long long best_eps = -1;
    int best_t = 0;
    if (r == 0) {
      best_eps = 0;
      best_t = 1;
    }
    for (int t = 1; t <= r; ++t) {
      bool zeros = true;
      for (int p = 1; p <= t - 1 && zeros; ++p) zeros = table.rows[p].delta_cap == 0;
      if (!zeros) break;
      long long eps = t < r ? table.rows[t].lambda : 0;
      if (eps <= cap && (best_eps < 0 || eps < best_eps)) {
        best_eps = eps;
        best_t = t;
      }
    }
    std::ostringstream os;
    if (best_eps >= 0) {
      os << "t = " << best_t << ", eps = " << best_eps << ", depth = " << depth.depth;
      bool ok = depth.depth >= d - 1 - static_cast<int>(best_eps) && depth.depth <= d;
      out.push_back(make("sally_bound", ok, os.str() + (ok ? "" : kRetryHint)));
    } else {
      os << "no zero run of Delta_p reaches a row with Lambda_t <= " << cap;
      out.push_back(skipped("sally_bound", os.str()));
    }
  }

  // Lambda dominates e_1, which is non-negative
  {
    std::ostringstream os;
    os << "Lambda = " << table.lambda << ", e_1 = " << e1;
    out.push_back(make("huckaba_marley", table.lambda >= e1 && e1 >= 0, os.str()));
  }

  return out;
}

bool any_failure(const std::vector<TheoremCheck>& checks) {
  for (const auto& c : checks)
    if (c.verdict == Verdict::FAIL) return true;
  return false;
}

std::string rees_depth_statement(const DepthResult& depth) {
  std::ostringstream os;
  if (depth.depth < depth.dimension)
    os << "depth of the blowup ring = " << depth.depth + 1
       << " (one above the graded ring when the latter is not Cohen-Macaulay)";
  else
    os << "depth of the blowup ring >= " << depth.dimension
       << " (graded ring is Cohen-Macaulay; direct computation out of scope)";
  return os.str();
}

}  // namespace blowup
