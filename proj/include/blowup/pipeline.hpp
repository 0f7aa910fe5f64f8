#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/classical.hpp"
#include "blowup/bigraded.hpp"
#include "blowup/depth.hpp"
#include "blowup/problem.hpp"
#include "blowup/theorems.hpp"

namespace blowup {

enum class Command { invariants, depth, verify, hilbert, oracle };

// Throws precondition_error on an unknown name.
Command parse_command(const std::string& name);
std::string command_name(Command cmd);

// Flag-level overrides; a set value wins over the problem file, which wins
// over the defaults (seed 0, rmax 30, no extra rows, 4 depth trials).
struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> rmax;
  std::optional<int> pmax;
  int trials = 4;
};

struct ReportProblem {
  std::string field;
  std::vector<std::string> vars;
  std::vector<std::string> i_gens;
  std::vector<std::string> j_gens;  // as used: the drawn ones under auto
  bool auto_reduction = false;
};

struct ClassicalSection {
  std::vector<long long> e;  // e_0 .. e_d
  std::string h0_fit;
  std::string h1_fit;
  int samples = 0;
  bool sally_zero = false;
  std::vector<long long> s;  // s_0 .. s_{d-1}
  std::string sally_fit;     // "0" when the module vanishes
  int sally_postulation = 0;
};

struct ReportRow {
  int p = 0;
  long long lambda = 0;
  long long delta_cap = 0;
  long long e0_sigma = 0;
  long long delta = 0;
  std::vector<long long> sigma;
  std::string sigma_fit = "0";
  std::string k_fit = "0";
  bool zero_row = false;  // p >= reduction number; pieces recomputed, all zero
};

struct TableSection {
  std::vector<ReportRow> rows;  // p = 0 .. max(r, pmax)
  long long lambda = 0;
  long long delta_cap = 0;
  long long delta = 0;
  long long delta_bar = 0;
  int identity_window = 0;
};

struct DepthSection {
  int depth = 0;
  int dimension = 0;
  bool cohen_macaulay = false;
  std::vector<std::string> regular_sequence;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> transcript;
};

// Raw values of the three sampled functions, index n = 0, 1, ...
struct RawSection {
  std::vector<long long> h0;     // length(I^n / I^(n+1))
  std::vector<long long> h1;     // length(R / I^(n+1))
  std::vector<long long> sally;  // length(I^(n+1) / J^n I)
};

struct OracleRow {
  std::string label;
  long long truncated = 0;
  long long lattice = 0;
};

struct OracleSection {
  std::vector<OracleRow> rows;
};

// Everything a command can emit. Sections are present per command:
// invariants fills classical + table; depth fills depth + rees; verify fills
// all of those plus checks; hilbert fills raw; oracle fills oracle.
struct Report {
  std::string command;
  ReportProblem problem;
  int dimension = 0;
  int reduction_number = -1;          // -1 when the command never computes it
  std::optional<std::uint64_t> seed;  // echoed when randomness was consumed
  std::optional<ClassicalSection> classical;
  std::optional<TableSection> table;
  std::optional<DepthSection> depth;
  std::vector<TheoremCheck> checks;
  std::string rees;
  std::optional<RawSection> raw;
  std::optional<OracleSection> oracle;
  bool failed = false;  // some applicable check did not hold
};

Report run_command(Command cmd, const ProblemSpec& spec, const RunOptions& opts = {});

enum class ReportFormat { text, json };

// Text is a fixed-width ASCII layout; json is a stable-key document ending in
// a newline. Identical input and seed give byte-identical output.
std::string emit_report(const Report& report, ReportFormat format);

namespace detail {

inline std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t nl = s.find('\n', pos);
    if (nl == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

template <coefficient_field K>
std::vector<std::string> render_generators(const Ideal<K>& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) out.push_back(g.str(ideal.ring().names));
  return out;
}

inline DepthSection depth_section(const DepthResult& dr, std::uint64_t seed, int trials) {
  DepthSection out;
  out.depth = dr.depth;
  out.dimension = dr.dimension;
  out.cohen_macaulay = dr.is_cm;
  out.regular_sequence = dr.regular_sequence;
  out.seed = seed;
  out.trials = trials;
  out.transcript = split_lines(dr.transcript);
  return out;
}

inline ClassicalSection classical_section(const HilbertResult& h, const SallyResult& s) {
  ClassicalSection out;
  out.e = h.e;
  out.h0_fit = h.h0.str();
  out.h1_fit = h.h1.str();
  out.samples = h.samples;
  out.sally_zero = s.zero_module;
  out.s = s.s;
  out.sally_fit = s.zero_module ? "0" : s.fit.str();
  out.sally_postulation = s.zero_module ? 0 : s.fit.postulation;
  return out;
}

// Rows past the reduction number are displayed on request (the probe row r
// always, more under pmax) and every displayed piece is recomputed, not
// assumed zero.
template <coefficient_field K>
ReportRow zero_row(PairContext<K>& ctx, int p, const std::vector<long long>* pieces) {
  ReportRow out;
  out.p = p;
  out.zero_row = true;
  if (pieces) {
    out.sigma = *pieces;
  } else {
    for (int i = 0; i < kProbeWidth; ++i)
      out.sigma.push_back(sigma_piece_length(ctx, p, i));
  }
  for (long long v : out.sigma)
    if (v != 0)
      throw invariant_violation("row " + std::to_string(p) +
                                " past the reduction number must vanish");
  out.delta_cap = delta_cap_length(ctx, p);
  if (out.delta_cap != 0)
    throw invariant_violation("Delta_" + std::to_string(p) +
                              " past the reduction number must vanish");
  return out;
}

template <coefficient_field K>
TableSection table_section(PairContext<K>& ctx, const BigradedResult& t, int pmax) {
  TableSection out;
  for (const auto& row : t.rows) {
    ReportRow r;
    r.p = row.p;
    r.lambda = row.lambda;
    r.delta_cap = row.delta_cap;
    r.e0_sigma = row.e0_sigma;
    r.delta = row.delta;
    r.sigma = row.sigma;
    r.sigma_fit = row.sigma_fit.str();
    r.k_fit = row.k_fit.str();
    out.rows.push_back(std::move(r));
  }
  int r = ctx.reduction_number();
  int top = pmax > r ? pmax : r;  // pmax below r never hides live rows
  for (int p = r; p <= top; ++p)
    out.rows.push_back(zero_row(ctx, p, p == r ? &t.probe_row : nullptr));
  out.lambda = t.lambda;
  out.delta_cap = t.delta_cap;
  out.delta = t.delta;
  out.delta_bar = t.delta_bar;
  out.identity_window = t.identity_window;
  return out;
}

template <coefficient_field K>
RawSection raw_section(PairContext<K>& ctx) {
  RawSection out;
  int n_samples = base_sample_count(ctx.dimension(), ctx.reduction_number());
  for (int n = 0; n < n_samples; ++n) {
    out.h0.push_back(hilbert_h0(ctx, n));
    out.h1.push_back(hilbert_h1(ctx, n));
    out.sally.push_back(sally_length(ctx, n));
  }
  return out;
}

// Cross-check the truncation engine against direct lattice-point counts on a
// battery of quotients drawn from the filtration. Any disagreement is an
// engine bug and aborts.
template <coefficient_field K>
OracleSection oracle_section(PairContext<K>& ctx) {
  for (const auto& g : ctx.ideal().generators())
    if (!g.is_monomial_times_scalar())
      throw unsupported_input_error(
          "the lattice-point oracle needs monomial generators; I has " +
          g.str(ctx.ring().names));
  for (const auto& g : ctx.reduction().generators())
    if (!g.is_monomial_times_scalar())
      throw unsupported_input_error(
          "the lattice-point oracle needs monomial generators; J has " +
          g.str(ctx.ring().names));
  OracleSection out;
  auto add = [&](const std::string& label, const Ideal<K>& a, const Ideal<K>& b) {
    long long truncated = ctx.length(a, b);
    long long lattice = monomial_length_oracle(a, b);
    if (truncated != lattice)
      throw invariant_violation("truncation and lattice count disagree on " + label);
    out.rows.push_back({label, truncated, lattice});
  };
  add("R/I", ctx.ipow(0), ctx.ipow(1));
  add("R/J", ctx.ipow(0), ctx.jpow(1));
  add("I/J", ctx.ipow(1), ctx.jpow(1));
  for (int n = 1; n <= 4; ++n)
    add("I^" + std::to_string(n) + "/I^" + std::to_string(n + 1), ctx.ipow(n),
        ctx.ipow(n + 1));
  for (int i = 1; i <= 3; ++i)
    add("J^" + std::to_string(i) + "I/J^" + std::to_string(i + 1), ctx.mixed(i, 1),
        ctx.jpow(i + 1));
  return out;
}

}  // namespace detail

template <coefficient_field K>
Report run_pipeline(Command cmd, const ProblemSpec& spec, const RunOptions& opts) {
  Report rep;
  rep.command = command_name(cmd);
  Ring ring = problem_ring(spec);
  Ideal<K> ideal = build_ideal<K>(ring, spec.i_gens);
  rep.dimension = static_cast<int>(ring.nvars);
  rep.problem.field = ring.field.str();
  rep.problem.vars = ring.names;
  rep.problem.i_gens = detail::render_generators(ideal);
  rep.problem.auto_reduction = spec.auto_reduction;

  std::uint64_t seed = opts.seed ? *opts.seed : spec.seed.value_or(0);
  int rmax = opts.rmax ? *opts.rmax : spec.rmax.value_or(30);
  int pmax = opts.pmax ? *opts.pmax : spec.pmax.value_or(-1);

  if (cmd == Command::depth) {
    // the graded ring depends on I alone; J stays unused here
    GrPresentation<K> pres = gr_presentation(ideal);
    DepthResult dr = depth_gr(pres, seed, opts.trials);
    rep.depth = detail::depth_section(dr, seed, opts.trials);
    rep.rees = rees_depth_statement(dr);
    rep.seed = seed;
    if (!spec.auto_reduction)
      rep.problem.j_gens = detail::render_generators(build_ideal<K>(ring, spec.j_gens));
    return rep;
  }

  std::optional<PairContext<K>> ctx;
  if (spec.auto_reduction) {
    ctx.emplace(auto_reduction_context(ideal, seed, rmax));
    rep.seed = seed;
  } else {
    ctx.emplace(ideal, build_ideal<K>(ring, spec.j_gens), rmax);
  }
  rep.problem.j_gens = detail::render_generators(ctx->reduction());
  rep.reduction_number = ctx->reduction_number();

  if (cmd == Command::hilbert) {
    rep.raw = detail::raw_section(*ctx);
    return rep;
  }
  if (cmd == Command::oracle) {
    rep.oracle = detail::oracle_section(*ctx);
    return rep;
  }

  HilbertResult hilbert = hilbert_coefficients(*ctx);
  SallyResult sally = sally_coefficients(*ctx, hilbert);
  BigradedResult table = bigraded_invariants(*ctx, hilbert, sally);
  rep.classical = detail::classical_section(hilbert, sally);
  rep.table = detail::table_section(*ctx, table, pmax);

  if (cmd == Command::verify) {
    GrPresentation<K> pres = gr_presentation(ideal);
    DepthResult dr = depth_gr(pres, seed, opts.trials);
    rep.depth = detail::depth_section(dr, seed, opts.trials);
    rep.rees = rees_depth_statement(dr);
    rep.seed = seed;
    rep.checks = verify_theorems(table, hilbert, dr);
    rep.failed = any_failure(rep.checks);
  }
  return rep;
}

}  // namespace blowup
