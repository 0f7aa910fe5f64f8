#include "blowup/report_json.hpp"

#include <iomanip>
#include <sstream>

namespace blowup {

using nlohmann::ordered_json;

namespace {

ordered_json check_json(const TheoremCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["verdict"] = verdict_str(c.verdict);
  j["detail"] = c.detail;
  return j;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_numbers(const std::vector<long long>& vals, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vals[i]);
  }
  return out;
}

class TextWriter {
public:
  void kv(const std::string& label, const std::string& value) {
    out_ << std::left << std::setw(19) << label << value << "\n";
  }
  void line(const std::string& s) { out_ << s << "\n"; }
  void blank() { out_ << "\n"; }
  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

void render_table(TextWriter& w, const TableSection& t) {
  w.blank();
  w.line("row table");
  std::size_t sigma_width = 1;
  for (const auto& row : t.rows)
    for (long long v : row.sigma)
      sigma_width = std::max(sigma_width, std::to_string(v).size());
  std::ostringstream head;
  head << "  " << std::setw(3) << "p" << "  " << std::setw(7) << "lambda" << "  "
       << std::setw(7) << "Delta" << "  " << std::setw(8) << "e0_sigma" << "  "
       << std::setw(6) << "delta" << "  pieces";
  w.line(head.str());
  bool starred = false;
  for (const auto& row : t.rows) {
    std::ostringstream os;
    std::string p = std::to_string(row.p);
    if (row.zero_row) {
      p += "*";
      starred = true;
    }
    os << "  " << std::setw(3) << p << "  " << std::setw(7) << row.lambda << "  "
       << std::setw(7) << row.delta_cap << "  " << std::setw(8) << row.e0_sigma
       << "  " << std::setw(6) << row.delta << "  ";
    for (std::size_t i = 0; i < row.sigma.size(); ++i) {
      if (i) os << " ";
      os << std::setw(static_cast<int>(sigma_width)) << row.sigma[i];
    }
    w.line(os.str());
  }
  if (starred)
    w.line("  * at or past the reduction number; every shown piece recomputed");
  for (const auto& row : t.rows) {
    if (row.zero_row) continue;
    w.kv("  sigma fit, p = " + std::to_string(row.p), row.sigma_fit);
    w.kv("  k fit, p = " + std::to_string(row.p), row.k_fit);
  }
  w.kv("Lambda", std::to_string(t.lambda));
  w.kv("Delta", std::to_string(t.delta_cap));
  w.kv("delta", std::to_string(t.delta));
  w.kv("delta_bar", std::to_string(t.delta_bar));
  w.kv("antidiagonals", "checked m = 1.." + std::to_string(t.identity_window));
}

void render_samples(TextWriter& w, const RawSection& r) {
  w.blank();
  w.line("sampled functions");
  std::size_t width = 2;
  auto widen = [&](const std::vector<long long>& vals) {
    for (long long v : vals) width = std::max(width, std::to_string(v).size());
  };
  widen(r.h0);
  widen(r.h1);
  widen(r.sally);
  width = std::max(width, std::to_string(r.h0.size() - 1).size());
  auto row = [&](const std::string& label, const std::vector<long long>& vals) {
    std::ostringstream os;
    os << "  " << std::left << std::setw(17) << label << std::right;
    for (std::size_t i = 0; i < vals.size(); ++i)
      os << (i ? " " : "") << std::setw(static_cast<int>(width)) << vals[i];
    w.line(os.str());
  };
  std::vector<long long> ns;
  for (std::size_t i = 0; i < r.h0.size(); ++i) ns.push_back(static_cast<long long>(i));
  row("n", ns);
  row("I^n/I^(n+1)", r.h0);
  row("R/I^(n+1)", r.h1);
  row("I^(n+1)/J^n I", r.sally);
}

void render_oracle(TextWriter& w, const OracleSection& o) {
  w.blank();
  w.line("lattice cross-check");
  std::size_t label_width = 8;
  for (const auto& row : o.rows) label_width = std::max(label_width, row.label.size());
  std::ostringstream head;
  head << "  " << std::left << std::setw(static_cast<int>(label_width)) << "quotient"
       << std::right << "  " << std::setw(9) << "truncated" << "  " << std::setw(7)
       << "lattice";
  w.line(head.str());
  for (const auto& row : o.rows) {
    std::ostringstream os;
    os << "  " << std::left << std::setw(static_cast<int>(label_width)) << row.label
       << std::right << "  " << std::setw(9) << row.truncated << "  " << std::setw(7)
       << row.lattice;
    w.line(os.str());
  }
  w.kv("comparisons", std::to_string(o.rows.size()) + ", all agree");
}

std::string render_text(const Report& rep) {
  TextWriter w;
  w.kv("command", rep.command);
  w.kv("field", rep.problem.field);
  w.kv("vars", join(rep.problem.vars, ", "));
  w.kv("I", "[" + join(rep.problem.i_gens, ", ") + "]");
  if (rep.problem.j_gens.empty() && rep.problem.auto_reduction) {
    w.kv("J", "auto (not drawn)");
  } else {
    w.kv("J", "[" + join(rep.problem.j_gens, ", ") +
                  (rep.problem.auto_reduction ? "] (auto)" : "]"));
  }
  w.kv("dimension", std::to_string(rep.dimension));
  if (rep.reduction_number >= 0)
    w.kv("reduction number", std::to_string(rep.reduction_number));
  if (rep.seed) w.kv("seed", std::to_string(*rep.seed));

  if (rep.classical) {
    const auto& c = *rep.classical;
    w.blank();
    w.kv("e", join_numbers(c.e, ", "));
    w.kv("h0 fit", c.h0_fit + "  [" + std::to_string(c.samples) + " samples]");
    w.kv("h1 fit", c.h1_fit);
    if (c.sally_zero) {
      w.kv("sally module", "vanishes");
    } else {
      w.kv("sally module", "s = " + join_numbers(c.s, ", ") + " (fit " + c.sally_fit +
                               ", settled from n = " +
                               std::to_string(c.sally_postulation) + ")");
    }
  }
  if (rep.table) render_table(w, *rep.table);
  if (rep.raw) render_samples(w, *rep.raw);
  if (rep.oracle) render_oracle(w, *rep.oracle);
  if (rep.depth) {
    const auto& d = *rep.depth;
    w.blank();
    w.kv("depth", std::to_string(d.depth) + " (dimension " +
                      std::to_string(d.dimension) +
                      (d.cohen_macaulay ? ", Cohen-Macaulay)" : ", not Cohen-Macaulay)"));
    w.kv("regular sequence",
         d.regular_sequence.empty() ? "-" : join(d.regular_sequence, "; "));
    w.kv("depth search", "seed " + std::to_string(d.seed) + ", " +
                             std::to_string(d.trials) + " trials per stage");
    if (!rep.rees.empty()) w.kv("rees", rep.rees);
  }
  if (!rep.checks.empty()) {
    w.blank();
    w.line("checks");
    for (const auto& c : rep.checks) {
      std::ostringstream os;
      os << "  " << std::left << std::setw(15) << verdict_str(c.verdict) << std::setw(22)
         << c.name;
      if (!c.detail.empty()) os << " " << c.detail;
      w.line(os.str());
    }
  }
  w.blank();
  w.kv("status", rep.failed ? "FAIL" : "ok");
  return w.str();
}

}  // namespace

ordered_json report_json(const Report& rep) {
  ordered_json j;
  j["command"] = rep.command;
  ordered_json prob;
  prob["field"] = rep.problem.field;
  prob["vars"] = rep.problem.vars;
  prob["I"] = rep.problem.i_gens;
  prob["J"] = rep.problem.j_gens;
  prob["auto_reduction"] = rep.problem.auto_reduction;
  j["problem"] = std::move(prob);
  j["dimension"] = rep.dimension;
  if (rep.reduction_number >= 0) j["reduction_number"] = rep.reduction_number;
  if (rep.seed) j["seed"] = *rep.seed;
  if (rep.classical) {
    const auto& c = *rep.classical;
    ordered_json s;
    s["e"] = c.e;
    s["h0_fit"] = c.h0_fit;
    s["h1_fit"] = c.h1_fit;
    s["samples"] = c.samples;
    s["sally_zero"] = c.sally_zero;
    s["s"] = c.s;
    s["sally_fit"] = c.sally_fit;
    s["sally_postulation"] = c.sally_postulation;
    j["hilbert"] = std::move(s);
  }
  if (rep.table) {
    const auto& t = *rep.table;
    ordered_json s;
    s["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json r;
      r["p"] = row.p;
      r["lambda"] = row.lambda;
      r["delta_cap"] = row.delta_cap;
      r["e0_sigma"] = row.e0_sigma;
      r["delta"] = row.delta;
      r["sigma"] = row.sigma;
      r["sigma_fit"] = row.sigma_fit;
      r["k_fit"] = row.k_fit;
      r["zero_row"] = row.zero_row;
      s["rows"].push_back(std::move(r));
    }
    s["lambda"] = t.lambda;
    s["delta_cap"] = t.delta_cap;
    s["delta"] = t.delta;
    s["delta_bar"] = t.delta_bar;
    s["identity_window"] = t.identity_window;
    j["table"] = std::move(s);
  }
  if (rep.raw) {
    ordered_json s;
    s["h0"] = rep.raw->h0;
    s["h1"] = rep.raw->h1;
    s["sally"] = rep.raw->sally;
    j["samples"] = std::move(s);
  }
  if (rep.oracle) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.oracle->rows) {
      ordered_json r;
      r["quotient"] = row.label;
      r["truncated"] = row.truncated;
      r["lattice"] = row.lattice;
      rows.push_back(std::move(r));
    }
    j["oracle"] = std::move(rows);
  }
  if (rep.depth) {
    const auto& d = *rep.depth;
    ordered_json s;
    s["depth"] = d.depth;
    s["dimension"] = d.dimension;
    s["cohen_macaulay"] = d.cohen_macaulay;
    s["regular_sequence"] = d.regular_sequence;
    s["seed"] = d.seed;
    s["trials"] = d.trials;
    s["transcript"] = d.transcript;
    j["depth"] = std::move(s);
  }
  if (!rep.checks.empty()) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
  }
  if (!rep.rees.empty()) j["rees"] = rep.rees;
  j["status"] = rep.failed ? "FAIL" : "ok";
  return j;
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_json(report).dump(2) + "\n";
  return render_text(report);
}

}  // namespace blowup
