#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "blowup/report_json.hpp"

using namespace blowup;
using nlohmann::ordered_json;

namespace {

const char* kE2 =
    "field = QQ\n"
    "vars = x, y\n"
    "I = [x^2, x*y, y^2]\n"
    "J = [x^2, y^2]\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string corpus(const std::string& name) {
  return slurp(std::string(BLOWUP_CORPUS_DIR) + "/" + name);
}

int thrown_line(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("problem files parse field, variables and generator lists") {
  ProblemSpec spec = parse_problem(
      "# a comment line\n"
      "field = Fp 32003\n"
      "\n"
      "vars = x, y, z   # trailing comment\n"
      "I = [x^2, x*y, 2*z^2]\n"
      "J = auto\n"
      "seed = 11\n"
      "rmax = 12\n"
      "pmax = 3\n");
  CHECK(spec.field.prime);
  CHECK(spec.field.p == 32003);
  CHECK(spec.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(spec.i_gens.size() == 3);
  CHECK(spec.i_gens[2].text == "2*z^2");
  CHECK(spec.i_gens[2].line == 5);
  CHECK(spec.auto_reduction);
  CHECK(spec.j_gens.empty());
  CHECK(spec.seed == 11);
  CHECK(spec.rmax == 12);
  CHECK(spec.pmax == 3);

  ProblemSpec e2 = parse_problem(kE2);
  CHECK_FALSE(e2.field.prime);
  CHECK_FALSE(e2.auto_reduction);
  CHECK(e2.j_gens.size() == 2);
  CHECK_FALSE(e2.seed.has_value());

  // carriage returns and a final line without a newline
  ProblemSpec crlf = parse_problem(
      "field = QQ\r\nvars = x\r\nI = [x^3]\r\nJ = [x^3]");
  CHECK(crlf.vars == std::vector<std::string>{"x"});
  CHECK(crlf.i_gens[0].text == "x^3");
}

TEST_CASE("problem files reject malformed input with a position") {
  // line 2 has no '='
  CHECK(thrown_line("field = QQ\nvars x, y\nI = [x]\nJ = [x]\n") == 2);
  CHECK(thrown_line("field = ZZ\nvars = x\nI = [x]\nJ = [x]\n") == 1);
  // 32004 = 4 * 3 * 2667 is not prime
  CHECK(thrown_line("field = Fp 32004\nvars = x\nI = [x]\nJ = [x]\n") == 1);
  CHECK(thrown_line("field = Fp 0\nvars = x\nI = [x]\nJ = [x]\n") == 1);
  // duplicate and unknown keys
  CHECK(thrown_line("field = QQ\nfield = QQ\nvars = x\nI = [x]\nJ = [x]\n") == 2);
  CHECK(thrown_line("field = QQ\nvars = x\nI = [x]\nJ = [x]\nring = big\n") == 5);
  // bad variable lists
  CHECK(thrown_line("field = QQ\nvars = x, x\nI = [x]\nJ = [x]\n") == 2);
  CHECK(thrown_line("field = QQ\nvars = x, 2y\nI = [x]\nJ = [x]\n") == 2);
  CHECK(thrown_line("field = QQ\nvars = x,\nI = [x]\nJ = [x]\n") == 2);
  // bad generator lists
  CHECK(thrown_line("field = QQ\nvars = x\nI = x\nJ = [x]\n") == 3);
  CHECK(thrown_line("field = QQ\nvars = x\nI = [x\nJ = [x]\n") == 3);
  CHECK(thrown_line("field = QQ\nvars = x\nI = []\nJ = [x]\n") == 3);
  CHECK(thrown_line("field = QQ\nvars = x\nI = [x, ]\nJ = [x]\n") == 3);
  CHECK(thrown_line("field = QQ\nvars = x\nI = [0]\nJ = [x]\n") == 3);
  // missing keys report the document, not a line
  CHECK(thrown_line("field = QQ\nvars = x\nI = [x]\n") == 0);
  CHECK(thrown_line("vars = x\nI = [x]\nJ = [x]\n") == 0);

  // polynomial errors land on the file position of the offending entry
  try {
    parse_problem("field = QQ\nvars = x, y\nI = [x^2, x*w]\nJ = [x^2]\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 10);
    CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
  }
  // a coefficient with no inverse in the declared field
  CHECK(thrown_line("field = Fp 5\nvars = x\nI = [1/5*x]\nJ = [x]\n") == 3);
}

TEST_CASE("command names round-trip and bad ones are refused") {
  for (Command c : {Command::invariants, Command::depth, Command::verify,
                    Command::hilbert, Command::oracle})
    CHECK(parse_command(command_name(c)) == c);
  CHECK_THROWS_AS(parse_command("oraculum"), precondition_error);
}

TEST_CASE("invariants command fills the classical and table sections") {
  Report rep = run_command(Command::invariants, parse_problem(kE2));
  CHECK(rep.command == "invariants");
  CHECK(rep.dimension == 2);
  CHECK(rep.reduction_number == 1);
  CHECK_FALSE(rep.seed.has_value());  // nothing random ran
  REQUIRE(rep.classical.has_value());
  CHECK(rep.classical->e == std::vector<long long>{4, 1, 0});
  CHECK(rep.classical->sally_zero);
  CHECK(rep.classical->sally_fit == "0");
  REQUIRE(rep.table.has_value());
  REQUIRE(rep.table->rows.size() == 2);  // live row 0 plus the probe row
  CHECK(rep.table->rows[0].lambda == 1);
  CHECK(rep.table->rows[0].sigma_fit == "binom(n+1,1)");
  CHECK(rep.table->rows[1].zero_row);
  CHECK(rep.table->lambda == 1);
  CHECK(rep.table->delta == 0);
  CHECK_FALSE(rep.depth.has_value());
  CHECK(rep.checks.empty());
  CHECK_FALSE(rep.failed);
}

TEST_CASE("pmax pads the table with recomputed zero rows") {
  RunOptions opts;
  opts.pmax = 3;
  Report rep = run_command(Command::invariants, parse_problem(kE2), opts);
  REQUIRE(rep.table->rows.size() == 4);
  for (int p = 1; p <= 3; ++p) {
    CHECK(rep.table->rows[p].p == p);
    CHECK(rep.table->rows[p].zero_row);
    CHECK(rep.table->rows[p].lambda == 0);
  }
  // a pmax below the reduction number hides nothing
  opts.pmax = 0;
  Report clamped = run_command(Command::invariants, parse_problem(kE2), opts);
  CHECK(clamped.table->rows.size() == 2);
}

TEST_CASE("depth command needs only the ideal") {
  Report rep = run_command(Command::depth, parse_problem(kE2));
  CHECK(rep.reduction_number == -1);
  CHECK_FALSE(rep.classical.has_value());
  REQUIRE(rep.depth.has_value());
  CHECK(rep.depth->depth == 2);
  CHECK(rep.depth->cohen_macaulay);
  CHECK(rep.depth->regular_sequence.size() == 2);
  CHECK(rep.seed == 0);
  CHECK(rep.rees ==
        "depth of the blowup ring >= 2 (graded ring is Cohen-Macaulay; direct "
        "computation out of scope)");
}

TEST_CASE("hilbert command reports the raw sampled functions") {
  Report rep = run_command(Command::hilbert, parse_problem(kE2));
  REQUIRE(rep.raw.has_value());
  REQUIRE(rep.raw->h0.size() >= 4);
  CHECK(rep.raw->h0[0] == 3);  // length(R/I)
  CHECK(rep.raw->h0[1] == 7);
  CHECK(rep.raw->h1[1] == 10);  // length(R/I^2) = length(R/m^4)
  CHECK(rep.raw->sally[0] == 0);
  CHECK(rep.raw->sally[1] == 0);
  CHECK_FALSE(rep.classical.has_value());
}

TEST_CASE("oracle command cross-checks every quotient both ways") {
  Report rep = run_command(Command::oracle, parse_problem(kE2));
  REQUIRE(rep.oracle.has_value());
  CHECK(rep.oracle->rows.size() == 10);
  for (const auto& row : rep.oracle->rows) CHECK(row.truncated == row.lattice);
  CHECK(rep.oracle->rows[0].label == "R/I");
  CHECK(rep.oracle->rows[0].truncated == 3);

  // same pair up to a change of generators, but no longer monomial
  ProblemSpec tilted = parse_problem(
      "field = QQ\n"
      "vars = x, y\n"
      "I = [x^2 - y^2, x*y, y^2]\n"
      "J = [x^2 - y^2, y^2]\n");
  CHECK_THROWS_AS(run_command(Command::oracle, tilted), unsupported_input_error);
}

TEST_CASE("auto reductions are drawn from the seed") {
  ProblemSpec spec = parse_problem(
      "field = QQ\n"
      "vars = x, y\n"
      "I = [x^2, x*y, y^2]\n"
      "J = auto\n");
  RunOptions opts;
  opts.seed = 5;
  Report rep = run_command(Command::invariants, spec, opts);
  CHECK(rep.problem.auto_reduction);
  CHECK(rep.problem.j_gens.size() == 2);
  CHECK(rep.seed == 5);
  CHECK(rep.reduction_number == 1);
  CHECK(rep.classical->e == std::vector<long long>{4, 1, 0});
  CHECK(rep.table->lambda == 1);

  Report again = run_command(Command::invariants, spec, opts);
  CHECK(again.problem.j_gens == rep.problem.j_gens);
}

TEST_CASE("json reports round-trip and text reports carry the verdicts") {
  ProblemSpec spec = parse_problem(corpus("e3.prob"));
  RunOptions opts;
  opts.seed = 7;
  Report rep = run_command(Command::verify, spec, opts);
  CHECK_FALSE(rep.failed);

  std::string json_text = emit_report(rep, ReportFormat::json);
  CHECK(json_text.back() == '\n');
  ordered_json parsed = ordered_json::parse(json_text);
  CHECK(parsed == report_json(rep));
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["table"]["delta_bar"] == 1);
  CHECK(parsed["depth"]["depth"] == 0);

  std::string text = emit_report(rep, ReportFormat::text);
  CHECK(text.find("row table") != std::string::npos);
  CHECK(text.find("huckaba_marley") != std::string::npos);
  CHECK(text.find("status             ok") != std::string::npos);
  CHECK(text.find("reduction number   2") != std::string::npos);

  // a command without randomness emits no seed
  Report inv = run_command(Command::invariants, parse_problem(kE2));
  ordered_json inv_json = ordered_json::parse(emit_report(inv, ReportFormat::json));
  CHECK_FALSE(inv_json.contains("seed"));
  CHECK_FALSE(inv_json.contains("depth"));

  Report raw = run_command(Command::hilbert, parse_problem(kE2));
  ordered_json raw_json = ordered_json::parse(emit_report(raw, ReportFormat::json));
  CHECK(raw_json == report_json(raw));
  Report orc = run_command(Command::oracle, parse_problem(kE2));
  ordered_json orc_json = ordered_json::parse(emit_report(orc, ReportFormat::json));
  CHECK(orc_json == report_json(orc));
}

TEST_CASE("frozen verify reports stay byte-identical") {
  for (const std::string name : {"trivial", "e2", "e3", "mixed"}) {
    CAPTURE(name);
    ProblemSpec spec = parse_problem(corpus(name + ".prob"));
    Report rep = run_command(Command::verify, spec);
    std::string emitted = emit_report(rep, ReportFormat::json);
    CHECK(emitted == slurp(std::string(BLOWUP_FIXTURE_DIR) + "/" + name + ".verify.json"));
  }
}
