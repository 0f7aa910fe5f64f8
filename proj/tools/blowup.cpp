#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "blowup/pipeline.hpp"

namespace {

struct Args {
  std::string file;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> pmax;
  std::optional<int> rmax;
  int trials = 4;
};

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("file", args.file, "problem file")->required();
  cmd->add_flag("--json", args.json, "emit the report as JSON");
  cmd->add_option("--seed", args.seed,
                  "seed for reduction generation and the depth search");
  cmd->add_option("--pmax", args.pmax, "show zero rows of the table up to this p");
  cmd->add_option("--rmax", args.rmax, "give up on reduction certification past this n");
  cmd->add_option("--trials", args.trials, "random draws per depth stage")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blow-up algebra invariants of an ideal primary to the origin"};
  app.require_subcommand(1);
  Args args;
  add_common(app.add_subcommand("invariants", "row table and Hilbert coefficients"),
             args);
  add_common(app.add_subcommand("depth", "certified depth of the graded ring"), args);
  add_common(app.add_subcommand("verify",
                                "table, depth, and every depth statement as a verdict"),
             args);
  add_common(app.add_subcommand("hilbert", "raw sampled length functions"), args);
  add_common(app.add_subcommand("oracle",
                                "truncation vs lattice count on monomial input"),
             args);
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(args.file);
  if (!in) {
    std::cerr << "error: cannot open '" << args.file << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    blowup::Command cmd =
        blowup::parse_command(app.get_subcommands().front()->get_name());
    blowup::ProblemSpec spec = blowup::parse_problem(buf.str());
    blowup::RunOptions opts;
    opts.seed = args.seed;
    opts.pmax = args.pmax;
    opts.rmax = args.rmax;
    opts.trials = args.trials;
    blowup::Report report = blowup::run_command(cmd, spec, opts);
    std::cout << blowup::emit_report(
        report, args.json ? blowup::ReportFormat::json : blowup::ReportFormat::text);
    return report.failed ? 1 : 0;
  } catch (const blowup::generation_error& e) {
    std::cerr << "error: " << e.what() << "\n" << e.transcript();
    return 2;
  } catch (const blowup::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
