#include "blowup/pipeline.hpp"

namespace blowup {

Command parse_command(const std::string& name) {
  if (name == "invariants") return Command::invariants;
  if (name == "depth") return Command::depth;
  if (name == "verify") return Command::verify;
  if (name == "hilbert") return Command::hilbert;
  if (name == "oracle") return Command::oracle;
  throw precondition_error("unknown command '" + name +
                           "' (expected invariants, depth, verify, hilbert or oracle)");
}

std::string command_name(Command cmd) {
  switch (cmd) {
    case Command::invariants: return "invariants";
    case Command::depth: return "depth";
    case Command::verify: return "verify";
    case Command::hilbert: return "hilbert";
    case Command::oracle: return "oracle";
  }
  throw structural_error("unhandled command");
}

Report run_command(Command cmd, const ProblemSpec& spec, const RunOptions& opts) {
  if (spec.field.prime) return run_pipeline<GFp>(cmd, spec, opts);
  return run_pipeline<Rational>(cmd, spec, opts);
}

}  // namespace blowup
