#ifndef AFFCRYST_COMMANDS_HPP
#define AFFCRYST_COMMANDS_HPP

#include <string>

namespace affcryst {

/// Exit codes: 0 command ran and the verdict is in the output; 2 parse or
/// usage error; 3 domain invariant violation; 4 internal invariant breach.
struct CommandOutcome {
  int code = 0;
  std::string output;  ///< JSON text (CSV for grid scans)
};

CommandOutcome cmd_check(const std::string& input_text);

/// kind: two-step | graded | derivation | three-step. The input is a lie
/// document; graded reads its "weights", derivation its "derivation".
CommandOutcome cmd_build(const std::string& kind, const std::string& input_text,
                         unsigned long seed = 0);

struct DefspaceOptions {
  std::string grid;      ///< "min:max:count" per axis; empty = canonical form mode
  std::string phi_json;  ///< automorphism matrix as inline JSON (grid mode)
  unsigned long seed = 0;
  int parallel = 1;
};

CommandOutcome cmd_defspace(const std::string& input_text,
                            const DefspaceOptions& opts);

CommandOutcome cmd_realize(const std::string& input_text,
                           unsigned long seed = 0);

}  // namespace affcryst

#endif
