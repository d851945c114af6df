#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "affcryst/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open input file '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int finish(const affcryst::CommandOutcome& outcome, const std::string& output) {
  if (outcome.code != 0) {
    std::cerr << outcome.output << "\n";
    return outcome.code;
  }
  if (output.empty() || output == "-") {
    std::cout << outcome.output << "\n";
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot open output file '" << output << "'\n";
      return 2;
    }
    out << outcome.output << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures and constructions for affine "
               "crystallographic group representations"};
  app.require_subcommand(1);

  std::string input, output, kind, grid, phi;
  unsigned long seed = 0;
  int parallel = 1;

  auto add_io = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input,-i", input, "input document (JSON), '-' for stdin");
    if (input_required) in->required();
    sub->add_option("--output,-o", output, "output file, default stdout");
    sub->add_option("--seed", seed,
                    "seed for the above-cap randomized nonsingularity sampling");
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide whether a rep/pcrep document is crystallographic");
  add_io(check, true);

  CLI::App* build = app.add_subcommand(
      "build", "construct a simply transitive representation from a lie document");
  add_io(build, true);
  build->add_option("--kind", kind, "two-step | graded | derivation | three-step")
      ->required();

  CLI::App* defspace = app.add_subcommand(
      "defspace", "canonical forms and fixed-locus scans for lattice actions");
  add_io(defspace, false);
  defspace->add_option("--grid", grid, "scan grid, min:max:count per axis");
  defspace->add_option("--phi", phi, "automorphism matrix (inline JSON) for the scan");
  defspace->add_option("--parallel", parallel, "worker threads for grid scans");

  CLI::App* realize = app.add_subcommand(
      "realize", "fixed points, lifts and relation checks for an ext document");
  add_io(realize, true);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed())
    return finish(affcryst::cmd_check(read_input(input)), output);
  if (build->parsed())
    return finish(affcryst::cmd_build(kind, read_input(input), seed), output);
  if (defspace->parsed()) {
    affcryst::DefspaceOptions opts;
    opts.grid = grid;
    opts.phi_json = phi;
    opts.seed = seed;
    opts.parallel = parallel;
    std::string text = grid.empty() ? read_input(input) : std::string();
    return finish(affcryst::cmd_defspace(text, opts), output);
  }
  if (realize->parsed())
    return finish(affcryst::cmd_realize(read_input(input), seed), output);
  return 2;
}
