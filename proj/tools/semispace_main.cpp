#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semispace/commands.hpp"
#include "semispace/errors.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConsistency = 4;
constexpr int kExitResource = 5;

semispace::Json load_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw semispace::InputError("cannot open input file: " + path);
  semispace::Json j;
  try {
    file >> j;
  } catch (const std::exception& e) {
    throw semispace::InputError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semispace: combinatorics, algebra and real geometry of semi-inverted "
               "linear spaces"};
  app.require_subcommand(1);

  std::string input_path;
  semispace::CommandOptions opts;
  std::string svg_path;

  app.add_option("--input", input_path, "problem JSON file")->required();
  app.add_option("--tol", opts.tol, "residual threshold for recovered points");
  app.add_option("--newton-tol", opts.newton_tol, "gradient tolerance for Newton");
  app.add_option("--trials", opts.trials, "weight vectors per UGB verification");
  std::uint64_t seed_override = 0;
  auto* seed_opt = app.add_option("--seed", seed_override, "overrides the input seed");
  auto* svg_opt = app.add_option("--svg", svg_path, "write a 2-D section plot (SVG)");

  const std::string names[] = {"matroid",    "complex", "degree",  "supports",
                               "verify-ugb", "regions", "realpoints", "report"};
  for (const auto& name : names) app.add_subcommand(name)->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    semispace::Json raw = load_input(input_path);
    semispace::ProblemInput in = semispace::parse_problem(raw);
    if (*seed_opt) in.seed = seed_override;
    if (*svg_opt) opts.svg_path = svg_path;

    const std::string cmd = app.get_subcommands().front()->get_name();
    semispace::Json out;
    if (cmd == "matroid") {
      out = semispace::cmd_matroid(in);
    } else if (cmd == "complex") {
      out = semispace::cmd_complex(in);
    } else if (cmd == "degree") {
      out = semispace::cmd_degree(in);
    } else if (cmd == "supports") {
      out = semispace::cmd_supports(in);
    } else if (cmd == "verify-ugb") {
      out = semispace::cmd_verify_ugb(in, opts);
    } else if (cmd == "regions") {
      out = semispace::cmd_regions(in, opts);
    } else if (cmd == "realpoints") {
      out = semispace::cmd_realpoints(in, opts);
    } else {
      out = semispace::cmd_report(in, opts);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const semispace::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const semispace::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const semispace::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const semispace::ResourceCutoff& e) {
    std::cerr << "resource cutoff: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
