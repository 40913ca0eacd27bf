#ifndef SEMISPACE_COMMANDS_HPP
#define SEMISPACE_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "semispace/json_io.hpp"

namespace semispace {

/**
 * Parsed problem description shared by every subcommand: the matrix whose
 * rows span L, the inverted set I (1-based in JSON), and optional weight
 * vector, translation vector and seed. A missing w defaults to (1, …, n);
 * a missing u is sampled from the seed.
 */
struct ProblemInput {
  QMatrix matrix;
  SmallSet i_set = 0;
  std::optional<QVector> w;
  std::optional<QVector> u;
  std::uint64_t seed = 1;

  int n() const { return matrix.col_count(); }
  QVector weight_or_default() const;
  QVector offset_or_sampled() const;
};

ProblemInput parse_problem(const Json& j);

struct CommandOptions {
  double tol = 1e-8;        // residual threshold for recovered points
  double newton_tol = 1e-10;
  int trials = 5;
  std::optional<std::string> svg_path;
};

Json cmd_matroid(const ProblemInput& in);
Json cmd_complex(const ProblemInput& in);
Json cmd_degree(const ProblemInput& in);
Json cmd_supports(const ProblemInput& in);
Json cmd_verify_ugb(const ProblemInput& in, const CommandOptions& opts);
Json cmd_regions(const ProblemInput& in, const CommandOptions& opts);
Json cmd_realpoints(const ProblemInput& in, const CommandOptions& opts);

// Full pipeline; throws ConsistencyError when the three counts of the main
// census identity disagree.
Json cmd_report(const ProblemInput& in, const CommandOptions& opts);

}  // namespace semispace

#endif
