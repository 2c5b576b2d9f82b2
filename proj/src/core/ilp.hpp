#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace omega {

enum class Sense { Maximize, Minimize };
enum class Relation { Eq, Le, Ge };

struct LinearConstraint {
  std::vector<std::int64_t> coeffs;  // length num_vars
  Relation rel = Relation::Eq;
  std::int64_t rhs = 0;
};

struct VarBound {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// A bounded pure-integer linear program. Every variable carries finite
/// integer bounds, so unboundedness cannot occur.
struct IntegerProgram {
  Sense sense = Sense::Maximize;
  std::vector<std::int64_t> objective;
  std::vector<VarBound> bounds;
  std::vector<LinearConstraint> constraints;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class SolveStatus { Optimal, Infeasible };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<std::int64_t> solution;  // set when Optimal
  std::int64_t value = 0;              // set when Optimal
};

struct SolveLimits {
  /// Explored-node cap; LimitExceeded is thrown when it is hit.
  std::uint64_t node_cap = 100'000'000;
  /// Optional cutoff in the maximize sense: subtrees that cannot beat this
  /// value are pruned, and Infeasible then means "no solution above the
  /// floor". Leave unset for the plain exact solve.
  std::optional<std::int64_t> objective_floor;
};

/// Exact depth-first branch and bound. Variables are branched in index order
/// and domain values in increasing order, so among all optimal solutions the
/// lexicographically smallest vector is returned. Deterministic.
SolveOutcome solve(const IntegerProgram& ip, const SolveLimits& limits = {});

/// Human-readable dump, one constraint per line. Debugging aid only.
std::string format_program(const IntegerProgram& ip);

}  // namespace omega
