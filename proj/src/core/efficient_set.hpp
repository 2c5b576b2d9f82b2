#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "core/ilp.hpp"
#include "core/semigroup.hpp"

namespace omega {

/// Minimization-sense dominance: a <= b componentwise and a != b.
bool dominates(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Componentwise-minimal elements of the input, duplicates collapsed.
/// Output is sorted lexicographically.
std::vector<std::vector<std::int64_t>> pareto_minimals(
    std::vector<std::vector<std::int64_t>> points);

/// The constraint set { (x, y) in Z_+^p x Z_+^p :
///     sum_i n_i x_i - sum_i n_i y_i = n_j }
/// restricted to the box x <= big_m, with derived finite bounds on y. Every
/// componentwise-minimal cover vector of n_j lies inside the x-box.
struct FeasibleRegion {
  const NumericalSemigroup* sg = nullptr;
  int target_index = 0;                 // j
  std::vector<std::int64_t> big_m;      // per-coordinate x bounds; big_m[j] == 1
  std::vector<std::int64_t> y_bounds;   // floor((sum_k n_k M_k - n_j) / n_i)
};

FeasibleRegion make_region(const NumericalSemigroup& sg, int target_index,
                           std::vector<std::int64_t> big_m);

/// Ordered collection of minimal cover vectors driving the dominance cuts.
/// Mutually non-dominated and duplicate-free by construction.
class CutPool {
 public:
  void add(std::vector<std::int64_t> point);
  const std::vector<std::vector<std::int64_t>>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<std::vector<std::int64_t>> points_;
};

/// Efficiency-test program for `point`: maximize the total slack psi subject
/// to x_i + psi_i = point_i and the region equality. Variables are ordered
/// (x, y, psi). Optimal slack 0 certifies that `point` is minimal; otherwise
/// the optimal x-part is a minimal vector dominating it.
IntegerProgram build_efficiency_test(const FeasibleRegion& region,
                                     std::span<const std::int64_t> point);

/// Master problem without cuts: maximize sum x_i over the region with
/// x_j = 0. Variables are ordered (x, y).
IntegerProgram build_master(const FeasibleRegion& region);

/// Master problem with one dominance-cut block per pool point: binary
/// activators force at least one coordinate strictly below each stored
/// vector, excluding exactly the region each one dominates. Variables are
/// ordered (x, y, k^1, ..., k^ell).
IntegerProgram build_cut_master(const FeasibleRegion& region, const CutPool& pool);

/// Solves the efficiency test: returns the minimal x-part and the slack total.
/// Slack 0 iff `point` was already minimal.
std::pair<std::vector<std::int64_t>, std::int64_t> project_to_efficient(
    const FeasibleRegion& region, std::span<const std::int64_t> point,
    const SolveLimits& limits = {});

}  // namespace omega
