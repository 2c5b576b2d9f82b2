#include "core/efficient_set.hpp"

#include <algorithm>

namespace omega {
namespace {

void check_point_in_box(const FeasibleRegion& region,
                        std::span<const std::int64_t> point) {
  const std::size_t p = region.big_m.size();
  if (point.size() != p) {
    throw Error(ErrorCode::InvalidArgument, "point dimension mismatch");
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (point[i] < 0 || point[i] > region.big_m[i]) {
      throw Error(ErrorCode::InfeasibleInput,
                  "point leaves the region box at coordinate " + std::to_string(i));
    }
  }
}

// Region equality sum n_i x_i - sum n_i y_i = n_j over the first 2p of
// num_vars variables.
LinearConstraint region_row(const FeasibleRegion& region, int num_vars) {
  const auto& gens = region.sg->generators();
  const std::size_t p = gens.size();
  LinearConstraint row;
  row.coeffs.assign(static_cast<std::size_t>(num_vars), 0);
  for (std::size_t i = 0; i < p; ++i) {
    row.coeffs[i] = gens[i];
    row.coeffs[p + i] = -gens[i];
  }
  row.rel = Relation::Eq;
  row.rhs = gens[static_cast<std::size_t>(region.target_index)];
  return row;
}

}  // namespace

bool dominates(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "dominance on vectors of unequal length");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::vector<std::int64_t>> pareto_minimals(
    std::vector<std::vector<std::int64_t>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& cand : points) {
    bool dominated = false;
    for (const auto& other : points) {
      if (&other != &cand && dominates(other, cand)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(cand);
  }
  return out;
}

FeasibleRegion make_region(const NumericalSemigroup& sg, int target_index,
                           std::vector<std::int64_t> big_m) {
  const int p = sg.dim();
  if (target_index < 0 || target_index >= p) {
    throw Error(ErrorCode::InvalidArgument, "target index out of range");
  }
  if (static_cast<int>(big_m.size()) != p) {
    throw Error(ErrorCode::InvalidArgument, "big-M vector dimension mismatch");
  }
  if (big_m[static_cast<std::size_t>(target_index)] != 1) {
    throw Error(ErrorCode::InvalidArgument, "big-M at the target index must be 1");
  }
  std::int64_t weight = 0;
  for (int i = 0; i < p; ++i) {
    if (big_m[static_cast<std::size_t>(i)] < 1) {
      throw Error(ErrorCode::InvalidArgument, "big-M entries must be >= 1");
    }
    weight += sg.generators()[static_cast<std::size_t>(i)] *
              big_m[static_cast<std::size_t>(i)];
  }
  FeasibleRegion region{&sg, target_index, std::move(big_m), {}};
  const std::int64_t budget =
      weight - sg.generators()[static_cast<std::size_t>(target_index)];
  region.y_bounds.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    region.y_bounds[static_cast<std::size_t>(i)] =
        budget / sg.generators()[static_cast<std::size_t>(i)];
  }
  return region;
}

void CutPool::add(std::vector<std::int64_t> point) {
  for (const auto& existing : points_) {
    if (existing == point || dominates(existing, point) || dominates(point, existing)) {
      throw Error(ErrorCode::InvalidArgument,
                  "cut pool points must be distinct and mutually non-dominated");
    }
  }
  points_.push_back(std::move(point));
}

IntegerProgram build_efficiency_test(const FeasibleRegion& region,
                                     std::span<const std::int64_t> point) {
  check_point_in_box(region, point);
  const int p = region.sg->dim();
  const int n = 3 * p;  // (x, y, psi)

  IntegerProgram ip;
  ip.sense = Sense::Maximize;
  ip.objective.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p; ++i) ip.objective[static_cast<std::size_t>(2 * p + i)] = 1;

  ip.bounds.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < p; ++i) {
    ip.bounds[static_cast<std::size_t>(i)] = {0, point[static_cast<std::size_t>(i)]};
    ip.bounds[static_cast<std::size_t>(p + i)] = {0, region.y_bounds[static_cast<std::size_t>(i)]};
    ip.bounds[static_cast<std::size_t>(2 * p + i)] = {0, point[static_cast<std::size_t>(i)]};
  }

  for (int i = 0; i < p; ++i) {  // x_i + psi_i = point_i
    LinearConstraint row;
    row.coeffs.assign(static_cast<std::size_t>(n), 0);
    row.coeffs[static_cast<std::size_t>(i)] = 1;
    row.coeffs[static_cast<std::size_t>(2 * p + i)] = 1;
    row.rel = Relation::Eq;
    row.rhs = point[static_cast<std::size_t>(i)];
    ip.constraints.push_back(std::move(row));
  }
  ip.constraints.push_back(region_row(region, n));
  return ip;
}

IntegerProgram build_master(const FeasibleRegion& region) {
  const int p = region.sg->dim();
  const int n = 2 * p;  // (x, y)

  IntegerProgram ip;
  ip.sense = Sense::Maximize;
  ip.objective.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p; ++i) ip.objective[static_cast<std::size_t>(i)] = 1;

  ip.bounds.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < p; ++i) {
    ip.bounds[static_cast<std::size_t>(i)] = {0, region.big_m[static_cast<std::size_t>(i)]};
    ip.bounds[static_cast<std::size_t>(p + i)] = {0, region.y_bounds[static_cast<std::size_t>(i)]};
  }

  ip.constraints.push_back(region_row(region, n));
  LinearConstraint pin;  // x_j = 0
  pin.coeffs.assign(static_cast<std::size_t>(n), 0);
  pin.coeffs[static_cast<std::size_t>(region.target_index)] = 1;
  pin.rel = Relation::Eq;
  pin.rhs = 0;
  ip.constraints.push_back(std::move(pin));
  return ip;
}

IntegerProgram build_cut_master(const FeasibleRegion& region, const CutPool& pool) {
  if (pool.empty()) {
    throw Error(ErrorCode::EmptyPool, "cut master requires a nonempty pool");
  }
  const int p = region.sg->dim();
  const int ell = static_cast<int>(pool.size());
  const int n = 2 * p + ell * p;  // (x, y, k^1 .. k^ell)

  IntegerProgram ip = build_master(region);
  ip.objective.resize(static_cast<std::size_t>(n), 0);
  ip.bounds.resize(static_cast<std::size_t>(n), VarBound{0, 1});
  for (auto& row : ip.constraints) row.coeffs.resize(static_cast<std::size_t>(n), 0);

  for (int r = 0; r < ell; ++r) {
    const auto& anchor = pool.points()[static_cast<std::size_t>(r)];
    const int base = 2 * p + r * p;
    for (int i = 0; i < p; ++i) {
      // x_i <= k (anchor_i - 1) + M_i (1 - k): the activator k flips the
      // bound from M_i down to anchor_i - 1.
      LinearConstraint row;
      row.coeffs.assign(static_cast<std::size_t>(n), 0);
      row.coeffs[static_cast<std::size_t>(i)] = 1;
      row.coeffs[static_cast<std::size_t>(base + i)] =
          region.big_m[static_cast<std::size_t>(i)] - anchor[static_cast<std::size_t>(i)] + 1;
      row.rel = Relation::Le;
      row.rhs = region.big_m[static_cast<std::size_t>(i)];
      ip.constraints.push_back(std::move(row));
    }
    LinearConstraint at_least_one;  // sum_i k_i >= 1
    at_least_one.coeffs.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < p; ++i) {
      at_least_one.coeffs[static_cast<std::size_t>(base + i)] = 1;
    }
    at_least_one.rel = Relation::Ge;
    at_least_one.rhs = 1;
    ip.constraints.push_back(std::move(at_least_one));
  }
  return ip;
}

std::pair<std::vector<std::int64_t>, std::int64_t> project_to_efficient(
    const FeasibleRegion& region, std::span<const std::int64_t> point,
    const SolveLimits& limits) {
  const SolveOutcome out = solve(build_efficiency_test(region, point), limits);
  if (out.status != SolveStatus::Optimal) {
    throw Error(ErrorCode::InfeasibleInput,
                "point is not feasible for the region");
  }
  const std::size_t p = region.big_m.size();
  std::vector<std::int64_t> minimal(out.solution.begin(),
                                    out.solution.begin() + static_cast<std::ptrdiff_t>(p));
  return {std::move(minimal), out.value};
}

}  // namespace omega
