#include "core/ilp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace omega {
namespace {

// Per-row magnitude cap: partial sums plus suffix intervals stay within
// int64 when every row satisfies sum_i max|c_i * bound_i| + |rhs| <= 2^60.
constexpr std::int64_t kRowBudget = std::int64_t{1} << 60;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

void validate(const IntegerProgram& ip) {
  const std::size_t n = ip.objective.size();
  if (ip.bounds.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "bounds/objective size mismatch");
  }
  __int128 obj_mag = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = ip.bounds[i];
    if (b.lo > b.hi) {
      throw Error(ErrorCode::InvalidArgument, "variable bound with lo > hi");
    }
    obj_mag += static_cast<__int128>(std::abs(ip.objective[i])) *
               std::max(std::abs(b.lo), std::abs(b.hi));
  }
  if (obj_mag > kRowBudget) {
    throw Error(ErrorCode::Overflow, "objective magnitude exceeds solver budget");
  }
  for (const auto& c : ip.constraints) {
    if (c.coeffs.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "constraint coefficient length mismatch");
    }
    __int128 mag = std::abs(c.rhs);
    for (std::size_t i = 0; i < n; ++i) {
      mag += static_cast<__int128>(std::abs(c.coeffs[i])) *
             std::max(std::abs(ip.bounds[i].lo), std::abs(ip.bounds[i].hi));
    }
    if (mag > kRowBudget) {
      throw Error(ErrorCode::Overflow, "constraint magnitude exceeds solver budget");
    }
  }
}

class Search {
 public:
  Search(const IntegerProgram& ip, const std::vector<std::int64_t>& objective,
         const SolveLimits& limits)
      : ip_(ip), obj_(objective), limits_(limits), n_(ip.num_vars()),
        m_(static_cast<int>(ip.constraints.size())) {
    cutoff_ = limits.objective_floor;

    var_cons_.resize(static_cast<std::size_t>(n_));
    for (int c = 0; c < m_; ++c) {
      for (int k = 0; k < n_; ++k) {
        const std::int64_t a = ip_.constraints[static_cast<std::size_t>(c)]
                                   .coeffs[static_cast<std::size_t>(k)];
        if (a != 0) var_cons_[static_cast<std::size_t>(k)].push_back({c, a});
      }
    }

    // Suffix extreme contributions of variables k..n-1, per constraint row
    // and for the objective.
    suf_min_.assign(static_cast<std::size_t>(m_) * (n_ + 1), 0);
    suf_max_.assign(static_cast<std::size_t>(m_) * (n_ + 1), 0);
    for (int c = 0; c < m_; ++c) {
      for (int k = n_ - 1; k >= 0; --k) {
        const std::int64_t a = ip_.constraints[static_cast<std::size_t>(c)]
                                   .coeffs[static_cast<std::size_t>(k)];
        const auto& b = ip_.bounds[static_cast<std::size_t>(k)];
        const std::int64_t low = a >= 0 ? a * b.lo : a * b.hi;
        const std::int64_t high = a >= 0 ? a * b.hi : a * b.lo;
        suf_min(c, k) = suf_min(c, k + 1) + low;
        suf_max(c, k) = suf_max(c, k + 1) + high;
      }
    }
    obj_suf_max_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int k = n_ - 1; k >= 0; --k) {
      const std::int64_t a = obj_[static_cast<std::size_t>(k)];
      const auto& b = ip_.bounds[static_cast<std::size_t>(k)];
      obj_suf_max_[static_cast<std::size_t>(k)] =
          obj_suf_max_[static_cast<std::size_t>(k) + 1] + (a >= 0 ? a * b.hi : a * b.lo);
    }

    partial_.assign(static_cast<std::size_t>(m_), 0);
    assignment_.assign(static_cast<std::size_t>(n_), 0);
  }

  SolveOutcome run() {
    // Rows with empty support never get filtered at a branching step.
    for (int c = 0; c < m_; ++c) {
      if (suf_min(c, 0) == 0 && suf_max(c, 0) == 0) {
        if (!row_holds(c, 0)) return {SolveStatus::Infeasible, {}, 0};
      }
    }
    branch(0);
    if (!have_best_) return {SolveStatus::Infeasible, {}, 0};
    return {SolveStatus::Optimal, best_, best_value_};
  }

 private:
  std::int64_t& suf_min(int c, int k) {
    return suf_min_[static_cast<std::size_t>(c) * (n_ + 1) + static_cast<std::size_t>(k)];
  }
  std::int64_t& suf_max(int c, int k) {
    return suf_max_[static_cast<std::size_t>(c) * (n_ + 1) + static_cast<std::size_t>(k)];
  }

  bool row_holds(int c, std::int64_t lhs) const {
    const auto& row = ip_.constraints[static_cast<std::size_t>(c)];
    switch (row.rel) {
      case Relation::Eq: return lhs == row.rhs;
      case Relation::Le: return lhs <= row.rhs;
      case Relation::Ge: return lhs >= row.rhs;
    }
    return false;
  }

  void branch(int k) {
    if (++nodes_ > limits_.node_cap) {
      throw Error(ErrorCode::LimitExceeded, "branch-and-bound node cap exceeded");
    }
    if (k == n_) {
      accept();
      return;
    }

    std::int64_t vlo = ip_.bounds[static_cast<std::size_t>(k)].lo;
    std::int64_t vhi = ip_.bounds[static_cast<std::size_t>(k)].hi;

    // Interval-arithmetic filtering of the branching range: a*v plus the
    // extreme range of the still-free variables must be able to meet each
    // constraint through this variable.
    for (const auto& [c, a] : var_cons_[static_cast<std::size_t>(k)]) {
      const auto& row = ip_.constraints[static_cast<std::size_t>(c)];
      if (row.rel != Relation::Ge) {
        const std::int64_t up = row.rhs - partial_[static_cast<std::size_t>(c)] -
                                suf_min(c, k + 1);
        if (a > 0) vhi = std::min(vhi, floor_div(up, a));
        else vlo = std::max(vlo, ceil_div(-up, -a));
      }
      if (row.rel != Relation::Le) {
        const std::int64_t low = row.rhs - partial_[static_cast<std::size_t>(c)] -
                                 suf_max(c, k + 1);
        if (a > 0) vlo = std::max(vlo, ceil_div(low, a));
        else vhi = std::min(vhi, floor_div(-low, -a));
      }
      if (vlo > vhi) return;
    }

    // Optimistic-bound filtering against the incumbent / floor.
    if (cutoff_) {
      const std::int64_t need = *cutoff_ + 1 - partial_obj_ -
                                obj_suf_max_[static_cast<std::size_t>(k) + 1];
      const std::int64_t a = obj_[static_cast<std::size_t>(k)];
      if (a > 0) vlo = std::max(vlo, ceil_div(need, a));
      else if (a < 0) vhi = std::min(vhi, floor_div(-need, -a));
      else if (need > 0) return;
      if (vlo > vhi) return;
    }

    for (const auto& [c, a] : var_cons_[static_cast<std::size_t>(k)]) {
      partial_[static_cast<std::size_t>(c)] += a * vlo;
    }
    partial_obj_ += obj_[static_cast<std::size_t>(k)] * vlo;

    for (std::int64_t v = vlo;; ++v) {
      assignment_[static_cast<std::size_t>(k)] = v;
      bool explore = true;
      if (cutoff_) {
        // The incumbent may have improved since the range was filtered.
        if (partial_obj_ + obj_suf_max_[static_cast<std::size_t>(k) + 1] <= *cutoff_) {
          explore = false;
          if (obj_[static_cast<std::size_t>(k)] <= 0) {
            // Later values cannot do better either.
            for (const auto& [c, a] : var_cons_[static_cast<std::size_t>(k)]) {
              partial_[static_cast<std::size_t>(c)] -= a * v;
            }
            partial_obj_ -= obj_[static_cast<std::size_t>(k)] * v;
            return;
          }
        }
      }
      if (explore) branch(k + 1);
      if (v == vhi) break;
      for (const auto& [c, a] : var_cons_[static_cast<std::size_t>(k)]) {
        partial_[static_cast<std::size_t>(c)] += a;
      }
      partial_obj_ += obj_[static_cast<std::size_t>(k)];
    }

    for (const auto& [c, a] : var_cons_[static_cast<std::size_t>(k)]) {
      partial_[static_cast<std::size_t>(c)] -= a * vhi;
    }
    partial_obj_ -= obj_[static_cast<std::size_t>(k)] * vhi;
  }

  void accept() {
#ifndef NDEBUG
    for (int c = 0; c < m_; ++c) {
      assert(row_holds(c, partial_[static_cast<std::size_t>(c)]));
    }
#endif
    if (cutoff_ && partial_obj_ <= *cutoff_) return;
    best_ = assignment_;
    best_value_ = partial_obj_;
    have_best_ = true;
    cutoff_ = partial_obj_;
  }

  const IntegerProgram& ip_;
  const std::vector<std::int64_t>& obj_;
  const SolveLimits& limits_;
  int n_;
  int m_;

  std::vector<std::vector<std::pair<int, std::int64_t>>> var_cons_;
  std::vector<std::int64_t> suf_min_, suf_max_, obj_suf_max_;
  std::vector<std::int64_t> partial_;
  std::int64_t partial_obj_ = 0;
  std::vector<std::int64_t> assignment_;

  std::vector<std::int64_t> best_;
  std::int64_t best_value_ = 0;
  bool have_best_ = false;
  std::optional<std::int64_t> cutoff_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve(const IntegerProgram& ip, const SolveLimits& limits) {
  validate(ip);
  if (ip.sense == Sense::Maximize) {
    return Search(ip, ip.objective, limits).run();
  }
  // Minimize: negate the objective, solve, negate the value back. The
  // lexicographic tie-break is unaffected.
  std::vector<std::int64_t> negated(ip.objective.size());
  for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -ip.objective[i];
  SolveLimits flipped = limits;
  if (limits.objective_floor) flipped.objective_floor = -*limits.objective_floor;
  SolveOutcome out = Search(ip, negated, flipped).run();
  if (out.status == SolveStatus::Optimal) out.value = -out.value;
  return out;
}

std::string format_program(const IntegerProgram& ip) {
  std::ostringstream os;
  os << (ip.sense == Sense::Maximize ? "max" : "min");
  for (std::size_t i = 0; i < ip.objective.size(); ++i) {
    os << (i == 0 ? " " : " + ") << ip.objective[i] << "*x" << i;
  }
  os << '\n';
  for (const auto& c : ip.constraints) {
    bool first = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      if (c.coeffs[i] == 0) continue;
      os << (first ? "" : " + ") << c.coeffs[i] << "*x" << i;
      first = false;
    }
    if (first) os << "0";
    os << (c.rel == Relation::Eq ? " == " : c.rel == Relation::Le ? " <= " : " >= ")
       << c.rhs << '\n';
  }
  for (std::size_t i = 0; i < ip.bounds.size(); ++i) {
    os << ip.bounds[i].lo << " <= x" << i << " <= " << ip.bounds[i].hi << '\n';
  }
  return os.str();
}

}  // namespace omega
