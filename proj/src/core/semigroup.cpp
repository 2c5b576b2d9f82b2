#include "core/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace omega {
namespace {

// Apery table size cap; inputs at this scale are outside the intended range.
constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 24;

// Keeps every value the downstream integer models can form well inside the
// 64-bit range (see solver big-M bounds).
constexpr std::int64_t kValueBudget = std::int64_t{1} << 54;

const char* kErrorCodeNames[] = {
    "EmptyInput",       "ZeroGenerator", "NonCoprime",
    "Overflow",         "InvalidArgument", "NotAGenerator",
    "InfeasibleInput",  "EmptyPool",     "LimitExceeded",
    "IterationCapExceeded", "BoxTooLarge", "GenerationFailed",
};

// True if target is a nonnegative integer combination of gens.
// gens must be sorted descending; suffix_gcd[i] = gcd(gens[i..]).
bool representable(std::int64_t target, const std::vector<std::int64_t>& gens,
                   std::size_t idx, const std::vector<std::int64_t>& suffix_gcd) {
  if (target == 0) return true;
  if (idx == gens.size()) return false;
  if (target % suffix_gcd[idx] != 0) return false;
  if (idx + 1 == gens.size()) return target % gens[idx] == 0;
  for (std::int64_t m = target / gens[idx]; m >= 0; --m) {
    if (representable(target - m * gens[idx], gens, idx + 1, suffix_gcd)) return true;
  }
  return false;
}

bool representable(std::int64_t target, const std::vector<std::int64_t>& ascending) {
  std::vector<std::int64_t> gens(ascending.rbegin(), ascending.rend());
  std::vector<std::int64_t> suffix_gcd(gens.size());
  std::int64_t g = 0;
  for (std::size_t i = gens.size(); i-- > 0;) {
    g = std::gcd(g, gens[i]);
    suffix_gcd[i] = g;
  }
  return representable(target, gens, 0, suffix_gcd);
}

// Shortest-path values over residues modulo gens[0], arc weights gens[1..].
std::vector<std::int64_t> apery_table(const std::vector<std::int64_t>& gens) {
  const std::int64_t n1 = gens.front();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n1),
                                 std::numeric_limits<std::int64_t>::max());
  dist[0] = 0;
  using Item = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t k = 1; k < gens.size(); ++k) {
      const std::int64_t nd = d + gens[k];
      const std::int64_t nr = (r + gens[k]) % n1;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.push({nd, nr});
      }
    }
  }
  return dist;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  return kErrorCodeNames[static_cast<int>(code)];
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> raw_generators) {
  if (raw_generators.empty()) {
    throw Error(ErrorCode::EmptyInput, "generator list is empty");
  }
  for (std::int64_t g : raw_generators) {
    if (g < 1) {
      throw Error(ErrorCode::ZeroGenerator,
                  "generators must be positive integers");
    }
  }
  std::sort(raw_generators.begin(), raw_generators.end());
  raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                       raw_generators.end());

  std::int64_t g = 0;
  for (std::int64_t v : raw_generators) g = std::gcd(g, v);
  if (g != 1) {
    throw Error(ErrorCode::NonCoprime, "gcd of generators is " + std::to_string(g));
  }

  // Ascending pass: a value is kept iff the already-kept (smaller) values
  // cannot represent it. The kept list is the minimal generating system.
  for (std::int64_t v : raw_generators) {
    if (gens_.empty() || !representable(v, gens_)) gens_.push_back(v);
  }

  const std::int64_t n1 = gens_.front();
  const std::int64_t top = gens_.back();
  if (n1 > kMaxMultiplicity ||
      static_cast<__int128>(n1) * top > kValueBudget) {
    throw Error(ErrorCode::Overflow, "generators too large for exact arithmetic");
  }

  apery_ = apery_table(gens_);
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - n1;

  // Bound on the largest weighted value downstream models can reach
  // (sum_i n_i * M_i with M_i <= ceil((frobenius + 1 + n_j) / n_i)).
  __int128 worst = 0;
  for (std::int64_t v : gens_) worst += v;
  worst += static_cast<__int128>(dim()) * (frobenius_ + 1 + top);
  if (worst > kValueBudget) {
    throw Error(ErrorCode::Overflow, "instance exceeds the exact-arithmetic budget");
  }
}

bool NumericalSemigroup::contains(std::int64_t value) const {
  if (value < 0) return false;
  return value >= apery_[static_cast<std::size_t>(value % gens_.front())];
}

int NumericalSemigroup::generator_index(std::int64_t value) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), value);
  if (it == gens_.end() || *it != value) return -1;
  return static_cast<int>(it - gens_.begin());
}

std::vector<FactorizationVector> NumericalSemigroup::factorizations(
    std::int64_t value) const {
  if (value < 0) {
    throw Error(ErrorCode::InvalidArgument, "factorizations of a negative value");
  }
  const int p = dim();
  std::vector<std::int64_t> prefix_gcd(static_cast<std::size_t>(p));
  std::int64_t g = 0;
  for (int i = 0; i < p; ++i) {
    g = std::gcd(g, gens_[static_cast<std::size_t>(i)]);
    prefix_gcd[static_cast<std::size_t>(i)] = g;
  }

  std::vector<FactorizationVector> out;
  std::vector<std::int64_t> coords(static_cast<std::size_t>(p), 0);
  // Depth-first over coordinates p-1 .. 1 with residual pruning; coordinate 0
  // closes each branch by divisibility.
  auto descend = [&](auto&& self, int i, std::int64_t residual) -> void {
    if (residual % prefix_gcd[static_cast<std::size_t>(i)] != 0) return;
    if (i == 0) {
      coords[0] = residual / gens_[0];
      out.push_back({coords, value});
      return;
    }
    const std::int64_t n = gens_[static_cast<std::size_t>(i)];
    for (std::int64_t m = 0; m * n <= residual; ++m) {
      coords[static_cast<std::size_t>(i)] = m;
      self(self, i - 1, residual - m * n);
    }
    coords[static_cast<std::size_t>(i)] = 0;
  };
  descend(descend, p - 1, value);
  std::sort(out.begin(), out.end(),
            [](const FactorizationVector& a, const FactorizationVector& b) {
              return a.coords < b.coords;
            });
  return out;
}

std::int64_t weighted_value(const NumericalSemigroup& sg,
                            std::span<const std::int64_t> coords) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    total += sg.generators()[i] * coords[i];
  }
  return total;
}

}  // namespace omega
