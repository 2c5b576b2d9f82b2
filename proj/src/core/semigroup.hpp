#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/errors.hpp"

namespace omega {

/// A factorization vector together with the element it factors.
struct FactorizationVector {
  std::vector<std::int64_t> coords;
  std::int64_t value = 0;
};

/// A numerical semigroup S = <n_1, ..., n_p>, stored by its unique minimal
/// generating system (sorted ascending) together with the Apery table of the
/// multiplicity n_1, so that membership queries are O(1).
///
/// The constructor sorts and deduplicates the input, discards every generator
/// that is a nonnegative integer combination of the others, and rejects inputs
/// whose gcd is not 1. Instances are immutable and safe to share across
/// threads.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<std::int64_t> raw_generators);

  const std::vector<std::int64_t>& generators() const { return gens_; }

  /// Embedding dimension p (size of the minimal generating system).
  int dim() const { return static_cast<int>(gens_.size()); }

  std::int64_t multiplicity() const { return gens_.front(); }

  /// Largest integer not in S; -1 when S is all of the nonnegative integers.
  std::int64_t frobenius() const { return frobenius_; }

  /// apery()[r] is the least element of S congruent to r modulo the
  /// multiplicity, for r in [0, multiplicity).
  const std::vector<std::int64_t>& apery() const { return apery_; }

  bool contains(std::int64_t value) const;

  /// Index of `value` in the minimal generating system, or -1.
  int generator_index(std::int64_t value) const;

  /// All x in Z_+^p with sum_i generators()[i] * x[i] == value.
  /// Empty exactly when value is not in S. Sorted lexicographically by coords.
  std::vector<FactorizationVector> factorizations(std::int64_t value) const;

 private:
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> apery_;
  std::int64_t frobenius_ = -1;
};

std::int64_t weighted_value(const NumericalSemigroup& sg,
                            std::span<const std::int64_t> coords);

}  // namespace omega
