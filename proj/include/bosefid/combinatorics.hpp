// Copyright 2026 The bosefid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSEFID_COMBINATORICS_HPP
#define BOSEFID_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bosefid {

/// Largest N for which S_N is enumerated explicitly.
inline constexpr int kMaxPermutationDegree = 8;

/// Largest N for which SymmetricGroup keeps a dense N! x N! product table.
inline constexpr int kMaxTabulatedDegree = 6;

/// Default cap on the number of output configurations enumerated at once.
inline constexpr std::size_t kDefaultConfigurationCap = 1'000'000;

/// A bijection on {0, ..., n-1}, stored as its image sequence.
///
/// Composition follows function notation: (a * b)(i) == a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless `mapping` is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& mapping() const { return map_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

struct CycleStats {
  int fixed_points = 0;
  int sign = 1;
};

CycleStats cycle_stats(const Permutation& p);

/// n! as an exact integer; n must be in [0, 20].
std::uint64_t factorial(int n);

/// All n! permutations in lexicographic order. Requires 1 <= n <= 8.
std::vector<Permutation> enumerate_permutations(int n);

/// Position of `p` in the lexicographic order (Lehmer code rank).
std::size_t permutation_rank(const Permutation& p);

/// Inverse of permutation_rank.
Permutation permutation_unrank(std::size_t rank, int n);

/// Occupation numbers of M modes by N particles.
class Configuration {
 public:
  Configuration() = default;
  /// Throws ValidationError on negative occupations.
  explicit Configuration(std::vector<int> occupations);

  /// The configuration produced by the given (possibly repeated) mode indices.
  static Configuration from_modes(int modes, std::span<const int> mode_indices);

  int modes() const { return static_cast<int>(occ_.size()); }
  int total() const { return total_; }
  int operator[](int k) const { return occ_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& occupations() const { return occ_; }

  /// Mode of each particle slot, nondecreasing: (2,0,1) -> {0,0,2}.
  std::vector<int> slot_modes() const;

  /// True when no mode holds more than one particle.
  bool is_collision_free() const;

  std::string to_string() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.occ_ == b.occ_;
  }
  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    return a.occ_ <=> b.occ_;
  }

 private:
  std::vector<int> occ_;
  int total_ = 0;
};

/// Product of factorials of the occupations.
std::uint64_t multiplicity(const Configuration& c);

/// Permutations of particle slots that only exchange slots sharing an input
/// mode, in lexicographic order. Size equals multiplicity(c).
std::vector<Permutation> young_subgroup(const Configuration& c);

/// All weak compositions of `particles` into `modes` parts. The order is
/// reverse lexicographic: (2,0), (1,1), (0,2). Throws SizeLimitError when the
/// count would exceed `cap`.
std::vector<Configuration> enumerate_output_configurations(
    int modes, int particles, std::size_t cap = kDefaultConfigurationCap);

/// Binomial coefficient C(n, k) as a double (exact below 2^53).
double binomial(int n, int k);

/// Distinct orderings of the nondecreasing mode multiset of `c`, in
/// lexicographic order. There are N!/multiplicity(c) of them.
std::vector<std::vector<int>> distinct_mode_tuples(const Configuration& c);

/// Cached view of S_N indexed by lexicographic rank.
///
/// For N <= kMaxTabulatedDegree the relative product rank(a * b^-1) is a
/// table lookup; above that it is computed on demand.
class SymmetricGroup {
 public:
  /// Shared instance for degree n in [1, 8]; thread-safe.
  static const SymmetricGroup& of(int n);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t rank) const { return elements_[rank]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::size_t inverse(std::size_t rank) const { return inverse_[rank]; }
  /// rank(element(a) * element(b)^-1).
  std::size_t relative(std::size_t a, std::size_t b) const;
  /// rank(element(a) * element(b)).
  std::size_t compose(std::size_t a, std::size_t b) const {
    return relative(a, inverse_[b]);
  }

 private:
  explicit SymmetricGroup(int n);

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> relative_;
};

}  // namespace bosefid

#endif  // BOSEFID_COMBINATORICS_HPP
