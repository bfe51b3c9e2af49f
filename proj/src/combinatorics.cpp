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

#include "bosefid/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bosefid/errors.hpp"

namespace bosefid {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation mapping is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    inv.map_[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DimensionError("cannot compose permutations of different degree");
  }
  Permutation r;
  r.map_.resize(b.map_.size());
  for (std::size_t i = 0; i < b.map_.size(); ++i) {
    r.map_[i] = a.map_[static_cast<std::size_t>(b.map_[i])];
  }
  return r;
}

CycleStats cycle_stats(const Permutation& p) {
  CycleStats stats;
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int length = 0;
    for (int i = start; !visited[static_cast<std::size_t>(i)]; i = p(i)) {
      visited[static_cast<std::size_t>(i)] = true;
      ++length;
    }
    if (length == 1) ++stats.fixed_points;
  }
  stats.sign = ((n - cycles) % 2 == 0) ? 1 : -1;
  return stats;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw SizeLimitError("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 1 || n > kMaxPermutationDegree) {
    throw SizeLimitError("permutation degree " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxPermutationDegree) + "]");
  }
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

std::size_t permutation_rank(const Permutation& p) {
  const int n = p.size();
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    // Lehmer digit: later entries smaller than p(i).
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (p(j) < p(i)) ++smaller;
    }
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

Permutation permutation_unrank(std::size_t rank, int n) {
  if (n < 1 || n > 20) throw SizeLimitError("permutation degree out of range");
  if (rank >= factorial(n)) throw ValidationError("permutation rank out of range");
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::size_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> m;
  m.reserve(static_cast<std::size_t>(n));
  for (int d : digits) {
    m.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(m));
}

Configuration::Configuration(std::vector<int> occupations) : occ_(std::move(occupations)) {
  for (int v : occ_) {
    if (v < 0) throw ValidationError("negative occupation number");
    total_ += v;
  }
}

Configuration Configuration::from_modes(int modes, std::span<const int> mode_indices) {
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  for (int k : mode_indices) {
    if (k < 0 || k >= modes) throw ValidationError("mode index out of range");
    ++occ[static_cast<std::size_t>(k)];
  }
  return Configuration(std::move(occ));
}

std::vector<int> Configuration::slot_modes() const {
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(total_));
  for (int k = 0; k < modes(); ++k) {
    slots.insert(slots.end(), static_cast<std::size_t>(occ_[static_cast<std::size_t>(k)]), k);
  }
  return slots;
}

bool Configuration::is_collision_free() const {
  return std::all_of(occ_.begin(), occ_.end(), [](int v) { return v <= 1; });
}

std::string Configuration::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < occ_.size(); ++k) {
    if (k) os << ',';
    os << occ_[k];
  }
  os << ')';
  return os.str();
}

std::uint64_t multiplicity(const Configuration& c) {
  std::uint64_t mu = 1;
  for (int v : c.occupations()) mu *= factorial(v);
  return mu;
}

std::vector<Permutation> young_subgroup(const Configuration& c) {
  const int n = c.total();
  if (n == 0) return {Permutation()};
  const std::vector<int> slots = c.slot_modes();
  std::vector<Permutation> out;
  out.reserve(multiplicity(c));
  for (Permutation& p : enumerate_permutations(n)) {
    bool keeps_modes = true;
    for (int a = 0; a < n && keeps_modes; ++a) {
      keeps_modes = slots[static_cast<std::size_t>(p(a))] == slots[static_cast<std::size_t>(a)];
    }
    if (keeps_modes) out.push_back(std::move(p));
  }
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void compositions(int remaining, std::size_t mode, std::vector<int>& current,
                  std::vector<Configuration>& out) {
  if (mode + 1 == current.size()) {
    current[mode] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[mode] = v;
    compositions(remaining - v, mode + 1, current, out);
  }
}

}  // namespace

std::vector<Configuration> enumerate_output_configurations(int modes, int particles,
                                                           std::size_t cap) {
  if (modes < 1) throw ValidationError("at least one mode is required");
  if (particles < 0) throw ValidationError("particle number must be non-negative");
  const double count = binomial(modes + particles - 1, particles);
  if (count > static_cast<double>(cap)) {
    throw SizeLimitError("output configuration count " + std::to_string(count) +
                         " exceeds cap " + std::to_string(cap));
  }
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> current(static_cast<std::size_t>(modes), 0);
  compositions(particles, 0, current, out);
  return out;
}

std::vector<std::vector<int>> distinct_mode_tuples(const Configuration& c) {
  std::vector<int> tuple = c.slot_modes();
  std::vector<std::vector<int>> out;
  do {
    out.push_back(tuple);
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return out;
}

SymmetricGroup::SymmetricGroup(int n) : degree_(n), elements_(enumerate_permutations(n)) {
  const std::size_t order = elements_.size();
  inverse_.resize(order);
  for (std::size_t r = 0; r < order; ++r) inverse_[r] = permutation_rank(elements_[r].inverse());
  if (n <= kMaxTabulatedDegree) {
    relative_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        relative_[a * order + b] = static_cast<std::uint32_t>(
            permutation_rank(elements_[a] * elements_[inverse_[b]]));
      }
    }
  }
}

std::size_t SymmetricGroup::relative(std::size_t a, std::size_t b) const {
  if (!relative_.empty()) return relative_[a * elements_.size() + b];
  return permutation_rank(elements_[a] * elements_[inverse_[b]]);
}

const SymmetricGroup& SymmetricGroup::of(int n) {
  if (n < 1 || n > kMaxPermutationDegree) {
    throw SizeLimitError("symmetric group degree " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxPermutationDegree) + "]");
  }
  static std::array<std::once_flag, kMaxPermutationDegree + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxPermutationDegree + 1> groups;
  const auto i = static_cast<std::size_t>(n);
  std::call_once(flags[i], [&] { groups[i].reset(new SymmetricGroup(n)); });
  return *groups[i];
}

}  // namespace bosefid
