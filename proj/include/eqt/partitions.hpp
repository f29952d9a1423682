#pragma once

// Integer partitions, cycle types and centralizer structure in S_n.

#include <compare>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "eqt/errors.hpp"

namespace eqt {

// A partition of n: weakly decreasing positive parts.
class Partition {
public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw domain_error("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw domain_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw domain_error("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct CentralizerFactor {
  int cycle_length;  // n_i, distinct across factors, decreasing
  int multiplicity;  // r_i

  auto operator<=>(const CentralizerFactor&) const = default;
};

// Z(gamma) for gamma of a given cycle type: a product of wreath products
// (Z/n_i wr S_{r_i}), of order prod n_i^{r_i} * r_i!.
struct CentralizerStructure {
  std::vector<CentralizerFactor> factors;
  std::uint64_t order = 0;
};

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw domain_error("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  descend(descend, n, n);
  return out;
}

// Groups equal parts: part size n_i with multiplicity r_i, sizes decreasing.
inline CentralizerStructure centralizer_structure(const Partition& lambda) {
  CentralizerStructure cs;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    cs.factors.push_back({parts[i], static_cast<int>(j - i)});
    i = j;
  }
  cs.order = 1;
  for (const auto& f : cs.factors) {
    for (int k = 0; k < f.multiplicity; ++k)
      cs.order *= static_cast<std::uint64_t>(f.cycle_length);
    cs.order *= factorial(f.multiplicity);
  }
  return cs;
}

// Size of the conjugacy class with this cycle type: n! / |Z(gamma)|.
inline std::uint64_t class_size(const Partition& lambda) {
  return factorial(lambda.n()) / centralizer_structure(lambda).order;
}

} // namespace eqt
