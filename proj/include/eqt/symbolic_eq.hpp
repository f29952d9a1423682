#pragma once

// Symbolic extended quotients of compact tori by products of symmetric
// groups: one component per conjugacy class, each a product of symmetric
// powers of the circle.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqt/errors.hpp"
#include "eqt/partitions.hpp"

namespace eqt {

struct SymFactor {
  int sym_power;       // r: the factor is Sym^r(T)
  int from_part_size;  // the part size of the cycle type it came from

  auto operator<=>(const SymFactor&) const = default;
};

// One component X^gamma / Z(gamma), as a product of symmetric powers of T.
struct SymProduct {
  std::vector<SymFactor> factors;
  int dimension = 0;  // sum of sym_power over factors

  auto operator<=>(const SymProduct&) const = default;
};

struct EqComponent {
  std::vector<Partition> index;  // one partition per group factor
  SymProduct descriptor;

  auto operator<=>(const EqComponent&) const = default;
};

// The extended quotient of T^d by S_{e_1} x ... x S_{e_r}.
struct EqDecomposition {
  int torus_dimension = 0;
  std::vector<int> group;  // symmetric-group degrees [e_1, ..., e_r]
  std::vector<EqComponent> components;

  auto operator<=>(const EqDecomposition&) const = default;
};

// The component attached to cycle type lambda: the cyclic factors of the
// centralizer act trivially on the fixed-point set, so only the block
// permuters S_{r_i} survive and the component is the product of Sym^{r_i}(T)
// over distinct part sizes n_i.
inline SymProduct component_of(const Partition& lambda) {
  SymProduct c;
  for (const auto& f : centralizer_structure(lambda).factors)
    c.factors.push_back({f.multiplicity, f.cycle_length});
  c.dimension = static_cast<int>(lambda.parts().size());
  return c;
}

// Extended quotient of T^n by S_n: one component per partition of n, in
// reverse-lexicographic order.
inline EqDecomposition decomposition(int n) {
  if (n < 1) throw domain_error("decomposition: n must be positive");
  EqDecomposition d;
  d.torus_dimension = n;
  d.group = {n};
  for (const auto& lambda : enumerate_partitions(n))
    d.components.push_back({{lambda}, component_of(lambda)});
  return d;
}

// Extended quotient of T^{sum e_j} by S_{e_1} x ... x S_{e_r}: the component
// list is the Cartesian product of the single-factor lists, first factor
// outermost; descriptors concatenate blockwise.
inline EqDecomposition eq_of_sym_product(const std::vector<int>& exponents) {
  if (exponents.empty())
    throw domain_error("eq_of_sym_product: empty exponent list");
  EqDecomposition d;
  d.group = exponents;
  for (int e : exponents) {
    if (e < 1) throw domain_error("eq_of_sym_product: exponents must be positive");
    d.torus_dimension += e;
  }
  std::vector<std::vector<Partition>> per_factor;
  for (int e : exponents) per_factor.push_back(enumerate_partitions(e));

  std::vector<Partition> index;
  SymProduct descriptor;
  auto expand = [&](auto&& self, std::size_t j) -> void {
    if (j == per_factor.size()) {
      d.components.push_back({index, descriptor});
      return;
    }
    for (const auto& lambda : per_factor[j]) {
      SymProduct block = component_of(lambda);
      index.push_back(lambda);
      auto saved = descriptor;
      descriptor.factors.insert(descriptor.factors.end(),
                                block.factors.begin(), block.factors.end());
      descriptor.dimension += block.dimension;
      self(self, j + 1);
      descriptor = saved;
      index.pop_back();
    }
  };
  expand(expand, 0);
  return d;
}

namespace detail {
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i)
    b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}
} // namespace detail

// Cardinality of the component on a torus discretized to m circle samples:
// Sym^r of m points is the set of size-r multisets, binomial(m+r-1, r).
inline std::uint64_t discrete_count(const SymProduct& c, int m) {
  if (m < 1) throw domain_error("discrete_count: m must be positive");
  std::uint64_t count = 1;
  for (const auto& f : c.factors)
    count *= detail::binomial(m + f.sym_power - 1, f.sym_power);
  return count;
}

// Text form, e.g. "T x Sym^2(T)"; Sym^1(T) renders as "T".
inline std::string render_text(const SymProduct& c) {
  std::string out;
  for (const auto& f : c.factors) {
    if (!out.empty()) out += " x ";
    if (f.sym_power == 1)
      out += "T";
    else
      out += "Sym^" + std::to_string(f.sym_power) + "(T)";
  }
  return out;
}

inline nlohmann::ordered_json to_json(const SymProduct& c) {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& f : c.factors)
    factors.push_back({{"sym_power", f.sym_power}, {"part_size", f.from_part_size}});
  return factors;
}

inline nlohmann::ordered_json to_json(const EqDecomposition& d) {
  nlohmann::ordered_json j;
  j["n"] = d.torus_dimension;
  j["group"] = d.group;
  auto components = nlohmann::ordered_json::array();
  for (const auto& c : d.components) {
    nlohmann::ordered_json jc;
    if (c.index.size() == 1) {
      jc["partition"] = c.index[0].parts();
    } else {
      auto idx = nlohmann::ordered_json::array();
      for (const auto& lambda : c.index) idx.push_back(lambda.parts());
      jc["index"] = idx;
    }
    jc["factors"] = to_json(c.descriptor);
    jc["dimension"] = c.descriptor.dimension;
    components.push_back(jc);
  }
  j["components"] = components;
  return j;
}

} // namespace eqt
