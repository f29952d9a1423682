#pragma once

// The Borel component in concrete form: Steinberg-block parameters, the
// parameter-space identity against the symbolic decomposition, the spherical
// component, and monomial symmetric evaluation on torus points.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "eqt/errors.hpp"
#include "eqt/partitions.hpp"
#include "eqt/symbolic_eq.hpp"
#include "eqt/torus_model.hpp"

namespace eqt {

// The component of the Iwahori parameter space for a given block partition:
// the Weyl group permutes blocks of equal size, so each size group of
// multiplicity r contributes Sym^r(T).
inline SymProduct iwahori_component(const Partition& blocks) {
  SymProduct c;
  const auto& parts = blocks.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    c.factors.push_back({static_cast<int>(j - i), parts[i]});
    c.dimension += static_cast<int>(j - i);
    i = j;
  }
  return c;
}

// Checks that blocks |-> cycle type is a bijection from partitions of n onto
// the component index set of decomposition(n), that the two component
// constructions agree, and that the Weyl-group degrees match the symmetric
// powers.
inline bool theorem32_check(int n) {
  if (n < 1) throw domain_error("theorem32_check: n must be positive");
  std::vector<Partition> partitions = enumerate_partitions(n);
  EqDecomposition d = decomposition(n);
  if (partitions.size() != d.components.size()) return false;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const EqComponent& c = d.components[i];
    if (c.index.size() != 1 || c.index[0] != partitions[i]) return false;
    if (iwahori_component(partitions[i]) != c.descriptor) return false;
    // W(M) = prod S_{r_j} against the sym_power multiset
    std::vector<int> weyl;
    for (const auto& f : centralizer_structure(partitions[i]).factors)
      weyl.push_back(f.multiplicity);
    std::vector<int> powers;
    for (const auto& f : c.descriptor.factors) powers.push_back(f.sym_power);
    std::sort(weyl.begin(), weyl.end());
    std::sort(powers.begin(), powers.end());
    if (weyl != powers) return false;
  }
  return true;
}

struct CharacterGroup {
  int size = 1;                // block size of this group
  std::vector<double> angles;  // one per block of that size, in [0,1)
};

// Steinberg-block data: a block partition plus one unramified character
// angle per block, with equal-size blocks unordered.
struct SteinbergParam {
  Partition blocks;
  std::vector<CharacterGroup> characters;  // one group per distinct size
};

// Canonical form under permutation of equal-size blocks: angles sorted
// ascending within each size group. Idempotent; two parameters are
// equivalent iff their normal forms are equal.
inline SteinbergParam normalize_param(SteinbergParam p) {
  const auto cs = centralizer_structure(p.blocks);
  if (p.characters.size() != cs.factors.size())
    throw domain_error("normalize_param: character group count mismatch");
  for (std::size_t i = 0; i < cs.factors.size(); ++i) {
    CharacterGroup& g = p.characters[i];
    if (g.size != cs.factors[i].cycle_length)
      throw domain_error("normalize_param: size group mismatch");
    if (static_cast<int>(g.angles.size()) != cs.factors[i].multiplicity)
      throw domain_error("normalize_param: angle count mismatch");
    for (double a : g.angles)
      if (!(a >= 0.0 && a < 1.0))
        throw domain_error("normalize_param: angle outside [0,1)");
    std::sort(g.angles.begin(), g.angles.end());
  }
  return p;
}

// The spherical component Sym^n(T), which is the ordinary quotient T^n/S_n
// and the final (lambda = 1^n) component of decomposition(n).
inline SymProduct spherical_component(int n) {
  if (n < 1) throw domain_error("spherical_component: n must be positive");
  SymProduct c = component_of(Partition(std::vector<int>(n, 1)));
  if (c != decomposition(n).components.back().descriptor)
    throw internal_error("spherical_component: ordinary quotient mismatch");
  return c;
}

// A weakly decreasing integer vector, a W-orbit representative in Z^n.
struct DominantWeight {
  std::vector<int> exponents;

  explicit DominantWeight(std::vector<int> exps) : exponents(std::move(exps)) {
    for (std::size_t i = 1; i < exponents.size(); ++i)
      if (exponents[i] > exponents[i - 1])
        throw domain_error("DominantWeight: exponents must be weakly decreasing");
  }
};

// Monomial symmetric sum: sum over distinct permutations mu of the weight of
// prod_i z_i^{mu_i}, with z_i the unit complex number of angle p_i.
inline std::complex<double> monomial_symmetric_eval(const DominantWeight& w,
                                                    const AnglePoint& p) {
  if (w.exponents.size() != p.coords.size())
    throw domain_error("monomial_symmetric_eval: dimension mismatch");
  std::vector<int> mu = w.exponents;
  std::sort(mu.begin(), mu.end());
  std::complex<double> total = 0.0;
  do {
    double angle = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) angle += mu[i] * p.coords[i];
    total += std::polar(1.0, 2.0 * std::numbers::pi * angle);
  } while (std::next_permutation(mu.begin(), mu.end()));
  return total;
}

inline nlohmann::ordered_json to_json(const SteinbergParam& p) {
  nlohmann::ordered_json j;
  j["blocks"] = p.blocks.parts();
  auto characters = nlohmann::ordered_json::array();
  for (const auto& g : p.characters)
    characters.push_back({{"size", g.size}, {"angles", g.angles}});
  j["characters"] = characters;
  return j;
}

} // namespace eqt
