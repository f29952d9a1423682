#pragma once

// The discretized torus (Z/m)^n with its S_n coordinate action, the diagonal
// rotation action, the complex-to-compact retraction, and the harness that
// checks the symbolic decomposition against the brute-force oracle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "eqt/errors.hpp"
#include "eqt/finite_oracle.hpp"
#include "eqt/partitions.hpp"
#include "eqt/symbolic_eq.hpp"

namespace eqt {

// A point of (Z/m)^n.
struct GridPoint {
  int modulus = 1;
  std::vector<int> coords;

  auto operator<=>(const GridPoint&) const = default;
};

// A point of the continuous torus, one angle in [0,1) per coordinate.
struct AnglePoint {
  std::vector<double> coords;
};

using ComplexTorusPoint = std::vector<std::complex<double>>;

namespace detail {

inline int grid_index(const GridPoint& p) {
  int idx = 0;
  for (int c : p.coords) idx = idx * p.modulus + c;
  return idx;
}

inline GridPoint grid_point(int index, int n, int m) {
  GridPoint p{m, std::vector<int>(n)};
  for (int i = n - 1; i >= 0; --i) {
    p.coords[i] = index % m;
    index /= m;
  }
  return p;
}

// Cycle type of a permutation given as image array.
inline Partition cycle_type(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

} // namespace detail

inline constexpr std::uint64_t default_point_budget = 1'000'000;

// S_n acting on (Z/m)^n by permuting coordinates, as an explicit action on
// m^n points with all n! elements, identity first, cycle-type labels attached.
inline FiniteAction build_sn_action(int n, int m,
                                    std::uint64_t budget = default_point_budget) {
  if (n < 1 || m < 1)
    throw domain_error("build_sn_action: n and m must be positive");
  std::uint64_t num_points = 1;
  for (int i = 0; i < n; ++i) {
    num_points *= static_cast<std::uint64_t>(m);
    if (num_points > budget)
      throw resource_error("build_sn_action: point budget exceeded");
  }

  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;

  std::vector<Perm> group;
  std::vector<Perm> action;
  std::vector<Partition> labels;
  do {
    // (sigma.x)_i = x_{sigma^-1(i)}
    std::vector<int> sigma_inv(n);
    for (int i = 0; i < n; ++i) sigma_inv[sigma[i]] = i;
    Perm point_perm(num_points);
    std::vector<int> image(n);
    for (int idx = 0; idx < static_cast<int>(num_points); ++idx) {
      GridPoint p = detail::grid_point(idx, n, m);
      for (int i = 0; i < n; ++i) image[i] = p.coords[sigma_inv[i]];
      point_perm[idx] = detail::grid_index(GridPoint{m, image});
    }
    group.push_back(sigma);
    action.push_back(std::move(point_perm));
    labels.push_back(detail::cycle_type(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  return FiniteAction(static_cast<int>(num_points), std::move(group),
                      std::move(action), std::move(labels));
}

// Shift every coordinate by t.
inline GridPoint diagonal_rotate(const GridPoint& p, int t) {
  GridPoint q = p;
  for (int& c : q.coords) c = ((c + t) % p.modulus + p.modulus) % p.modulus;
  return q;
}

inline AnglePoint diagonal_rotate(const AnglePoint& p, double t) {
  AnglePoint q = p;
  for (double& c : q.coords) {
    c = std::fmod(c + t, 1.0);
    if (c < 0.0) c += 1.0;
  }
  return q;
}

// Deformation retraction of the complex torus onto the compact torus:
// z -> z/|z| coordinatewise, returned as angles in [0,1).
inline AnglePoint retract(const ComplexTorusPoint& z) {
  AnglePoint p;
  for (const auto& c : z) {
    if (std::abs(c) == 0.0)
      throw domain_error("retract: zero coordinate");
    double angle = std::arg(c) / (2.0 * std::numbers::pi);
    angle = std::fmod(angle, 1.0);
    if (angle < 0.0) angle += 1.0;
    p.coords.push_back(angle);
  }
  return p;
}

struct VerifyClass {
  Partition partition;
  std::uint64_t oracle = 0;    // orbit count over the class, by enumeration
  std::uint64_t symbolic = 0;  // discrete_count of the matching component
};

struct VerifyReport {
  int n = 0;
  int m = 0;
  std::vector<VerifyClass> classes;
  std::uint64_t total = 0;  // oracle orbit count over all classes
  bool ok = false;
};

// Pairs each cycle type with the oracle's per-class orbit count and the
// symbolic prediction; ok iff every pair and the totals agree.
inline VerifyReport verify_counts(int n, int m,
                                  std::uint64_t budget = default_point_budget) {
  FiniteAction action = build_sn_action(n, m, budget);
  PairOrbitSet orbits = extended_quotient_orbits(action);

  std::map<Partition, std::uint64_t> per_class;
  for (const auto& orbit : orbits.orbits) {
    int gamma = orbits.pairs[orbit.front()].first;
    per_class[action.labels()[gamma]] += 1;
  }

  VerifyReport report;
  report.n = n;
  report.m = m;
  report.ok = true;
  std::uint64_t symbolic_total = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    VerifyClass vc{lambda, 0, 0};
    auto it = per_class.find(lambda);
    vc.oracle = it == per_class.end() ? 0 : it->second;
    vc.symbolic = discrete_count(component_of(lambda), m);
    symbolic_total += vc.symbolic;
    if (vc.oracle != vc.symbolic) report.ok = false;
    report.classes.push_back(std::move(vc));
  }
  report.total = orbits.orbits.size();
  if (report.total != symbolic_total) report.ok = false;
  return report;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"partition", c.partition.parts()},
                       {"oracle", c.oracle},
                       {"symbolic", c.symbolic}});
  j["classes"] = classes;
  j["total"] = r.total;
  j["ok"] = r.ok;
  return j;
}

} // namespace eqt
