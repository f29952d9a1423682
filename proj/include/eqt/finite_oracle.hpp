#pragma once

// Brute-force ground truth: explicit permutation actions of finite groups on
// finite point sets, fixed-point sets, and extended-quotient orbits of pairs
// (gamma, x) with gamma x = x under g.(gamma, x) = (g gamma g^-1, g x).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "eqt/errors.hpp"
#include "eqt/partitions.hpp"

namespace eqt {

// A permutation given as its image array: perm[x] is the image of x.
using Perm = std::vector<int>;

namespace detail {

inline Perm compose(const Perm& f, const Perm& g) {
  // (f . g)(x) = f(g(x))
  Perm h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

inline Perm inverse(const Perm& f) {
  Perm h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[f[x]] = static_cast<int>(x);
  return h;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace detail

// An explicit action of a finite group on points {0, ..., |X|-1}. The group
// is a list of distinct permutations (of any degree, e.g. torus coordinates)
// closed under composition and inverse with the identity at index 0; the
// action assigns one point permutation per element and must be a
// homomorphism. The action need not be faithful: distinct elements may move
// points identically. Both properties are verified on construction.
class FiniteAction {
public:
  // Faithful convenience form: the elements themselves are the group.
  FiniteAction(int num_points, std::vector<Perm> elements,
               std::vector<Partition> labels = {})
      : FiniteAction(num_points, elements, elements, std::move(labels)) {}

  FiniteAction(int num_points, std::vector<Perm> group_perms,
               std::vector<Perm> point_action, std::vector<Partition> labels = {})
      : num_points_(num_points), group_(std::move(group_perms)),
        action_(std::move(point_action)), labels_(std::move(labels)) {
    if (num_points_ < 1) throw domain_error("FiniteAction: empty point set");
    if (group_.empty()) throw domain_error("FiniteAction: empty group");
    if (action_.size() != group_.size())
      throw domain_error("FiniteAction: action size mismatch");
    if (!labels_.empty() && labels_.size() != group_.size())
      throw domain_error("FiniteAction: label count mismatch");
    for (std::size_t i = 0; i < group_.size(); ++i) {
      if (action_[i].size() != static_cast<std::size_t>(num_points_))
        throw domain_error("FiniteAction: point permutation degree mismatch");
      if (group_[i].size() != group_[0].size())
        throw domain_error("FiniteAction: group element degree mismatch");
      if (!index_.emplace(group_[i], static_cast<int>(i)).second)
        throw domain_error("FiniteAction: duplicate group element");
    }
    for (std::size_t x = 0; x < group_[0].size(); ++x)
      if (group_[0][x] != static_cast<int>(x))
        throw domain_error("FiniteAction: element 0 is not the identity");
    for (int x = 0; x < num_points_; ++x)
      if (action_[0][x] != x)
        throw domain_error("FiniteAction: identity does not act trivially");
    for (std::size_t g = 0; g < group_.size(); ++g) {
      if (!index_.contains(detail::inverse(group_[g])))
        throw domain_error("FiniteAction: not closed under inverse");
      for (std::size_t h = 0; h < group_.size(); ++h) {
        auto it = index_.find(detail::compose(group_[g], group_[h]));
        if (it == index_.end())
          throw domain_error("FiniteAction: not closed under composition");
        if (action_[it->second] != detail::compose(action_[g], action_[h]))
          throw domain_error("FiniteAction: action is not a homomorphism");
      }
    }
  }

  int num_points() const { return num_points_; }
  int order() const { return static_cast<int>(group_.size()); }
  const std::vector<Perm>& elements() const { return group_; }
  const Perm& point_perm(int g) const { return action_[g]; }
  const std::vector<Partition>& labels() const { return labels_; }

  int index_of(const Perm& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
      throw domain_error("FiniteAction: foreign group element");
    return it->second;
  }

  int compose(int g, int h) const {
    return index_of(detail::compose(group_[g], group_[h]));
  }

  int inverse(int g) const { return index_of(detail::inverse(group_[g])); }

  // g gamma g^-1, as an element index.
  int conjugate(int g, int gamma) const {
    return index_of(detail::compose(detail::compose(group_[g], group_[gamma]),
                                    detail::inverse(group_[g])));
  }

  // Conjugacy classes by direct conjugation sweep, each sorted, ordered by
  // least member; the identity class comes first.
  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<bool> seen(group_.size(), false);
    std::vector<std::vector<int>> classes;
    for (int gamma = 0; gamma < order(); ++gamma) {
      if (seen[gamma]) continue;
      std::vector<int> cls;
      for (int g = 0; g < order(); ++g) {
        int c = conjugate(g, gamma);
        if (!seen[c]) {
          seen[c] = true;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

private:
  int num_points_;
  std::vector<Perm> group_;
  std::vector<Perm> action_;
  std::vector<Partition> labels_;
  std::map<Perm, int> index_;
};

inline std::vector<int> fixed_points(int gamma, const FiniteAction& a) {
  if (gamma < 0 || gamma >= a.order())
    throw domain_error("fixed_points: foreign group element");
  std::vector<int> fixed;
  const Perm& g = a.point_perm(gamma);
  for (int x = 0; x < a.num_points(); ++x)
    if (g[x] == x) fixed.push_back(x);
  return fixed;
}

// All pairs (gamma, x) with gamma x = x, grouped into orbits under
// g.(gamma, x) = (g gamma g^-1, g x). Pairs are listed in lexicographic
// order; each orbit is the sorted list of pair indices and orbits are ordered
// by their lexicographically least pair.
struct PairOrbitSet {
  std::vector<std::pair<int, int>> pairs;  // (gamma index, point index)
  std::vector<std::vector<int>> orbits;    // indices into pairs
};

inline PairOrbitSet extended_quotient_orbits(const FiniteAction& a) {
  PairOrbitSet result;
  std::map<std::pair<int, int>, int> pair_index;
  for (int gamma = 0; gamma < a.order(); ++gamma)
    for (int x : fixed_points(gamma, a)) {
      pair_index.emplace(std::make_pair(gamma, x),
                         static_cast<int>(result.pairs.size()));
      result.pairs.emplace_back(gamma, x);
    }

  detail::DisjointSets sets(static_cast<int>(result.pairs.size()));
  std::vector<int> conj(a.order());
  for (int g = 0; g < a.order(); ++g) {
    const Perm& gp = a.point_perm(g);
    for (int gamma = 0; gamma < a.order(); ++gamma)
      conj[gamma] = a.conjugate(g, gamma);
    for (int p = 0; p < static_cast<int>(result.pairs.size()); ++p) {
      auto [gamma, x] = result.pairs[p];
      int q = pair_index.at({conj[gamma], gp[x]});
      sets.unite(p, q);
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (int p = 0; p < static_cast<int>(result.pairs.size()); ++p)
    by_root[sets.find(p)].push_back(p);
  for (auto& [root, members] : by_root)
    result.orbits.push_back(std::move(members));
  return result;
}

// Orbit count by averaging: (1/|G|) sum over g of #{(gamma, x) : gamma x = x,
// g gamma g^-1 = gamma, g x = x}. Must be integral for a valid group table.
inline std::uint64_t burnside_pair_count(const FiniteAction& a) {
  std::uint64_t total = 0;
  for (int g = 0; g < a.order(); ++g) {
    const Perm& gp = a.point_perm(g);
    for (int gamma = 0; gamma < a.order(); ++gamma) {
      if (a.conjugate(g, gamma) != gamma) continue;
      const Perm& cp = a.point_perm(gamma);
      for (int x = 0; x < a.num_points(); ++x)
        if (cp[x] == x && gp[x] == x) ++total;
    }
  }
  if (total % static_cast<std::uint64_t>(a.order()) != 0)
    throw internal_error("burnside_pair_count: non-integral average");
  return total / static_cast<std::uint64_t>(a.order());
}

} // namespace eqt
