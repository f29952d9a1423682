#pragma once

// Desk-scale model of the Bernstein spectrum of GL(n): shapes of spectrum
// points, their exponents, d(s) and W(s), Morita classification by exponent
// multiset, and the tempered component decomposition.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqt/errors.hpp"
#include "eqt/symbolic_eq.hpp"

namespace eqt {

struct ShapeEntry {
  std::string cuspidal_id;  // opaque label; pairwise distinct within a shape
  int block_size = 1;       // m: the GL(m) carrying the cuspidal
  int exponent = 1;         // e: how many times it repeats
};

// A point of the Bernstein spectrum, abstracted to its (block size, exponent)
// data. Entries are kept sorted by (block_size desc, exponent desc); only the
// labels distinguish entries with equal (m, e).
class BernsteinShape {
public:
  explicit BernsteinShape(std::vector<ShapeEntry> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty())
      throw domain_error("BernsteinShape: entries must be nonempty");
    std::set<std::string> labels;
    for (const auto& e : entries_) {
      if (e.block_size < 1 || e.exponent < 1)
        throw domain_error("BernsteinShape: block size and exponent must be positive");
      if (!labels.insert(e.cuspidal_id).second)
        throw domain_error("BernsteinShape: duplicate cuspidal label");
      n_ += e.block_size * e.exponent;
    }
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const ShapeEntry& a, const ShapeEntry& b) {
                       if (a.block_size != b.block_size)
                         return a.block_size > b.block_size;
                       return a.exponent > b.exponent;
                     });
  }

  const std::vector<ShapeEntry>& entries() const { return entries_; }
  int n() const { return n_; }

private:
  std::vector<ShapeEntry> entries_;
  int n_ = 0;
};

inline BernsteinShape make_shape(std::vector<ShapeEntry> entries) {
  return BernsteinShape(std::move(entries));
}

struct ShapeInvariants {
  std::vector<int> exponents;     // canonical (decreasing) order
  int d = 0;                      // sum of exponents
  std::vector<int> weyl_factors;  // degrees of W(s) = prod S_{e_j}
};

inline ShapeInvariants invariants(const BernsteinShape& s) {
  ShapeInvariants inv;
  for (const auto& e : s.entries()) inv.exponents.push_back(e.exponent);
  std::sort(inv.exponents.rbegin(), inv.exponents.rend());
  for (int e : inv.exponents) inv.d += e;
  inv.weyl_factors = inv.exponents;
  return inv;
}

// s1 ~ s2 iff the exponent multisets agree; this is exactly when the
// associated summands are strongly Morita equivalent.
inline bool morita_equivalent(const BernsteinShape& s1, const BernsteinShape& s2) {
  return invariants(s1).exponents == invariants(s2).exponents;
}

// The tempered component attached to s: the extended quotient of T^{d(s)} by
// W(s), computed over the canonical exponent list.
inline EqDecomposition tempered_decomposition(const BernsteinShape& s) {
  return eq_of_sym_product(invariants(s).exponents);
}

// All shapes with total n: multisets of (block size, exponent) pairs with
// sum m*e = n, labels assigned deterministically. Each shape stands for
// infinitely many actual spectrum points; only the shape is enumerated.
inline std::vector<BernsteinShape> enumerate_shapes(int n) {
  if (n < 1) throw domain_error("enumerate_shapes: n must be positive");
  std::vector<BernsteinShape> out;
  std::vector<std::pair<int, int>> current;  // (m, e), nonincreasing
  auto emit = [&] {
    std::vector<ShapeEntry> entries;
    for (std::size_t i = 0; i < current.size(); ++i)
      entries.push_back({"s" + std::to_string(i + 1), current[i].first,
                         current[i].second});
    out.emplace_back(std::move(entries));
  };
  auto descend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int m = remaining; m >= 1; --m) {
      for (int e = remaining / m; e >= 1; --e) {
        if (m * e > remaining) continue;
        if (!current.empty()) {
          auto [pm, pe] = current.back();
          if (m > pm || (m == pm && e > pe)) continue;
        }
        current.emplace_back(m, e);
        self(self, remaining - m * e);
        current.pop_back();
      }
    }
  };
  descend(descend, n);
  return out;
}

// Grammar: entries separated by ";", each "m:e"; labels auto-assigned.
inline BernsteinShape parse_shape(const std::string& text) {
  std::vector<ShapeEntry> entries;
  std::size_t pos = 0;
  int label = 1;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw domain_error("parse_shape: expected m:e in \"" + item + "\"");
    int m = 0, e = 0;
    try {
      std::size_t consumed = 0;
      m = std::stoi(item.substr(0, colon), &consumed);
      if (consumed != colon) throw domain_error("");
      e = std::stoi(item.substr(colon + 1), &consumed);
      if (consumed != item.size() - colon - 1) throw domain_error("");
    } catch (const std::exception&) {
      throw domain_error("parse_shape: malformed entry \"" + item + "\"");
    }
    entries.push_back({"s" + std::to_string(label++), m, e});
    pos = end + 1;
    if (end == text.size()) break;
  }
  return BernsteinShape(std::move(entries));
}

inline nlohmann::ordered_json to_json(const BernsteinShape& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : s.entries())
    entries.push_back({{"m", e.block_size}, {"e", e.exponent}});
  j["entries"] = entries;
  ShapeInvariants inv = invariants(s);
  j["exponents"] = inv.exponents;
  j["d"] = inv.d;
  j["weyl"] = inv.weyl_factors;
  return j;
}

} // namespace eqt
