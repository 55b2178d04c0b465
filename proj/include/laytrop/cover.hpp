#pragma once

// Enumeration of inclusion-minimal set covers (minimal hypergraph transversals)
// at desk scale.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

/// Universe {0, …, universe−1} and indexed subsets of it.
struct CoverProblem {
  std::size_t universe = 0;
  std::vector<IndexSet> subsets;
};

/// Cardinality first, then lexicographic.
inline bool canonical_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline bool is_cover(const CoverProblem& p, const IndexSet& k) {
  std::vector<bool> hit(p.universe, false);
  std::size_t count = 0;
  for (std::size_t j : k)
    for (std::size_t e : p.subsets.at(j))
      if (!hit[e]) {
        hit[e] = true;
        ++count;
      }
  return count == p.universe;
}

inline bool is_minimal_cover(const CoverProblem& p, const IndexSet& k) {
  if (!is_cover(p, k)) return false;
  for (std::size_t drop = 0; drop < k.size(); ++drop) {
    IndexSet rest;
    for (std::size_t t = 0; t < k.size(); ++t)
      if (t != drop) rest.push_back(k[t]);
    if (is_cover(p, rest)) return false;
  }
  return true;
}

namespace detail {

class CoverSearch {
 public:
  explicit CoverSearch(const CoverProblem& p) : p_(p), count_(p.universe, 0), excluded_(p.subsets.size(), false) {
    containing_.resize(p.universe);
    for (std::size_t j = 0; j < p.subsets.size(); ++j)
      for (std::size_t e : p.subsets[j]) {
        if (e >= p.universe)
          throw std::out_of_range("subset " + std::to_string(j) + " has element " + std::to_string(e) +
                                  " outside the universe");
        containing_[e].push_back(j);
      }
  }

  template <class Visit>
  bool run(Visit& visit) {
    return dfs(visit);
  }

 private:
  // Branch on the lowest uncovered element over the subsets containing it.
  // Siblings already tried are excluded further down, so each minimal cover is
  // reached through its smallest set containing that element only.
  template <class Visit>
  bool dfs(Visit& visit) {
    std::size_t e = 0;
    while (e < p_.universe && count_[e] > 0) ++e;
    if (e == p_.universe) {
      IndexSet k = chosen_;
      std::sort(k.begin(), k.end());
      return visit(static_cast<const IndexSet&>(k));
    }
    std::vector<std::size_t> tried;
    bool go_on = true;
    for (std::size_t j : containing_[e]) {
      if (excluded_[j]) continue;
      add(j);
      if (no_redundant_member()) go_on = dfs(visit);
      remove(j);
      excluded_[j] = true;
      tried.push_back(j);
      if (!go_on) break;
    }
    for (std::size_t j : tried) excluded_[j] = false;
    return go_on;
  }

  void add(std::size_t j) {
    chosen_.push_back(j);
    for (std::size_t e : p_.subsets[j]) ++count_[e];
  }

  void remove(std::size_t j) {
    chosen_.pop_back();
    for (std::size_t e : p_.subsets[j]) --count_[e];
  }

  // Redundancy is monotone under adding sets, so a redundant member rules out
  // every completion of the current branch.
  bool no_redundant_member() const {
    for (std::size_t k : chosen_) {
      bool needed = false;
      for (std::size_t e : p_.subsets[k])
        if (count_[e] == 1) {
          needed = true;
          break;
        }
      if (!needed) return false;
    }
    return true;
  }

  const CoverProblem& p_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> count_;
  std::vector<bool> excluded_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Calls visit(K) for every minimal cover K (sorted indices) in search order.
/// The visitor returns false to stop early; the function returns false iff it
/// was stopped.
template <class Visit>
bool for_each_minimal_cover(const CoverProblem& p, Visit&& visit) {
  detail::CoverSearch search(p);
  return search.run(visit);
}

/// Every minimal cover, in canonical order. Empty iff no cover exists.
inline std::vector<IndexSet> all_minimal_covers(const CoverProblem& p) {
  std::vector<IndexSet> out;
  for_each_minimal_cover(p, [&](const IndexSet& k) {
    out.push_back(k);
    return true;
  });
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Prunes a cover to an inclusion-minimal subcover, dropping indices in
/// increasing order whenever the rest still covers.
inline IndexSet extend_to_minimal(const CoverProblem& p, IndexSet k) {
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (!is_cover(p, k)) throw NotACover();
  for (std::size_t t = 0; t < k.size();) {
    IndexSet rest = k;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
    if (is_cover(p, rest))
      k = std::move(rest);
    else
      ++t;
  }
  return k;
}

}  // namespace laytrop
