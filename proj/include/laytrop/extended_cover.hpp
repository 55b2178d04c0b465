#pragma once

// Machinery shared by the symmetrized and supertropical minimal-modulus
// solvers: the tropical shadow of a layered system, the (K′, K″) trace of an
// extended cover, and the final minimality filter with modulus deduplication.

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "laytrop/cover.hpp"
#include "laytrop/system.hpp"
#include "laytrop/tropical_solver.hpp"

namespace laytrop {

/// |A| ⊗ z = |b| together with its greatest solution x̄ and the sets S_j(x̄).
struct TropicalShadow {
  Matrix<Trop> a;
  Vector<Trop> b;
  Vector<Trop> xbar;
  std::vector<IndexSet> support;
};

template <Scalar S>
TropicalShadow tropical_shadow(const System<S>& sys) {
  TropicalShadow sh{modulus(sys.a), modulus(sys.b), {}, {}};
  sh.xbar = greatest_solution(sh.a, sh.b);
  sh.support = support_sets(sh.a, sh.b, sh.xbar);
  return sh;
}

/// How one candidate was built: K′ covers all rows by S_j(|x̄|); K″ covers the
/// rows K′ leaves unsatisfied (empty when K′ alone already works). Indices are
/// 0-based columns / rows of the system the solver was given.
struct CoverTrace {
  IndexSet primary;                        // K′
  IndexSet extension;                      // K″
  IndexSet unsatisfied;                    // M̃
  std::vector<IndexSet> extension_sets;    // per column, restricted to M̃; empty for j ∈ K′

  friend bool operator==(const CoverTrace&, const CoverTrace&) = default;
};

template <Scalar S>
struct Candidate {
  Vector<S> vector;
  CoverTrace trace;
};

struct MinimalSearchOptions {
  /// Stop once this many verified candidates exist (before the minimality
  /// filter). The default explores everything in canonical order.
  std::size_t max_candidates = std::numeric_limits<std::size_t>::max();
};

/// Result of the final stage of the minimal-modulus algorithms.
template <Scalar S>
struct FilteredSolutions {
  std::vector<Vector<S>> solutions;
  std::vector<CoverTrace> traces;
  std::size_t non_minimal = 0;
  std::size_t duplicates = 0;
};

/// Drops candidates that stay solutions after zeroing one finite component
/// with a nonempty support set, keeps the first candidate per modulus vector,
/// and orders the survivors by their nonzero column sets.
template <Scalar S>
FilteredSolutions<S> filter_minimal(const System<S>& sys, const std::vector<IndexSet>& support,
                                    std::vector<Candidate<S>> candidates) {
  FilteredSolutions<S> out;
  std::set<Vector<Trop>> seen;
  std::vector<std::pair<IndexSet, std::size_t>> order;
  std::vector<Candidate<S>> kept;
  for (auto& c : candidates) {
    bool reducible = false;
    for (std::size_t j = 0; j < c.vector.size() && !reducible; ++j) {
      if (is_zero(c.vector[j]) || support[j].empty()) continue;
      Vector<S> shrunk = c.vector;
      shrunk[j] = S::zero();
      reducible = satisfies(sys, shrunk);
    }
    if (reducible) {
      ++out.non_minimal;
      continue;
    }
    if (!seen.insert(modulus(c.vector)).second) {
      ++out.duplicates;
      continue;
    }
    IndexSet nz;
    for (std::size_t j = 0; j < c.vector.size(); ++j)
      if (!is_zero(c.vector[j])) nz.push_back(j);
    order.emplace_back(std::move(nz), kept.size());
    kept.push_back(std::move(c));
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [nz, idx] : order) {
    out.solutions.push_back(std::move(kept[idx].vector));
    out.traces.push_back(std::move(kept[idx].trace));
  }
  return out;
}

/// Minimal covers in canonical order, or in raw search order when `canonical`
/// is false (cheaper when the caller may stop early). Returns false if stopped.
template <class Visit>
bool visit_covers(const CoverProblem& p, bool canonical, Visit&& visit) {
  if (!canonical) return for_each_minimal_cover(p, visit);
  for (const auto& k : all_minimal_covers(p))
    if (!visit(k)) return false;
  return true;
}

/// Cover problem over the rows in `universe_rows` using, for every column not
/// in `excluded`, the given per-column row sets. Returns the problem and the
/// column behind each subset.
inline std::pair<CoverProblem, std::vector<std::size_t>> sub_cover_problem(
    const IndexSet& universe_rows, const std::vector<IndexSet>& column_rows, const IndexSet& excluded) {
  std::vector<std::size_t> position(universe_rows.empty() ? 0 : universe_rows.back() + 1,
                                    std::numeric_limits<std::size_t>::max());
  for (std::size_t t = 0; t < universe_rows.size(); ++t) position[universe_rows[t]] = t;
  CoverProblem p{universe_rows.size(), {}};
  std::vector<std::size_t> columns;
  for (std::size_t j = 0; j < column_rows.size(); ++j) {
    if (contains(excluded, j)) continue;
    IndexSet local;
    for (std::size_t i : column_rows[j])
      if (i < position.size() && position[i] != std::numeric_limits<std::size_t>::max()) local.push_back(position[i]);
    p.subsets.push_back(std::move(local));
    columns.push_back(j);
  }
  return {std::move(p), std::move(columns)};
}

inline IndexSet map_indices(const IndexSet& local, const std::vector<std::size_t>& columns) {
  IndexSet r;
  for (std::size_t t : local) r.push_back(columns[t]);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace laytrop
