#pragma once

// Brute-force reference: every vector of a finite per-column candidate grid
// that solves A ⊗ x = b. Shares no code path with the solvers beyond scalar
// and matrix arithmetic.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/matrix.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

inline constexpr std::uint64_t kDefaultGridLimit = 10'000'000;

template <Scalar S>
struct CandidateGrid {
  std::vector<std::vector<S>> columns;

  /// Number of grid vectors, saturating at uint64 max.
  std::uint64_t size() const noexcept {
    std::uint64_t total = 1;
    for (const auto& c : columns) {
      if (c.empty()) return 0;
      if (total > std::numeric_limits<std::uint64_t>::max() / c.size()) return std::numeric_limits<std::uint64_t>::max();
      total *= c.size();
    }
    return total;
  }
};

namespace oracle_detail {

template <class L>
std::vector<Layered<L>> layered_with_magnitude(Trop v) {
  std::vector<Layered<L>> r;
  for (auto layer : L::kNonzero) r.emplace_back(layer, v);
  return r;
}

template <Scalar S>
std::vector<S> with_magnitude(Trop v) {
  if constexpr (std::same_as<S, Trop>)
    return {v};
  else if constexpr (std::same_as<S, Sym>)
    return layered_with_magnitude<SymLayers>(v);
  else
    return layered_with_magnitude<SupLayers>(v);
}

/// x̄_j = min_i (|b_i| − |A_ij|) over finite |A_ij|, written out independently
/// of the tropical solver.
template <Scalar S>
std::vector<Trop> shadow_bound(const System<S>& sys) {
  std::vector<Trop> x(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    bool any = false;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
      Trop aij = modulus(sys.a(i, j)), bi = modulus(sys.b[i]);
      if (bi.is_zero()) throw UnreducedSystem("oracle grid needs a finite right-hand side");
      if (aij.is_zero()) continue;
      std::int64_t v = bi.value() - aij.value();
      if (!any || v < best) best = v;
      any = true;
    }
    if (!any) throw UnreducedSystem("oracle grid needs a finite entry in every column");
    x[j] = Trop(best);
  }
  return x;
}

}  // namespace oracle_detail

/// Per column j: zero, then every nonzero layer at x̄_j, then at x̄_j − 1.
template <Scalar S>
CandidateGrid<S> default_grid(const System<S>& sys) {
  CandidateGrid<S> g;
  for (Trop v : oracle_detail::shadow_bound(sys)) {
    std::vector<S> col{S::zero()};
    for (const S& s : oracle_detail::with_magnitude<S>(v)) col.push_back(s);
    for (const S& s : oracle_detail::with_magnitude<S>(v.predecessor())) col.push_back(s);
    g.columns.push_back(std::move(col));
  }
  return g;
}

/// The classical 2ⁿ grid {x̄_j, −∞} for tropical systems.
inline CandidateGrid<Trop> tropical_grid(const System<Trop>& sys) {
  CandidateGrid<Trop> g;
  for (Trop v : oracle_detail::shadow_bound(sys)) g.columns.push_back({Trop::zero(), v});
  return g;
}

/// Every grid vector solving the system, in odometer order (first column
/// slowest, each column in grid order).
template <Scalar S>
std::vector<Vector<S>> enumerate_solutions(const System<S>& sys, const CandidateGrid<S>& grid,
                                           std::uint64_t limit = kDefaultGridLimit) {
  if (grid.columns.size() != sys.cols()) throw ShapeMismatch("grid must have one candidate set per column");
  const std::uint64_t total = grid.size();
  if (total > limit)
    throw GridTooLarge("grid has " + (total == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                                             : std::to_string(total)) +
                       " points, limit is " + std::to_string(limit));
  std::vector<Vector<S>> out;
  if (total == 0) return out;
  const std::size_t n = sys.cols();
  std::vector<std::size_t> pos(n, 0);
  Vector<S> x(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) x[j] = grid.columns[j][pos[j]];
    if (satisfies(sys, x)) out.push_back(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++pos[j] < grid.columns[j].size()) break;
      pos[j] = 0;
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

/// Minimal elements of the solutions' modulus vectors under the componentwise
/// order, deduplicated and sorted.
template <Scalar S>
std::vector<Vector<Trop>> minimal_modulus_set(const std::vector<Vector<S>>& solutions) {
  std::vector<Vector<Trop>> mods;
  for (const auto& x : solutions) mods.push_back(modulus(x));
  std::sort(mods.begin(), mods.end());
  mods.erase(std::unique(mods.begin(), mods.end()), mods.end());
  std::vector<Vector<Trop>> out;
  for (const auto& v : mods) {
    bool minimal = true;
    for (const auto& u : mods)
      if (u != v && dominated(u, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(v);
  }
  return out;
}

}  // namespace laytrop
