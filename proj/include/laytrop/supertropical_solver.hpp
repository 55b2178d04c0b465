#pragma once

// A ⊗ x = b over the supertropical semiring N_2 ⋉ Z_max.
//
// Unlike the symmetrized case the candidate x̄_sup need not solve a solvable
// system: it does iff the system is solvable and every tangible equation is
// hit at full modulus by exactly one column (the tangible condition). Extended
// covers still reach every minimal-modulus solution, but the extended vectors
// must each be checked.

#include <optional>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/extended_cover.hpp"
#include "laytrop/scalar.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

struct SupSolveReport {
  Vector<Sup> xbar_sup;
  bool xbar_sup_is_solution = false;
  bool tangible_condition = false;
  bool solvable = false;
  std::vector<Vector<Sup>> minimal_solutions;
  std::vector<CoverTrace> trace;  // parallel to minimal_solutions
  std::vector<Vector<Sup>> rejected_candidates;
  std::size_t non_minimal_discarded = 0;
  std::size_t duplicates_discarded = 0;
};

namespace detail {

/// S̃_j: rows of S_j(x̄) with a tangible right-hand side.
inline std::vector<IndexSet> tangible_support(const System<Sup>& sys, const TropicalShadow& sh) {
  std::vector<IndexSet> r(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j)
    for (std::size_t i : sh.support[j])
      if (is_tangible(sys.b[i])) r[j].push_back(i);
  return r;
}

}  // namespace detail

/// x̄_sup. For each column j with S̃_j = S_j(x̄) ∩ {tangible rows}:
///   S̃_j empty                        → x̄_j°
///   no ghost among A_ij, i ∈ S̃_j      → x̄_j
///   otherwise                         → x̄_j − 1
inline Vector<Sup> greatest_modulus_candidate(const System<Sup>& sys) {
  require_reduced(sys);
  const TropicalShadow sh = tropical_shadow(sys);
  const auto tilde = detail::tangible_support(sys, sh);
  Vector<Sup> x(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    if (tilde[j].empty()) {
      x[j] = Sup(SupLayer::Ghost, sh.xbar[j]);
      continue;
    }
    bool ghost_entry = false;
    for (std::size_t i : tilde[j]) ghost_entry = ghost_entry || is_ghost(sys.a(i, j));
    x[j] = Sup(SupLayer::Tangible, ghost_entry ? sh.xbar[j].predecessor() : sh.xbar[j]);
  }
  return x;
}

/// Every tangible row i lies in S̃_j for exactly one j with |x̄_sup,j| = x̄_j.
inline bool tangible_condition(const System<Sup>& sys, const Vector<Sup>& xbar_sup) {
  require_reduced(sys);
  if (xbar_sup.size() != sys.cols()) throw ShapeMismatch("candidate of the wrong length");
  const TropicalShadow sh = tropical_shadow(sys);
  const auto tilde = detail::tangible_support(sys, sh);
  std::vector<std::size_t> hits(sys.rows(), 0);
  for (std::size_t j = 0; j < sys.cols(); ++j)
    if (modulus(xbar_sup[j]) == sh.xbar[j])
      for (std::size_t i : tilde[j]) ++hits[i];
  for (std::size_t i = 0; i < sys.rows(); ++i)
    if (is_tangible(sys.b[i]) && hits[i] != 1) return false;
  return true;
}

/// x̄_sup when it solves the system; it then dominates every solution in modulus.
inline std::optional<Vector<Sup>> greatest_modulus_solution(const System<Sup>& sys) {
  auto x = greatest_modulus_candidate(sys);
  if (satisfies(sys, x)) return x;
  return std::nullopt;
}

/// The unique solution x̄ when b is all tangible, the tangible condition holds
/// and S_j(|x̄_sup|) is nonempty for every j; empty otherwise.
inline std::optional<Vector<Sup>> unique_solution_check(const System<Sup>& sys) {
  require_reduced(sys);
  for (const auto& bi : sys.b)
    if (!is_tangible(bi)) return std::nullopt;
  const auto xs = greatest_modulus_candidate(sys);
  if (!tangible_condition(sys, xs)) return std::nullopt;
  for (const auto& s : modulus_support(sys, modulus(xs)))
    if (s.empty()) return std::nullopt;
  if (!satisfies(sys, xs)) return std::nullopt;
  return xs;
}

inline SupSolveReport minimal_modulus_solutions(const System<Sup>& sys, MinimalSearchOptions opt = {}) {
  SupSolveReport rep;
  rep.xbar_sup = greatest_modulus_candidate(sys);
  rep.tangible_condition = tangible_condition(sys, rep.xbar_sup);
  rep.xbar_sup_is_solution = satisfies(sys, rep.xbar_sup);

  const std::size_t m = sys.rows();
  const Vector<Sup>& xs = rep.xbar_sup;
  const auto support = modulus_support(sys, modulus(xs));  // S_j(|x̄_sup|)
  const bool canonical = opt.max_candidates == std::numeric_limits<std::size_t>::max();

  std::vector<Candidate<Sup>> candidates;
  auto accept = [&](Vector<Sup> d, CoverTrace t) {
    if (satisfies(sys, d)) {
      candidates.push_back({std::move(d), std::move(t)});
      return candidates.size() < opt.max_candidates;
    }
    rep.rejected_candidates.push_back(std::move(d));
    return true;
  };

  visit_covers(CoverProblem{m, support}, canonical, [&](const IndexSet& k1) {
    Vector<Sup> d = restrict_to(xs, k1);
    const Vector<Sup> lhs = sys.a * d;
    if (lhs == sys.b) return accept(std::move(d), CoverTrace{k1, {}, {}, {}});

    CoverTrace base{k1, {}, {}, std::vector<IndexSet>(sys.cols())};
    for (std::size_t i = 0; i < m; ++i)
      if (is_ghost(sys.b[i]) && lhs[i] != sys.b[i]) base.unsatisfied.push_back(i);
    for (std::size_t j = 0; j < sys.cols(); ++j) {
      if (contains(k1, j)) continue;
      for (std::size_t i : support[j])
        if (contains(base.unsatisfied, i)) base.extension_sets[j].push_back(i);
    }

    auto [sub, columns] = sub_cover_problem(base.unsatisfied, base.extension_sets, k1);
    return visit_covers(sub, canonical, [&](const IndexSet& local) {
      CoverTrace t = base;
      t.extension = map_indices(local, columns);
      Vector<Sup> e = d;
      for (std::size_t j : t.extension) e[j] = xs[j];
      return accept(std::move(e), std::move(t));
    });
  });

  auto filtered = filter_minimal(sys, support, std::move(candidates));
  rep.minimal_solutions = std::move(filtered.solutions);
  rep.trace = std::move(filtered.traces);
  rep.non_minimal_discarded = filtered.non_minimal;
  rep.duplicates_discarded = filtered.duplicates;
  rep.solvable = !rep.minimal_solutions.empty();
  return rep;
}

}  // namespace laytrop
