#pragma once

// A ⊗ x = b over the symmetrized semiring B_s ⋉ Z_max.
//
// The greatest-modulus candidate x̄_sym is built column by column from the
// tropical shadow; the system is solvable iff x̄_sym solves it. Minimal-modulus
// solutions come from extended covers K′ ∪ K″: K′ is a minimal cover of all
// rows by S_j(|x̄_sym|), K″ a minimal cover of the balanced rows K′ leaves
// unsatisfied by the sets S_j^✓ of columns able to balance them.

#include <optional>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/extended_cover.hpp"
#include "laytrop/scalar.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

struct SymSolveReport {
  Vector<Sym> xbar_sym;
  bool solvable = false;
  std::vector<Vector<Sym>> minimal_solutions;
  std::vector<CoverTrace> trace;  // parallel to minimal_solutions
  // Extended vectors that failed the final check. The construction guarantees
  // none; a nonzero count indicates a bug.
  std::vector<Vector<Sym>> rejected_candidates;
  std::size_t non_minimal_discarded = 0;
  std::size_t duplicates_discarded = 0;
};

namespace detail {

/// S̃_j: rows of S_j(x̄) with a signed right-hand side.
inline std::vector<IndexSet> signed_support(const System<Sym>& sys, const TropicalShadow& sh) {
  std::vector<IndexSet> r(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j)
    for (std::size_t i : sh.support[j])
      if (is_signed(sys.b[i])) r[j].push_back(i);
  return r;
}

}  // namespace detail

/// x̄_sym. For each column j with S̃_j = S_j(x̄) ∩ {signed rows}:
///   S̃_j empty                                 → x̄_j•
///   every A_ij (i ∈ S̃_j) signed, sign = sign(b_i)   → x̄_j
///   every A_ij (i ∈ S̃_j) signed, sign = ⊖sign(b_i)  → ⊖x̄_j
///   otherwise                                  → x̄_j − 1 (positive)
inline Vector<Sym> greatest_modulus_candidate(const System<Sym>& sys) {
  require_reduced(sys);
  const TropicalShadow sh = tropical_shadow(sys);
  const auto tilde = detail::signed_support(sys, sh);
  Vector<Sym> x(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    if (tilde[j].empty()) {
      x[j] = Sym(SymLayer::Balanced, sh.xbar[j]);
      continue;
    }
    bool agree = true, oppose = true;
    for (std::size_t i : tilde[j]) {
      const Sym& aij = sys.a(i, j);
      if (!is_signed(aij)) {
        agree = oppose = false;
        break;
      }
      if (sign(aij) == sign(sys.b[i]))
        oppose = false;
      else
        agree = false;
    }
    if (agree)
      x[j] = Sym(SymLayer::Plus, sh.xbar[j]);
    else if (oppose)
      x[j] = Sym(SymLayer::Minus, sh.xbar[j]);
    else
      x[j] = Sym(SymLayer::Plus, sh.xbar[j].predecessor());
  }
  return x;
}

inline bool is_solvable(const System<Sym>& sys) { return satisfies(sys, greatest_modulus_candidate(sys)); }

inline SymSolveReport minimal_modulus_solutions(const System<Sym>& sys, MinimalSearchOptions opt = {}) {
  SymSolveReport rep;
  rep.xbar_sym = greatest_modulus_candidate(sys);
  rep.solvable = satisfies(sys, rep.xbar_sym);
  if (!rep.solvable) return rep;

  const std::size_t m = sys.rows();
  const TropicalShadow sh = tropical_shadow(sys);
  const auto tilde = detail::signed_support(sys, sh);
  const Vector<Sym>& xs = rep.xbar_sym;
  const auto support = modulus_support(sys, modulus(xs));  // S_j(|x̄_sym|)
  const bool canonical = opt.max_candidates == std::numeric_limits<std::size_t>::max();

  std::vector<Candidate<Sym>> candidates;
  auto accept = [&](Vector<Sym> d, CoverTrace t) {
    if (satisfies(sys, d)) {
      candidates.push_back({std::move(d), std::move(t)});
      return candidates.size() < opt.max_candidates;
    }
    rep.rejected_candidates.push_back(std::move(d));
    return true;
  };

  visit_covers(CoverProblem{m, support}, canonical, [&](const IndexSet& k1) {
    Vector<Sym> d = restrict_to(xs, k1);
    const Vector<Sym> lhs = sys.a * d;
    if (lhs == sys.b) return accept(std::move(d), CoverTrace{k1, {}, {}, {}});

    CoverTrace base{k1, {}, {}, std::vector<IndexSet>(sys.cols())};
    for (std::size_t i = 0; i < m; ++i)
      if (is_balanced(sys.b[i]) && lhs[i] != sys.b[i]) base.unsatisfied.push_back(i);

    // S_j^✓ for j ∉ K′.
    for (std::size_t j = 0; j < sys.cols(); ++j) {
      if (contains(k1, j)) continue;
      for (std::size_t i : base.unsatisfied) {
        if (modulus(xs[j]) * modulus(sys.a(i, j)) != modulus(sys.b[i])) continue;
        const Sym& aij = sys.a(i, j);
        bool balances;
        if (tilde[j].empty()) {
          balances = true;
        } else if (is_balanced(aij)) {
          balances = true;
        } else {
          balances = is_signed(lhs[i]) && xs[j] * aij == with_sign(opposite(sign(lhs[i])), modulus(sys.b[i]));
        }
        if (balances) base.extension_sets[j].push_back(i);
      }
    }

    auto [sub, columns] = sub_cover_problem(base.unsatisfied, base.extension_sets, k1);
    return visit_covers(sub, canonical, [&](const IndexSet& local) {
      CoverTrace t = base;
      t.extension = map_indices(local, columns);
      Vector<Sym> e = d;
      for (std::size_t j : t.extension) e[j] = xs[j];
      return accept(std::move(e), std::move(t));
    });
  });

  auto filtered = filter_minimal(sys, support, std::move(candidates));
  rep.minimal_solutions = std::move(filtered.solutions);
  rep.trace = std::move(filtered.traces);
  rep.non_minimal_discarded = filtered.non_minimal;
  rep.duplicates_discarded = filtered.duplicates;
  return rep;
}

/// For a signed right-hand side: a solution whose modulus is a minimal
/// solution of the tropical shadow, found by trying every sign pattern on
/// every minimal cover of the shadow. Empty iff the system is unsolvable.
inline std::optional<Vector<Sym>> signed_rhs_witness(const System<Sym>& sys) {
  require_reduced(sys);
  for (const auto& bi : sys.b)
    if (!is_signed(bi)) throw RightHandSideNotSigned();
  const TropicalShadow sh = tropical_shadow(sys);
  const TropSolveReport trop = solve(sh.a, sh.b);
  for (const auto& k : trop.minimal_covers) {
    if (k.size() >= 63) throw Error("cover too large for sign enumeration");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k.size()); ++mask) {
      Vector<Sym> x(sys.cols(), Sym::zero());
      for (std::size_t t = 0; t < k.size(); ++t)
        x[k[t]] = with_sign((mask >> t) & 1 ? Sign::Minus : Sign::Plus, trop.xbar[k[t]]);
      if (satisfies(sys, x)) return x;
    }
  }
  return std::nullopt;
}

inline bool signed_rhs_shortcut(const System<Sym>& sys) { return signed_rhs_witness(sys).has_value(); }

}  // namespace laytrop
